#include "qgs/gates.hpp"

#include <stdexcept>
#include <string>

namespace qgs {

std::vector<Control> controls_for_basis(std::uint64_t index, int n) {
    std::vector<Control> controls;
    controls.reserve(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b)
        controls.push_back({b, (index >> b) & 1 ? Polarity::Closed : Polarity::Open});
    return controls;
}

void validate_gate(const GateOp& g, int num_qubits) {
    auto bad = [&](const std::string& what) {
        throw std::invalid_argument("invalid gate: " + what);
    };
    if (g.target < 0 || g.target >= num_qubits)
        bad("target " + std::to_string(g.target) + " out of range for " +
            std::to_string(num_qubits) + " qubits");
    if (g.is_controlled()) {
        if (g.controls.empty()) bad("MCX/MCZ requires at least one control");
    } else {
        if (!g.controls.empty()) bad("H/X/Z must not carry controls");
    }
    std::uint64_t seen = 0;
    for (const Control& c : g.controls) {
        if (c.qubit < 0 || c.qubit >= num_qubits)
            bad("control " + std::to_string(c.qubit) + " out of range");
        if (c.qubit == g.target) bad("target also listed as control");
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if (seen & bit) bad("duplicate control " + std::to_string(c.qubit));
        seen |= bit;
    }
}

} // namespace qgs
