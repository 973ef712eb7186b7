#include "qgs/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgs {

Circuit::Circuit(int num_qubits, std::optional<int> ancilla)
    : num_qubits_(num_qubits), ancilla_(ancilla) {
    if (num_qubits < 1 || num_qubits > 63)
        throw std::invalid_argument("circuit: qubit count must be in [1, 63]");
    if (ancilla && (*ancilla < 0 || *ancilla >= num_qubits))
        throw std::invalid_argument("circuit: ancilla index out of range");
}

Circuit& Circuit::add(GateOp g) {
    validate_gate(g, num_qubits_);
    gates_.push_back(std::move(g));
    return *this;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("compose: qubit-count mismatch (" +
                                    std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + ")");
    Circuit out(a.num_qubits(), a.ancilla() ? a.ancilla() : b.ancilla());
    for (const GateOp& g : a.gates()) out.add(g);
    for (const GateOp& g : b.gates()) out.add(g);
    return out;
}

Circuit adjoint(const Circuit& c) {
    Circuit out(c.num_qubits(), c.ancilla());
    const auto& gs = c.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.add(*it);
    return out;
}

GateCountReport count_gates(const Circuit& c) {
    GateCountReport r;
    for (const GateOp& g : c.gates()) {
        if (g.is_controlled())
            ++r.multi_controlled;
        else
            ++r.single_qubit;
    }
    return r;
}

std::string dump(const Circuit& c) {
    auto kind_name = [](GateKind k) {
        switch (k) {
            case GateKind::H: return "H";
            case GateKind::X: return "X";
            case GateKind::Z: return "Z";
            case GateKind::MCX: return "MCX";
            case GateKind::MCZ: return "MCZ";
        }
        return "?";
    };
    std::string out;
    for (const GateOp& g : c.gates()) {
        out += kind_name(g.kind);
        out += " t=" + std::to_string(g.target);
        if (!g.controls.empty()) {
            out += " c=";
            for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(g.controls[i].qubit);
                out += g.controls[i].polarity == Polarity::Closed ? '+' : '-';
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace qgs
