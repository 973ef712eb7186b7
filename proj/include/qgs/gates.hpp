#pragma once

#include <cstdint>
#include <vector>

namespace qgs {

enum class GateKind { H, X, Z, MCX, MCZ };

// A control fires on |1> (Closed, drawn as a filled dot) or on |0> (Open,
// drawn as an open circle).
enum class Polarity { Open, Closed };

struct Control {
    int qubit;
    Polarity polarity;

    friend bool operator==(const Control&, const Control&) = default;
};

// One gate instance. H/X/Z carry no controls; MCX/MCZ carry at least one.
// All five kinds are self-inverse.
struct GateOp {
    GateKind kind;
    int target;
    std::vector<Control> controls;

    static GateOp h(int target) { return {GateKind::H, target, {}}; }
    static GateOp x(int target) { return {GateKind::X, target, {}}; }
    static GateOp z(int target) { return {GateKind::Z, target, {}}; }
    static GateOp mcx(int target, std::vector<Control> controls) {
        return {GateKind::MCX, target, std::move(controls)};
    }
    static GateOp mcz(int target, std::vector<Control> controls) {
        return {GateKind::MCZ, target, std::move(controls)};
    }

    bool is_controlled() const { return kind == GateKind::MCX || kind == GateKind::MCZ; }

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

// Control polarities matching the bits of a basis index: closed where the
// bit is 1, open where it is 0. Controls run over qubits [0, n).
std::vector<Control> controls_for_basis(std::uint64_t index, int n);

// Throws std::invalid_argument on out-of-range indices, duplicate controls,
// a target among the controls, or a control list not matching the kind.
void validate_gate(const GateOp& g, int num_qubits);

} // namespace qgs
