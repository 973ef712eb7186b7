#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgs/gates.hpp"

namespace qgs {

struct GateCountReport {
    std::uint64_t single_qubit = 0;     // each H, X, Z counts as one
    std::uint64_t multi_controlled = 0; // each MCX/MCZ counts as one, any arity
    std::uint64_t total() const { return single_qubit + multi_controlled; }
};

// Ordered gate list over a fixed qubit count. Gates are stored flat so that
// counting is per-instance and unambiguous. Immutable once built (the
// mutating add() is for construction; callers share circuits by value).
class Circuit {
  public:
    explicit Circuit(int num_qubits, std::optional<int> ancilla = std::nullopt);

    int num_qubits() const { return num_qubits_; }
    std::optional<int> ancilla() const { return ancilla_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit& add(GateOp g); // validates against num_qubits

    Circuit& h(int target) { return add(GateOp::h(target)); }
    Circuit& x(int target) { return add(GateOp::x(target)); }
    Circuit& z(int target) { return add(GateOp::z(target)); }
    Circuit& mcx(int target, std::vector<Control> controls) {
        return add(GateOp::mcx(target, std::move(controls)));
    }
    Circuit& mcz(int target, std::vector<Control> controls) {
        return add(GateOp::mcz(target, std::move(controls)));
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    int num_qubits_;
    std::optional<int> ancilla_;
    std::vector<GateOp> gates_;
};

// Gates of a followed by gates of b. Throws on qubit-count mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

// Reversed gate list; every supported gate is self-inverse, so kinds are
// unchanged.
Circuit adjoint(const Circuit& c);

GateCountReport count_gates(const Circuit& c);

// Debug dump, one gate per line, e.g. "MCX t=3 c=0+,1-,2+" (+ closed,
// - open). Not a stability-guaranteed format.
std::string dump(const Circuit& c);

} // namespace qgs
