#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qgs/circuit.hpp"

namespace qgs {

using cplx = std::complex<double>;

// Qubit ceiling for state allocation: 24 by default (2^24 amplitudes,
// about 256 MiB), overridable through GROVER_SUPPRESS_MAX_QUBITS.
int max_qubits();

// Dense statevector over 2^q basis states, qubit 0 = least significant bit.
class StateVector {
  public:
    // |0...0>
    explicit StateVector(int num_qubits);

    static StateVector uniform(int num_qubits);
    static StateVector basis(int num_qubits, std::uint64_t index);
    // Throws unless the amplitude count is 2^num_qubits and the norm is 1
    // within 1e-10.
    static StateVector from_amplitudes(int num_qubits, std::vector<cplx> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t i) const { return amps_[i]; }
    double norm() const;

    friend void apply_gate(StateVector& state, const GateOp& g);

  private:
    int num_qubits_;
    std::vector<cplx> amps_;
};

// In-place single-gate application; O(2^q), norm preserving.
void apply_gate(StateVector& state, const GateOp& g);

// Gates applied in listed order. Throws on qubit-count mismatch.
StateVector run_circuit(const Circuit& circuit, StateVector initial);

// |a_i|^2 per basis index. Amplitudes below 1e-14 in magnitude report as
// exactly 0 to keep floating-point dust out of histograms.
std::vector<double> probabilities(const StateVector& state);

// Same, keyed by basis label; zero entries are omitted.
std::map<std::string, double> probability_map(const StateVector& state);

// Probabilities of the low q-1 qubits with the top qubit (the ancilla
// position) summed out.
std::vector<double> marginal_over_top(const StateVector& state);

// Multinomial sampling, deterministic for a fixed seed.
std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                            std::uint64_t shots, std::uint64_t seed);

} // namespace qgs
