#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qgs/circuit.hpp"
#include "qgs/state.hpp"

namespace qgs {

// The marked-set description over an n-qubit register: the undesired set S
// and its complement (the desired states). S may be empty (a classical run
// marking every state) but never the full register space.
struct OracleSpec {
    int n = 0;
    std::set<std::uint64_t> undesired;

    OracleSpec(int n, std::set<std::uint64_t> undesired);

    static OracleSpec from_targets(int n, const std::set<std::uint64_t>& targets);

    std::uint64_t total_states() const { return std::uint64_t{1} << n; }
    std::vector<std::uint64_t> desired() const;
};

enum class GroverMode { Classical, Suppression };

// How the suppression oracle treats its ancilla.
//   Entangled:          leading flip, marking MCX per enumerated state, Z.
//                       The desired states end phase-flipped with the
//                       ancilla raised.
//   EntangledTrailingX: same with one more ancilla flip at the end.
//   Uncomputed:         the marking MCX set is replayed after the Z so the
//                       ancilla returns to |0> and the oracle reduces to a
//                       clean phase flip on the desired states.
enum class AncillaHandling { Entangled, EntangledTrailingX, Uncomputed };

struct SuppressionOptions {
    AncillaHandling ancilla = AncillaHandling::Entangled;
};

// One MCX onto the ancilla per target, polarities matching the target bits.
// Spans n+1 qubits with the ancilla on top. Works as a phase oracle when
// the ancilla is prepared in (|0>-|1>)/sqrt(2). Marking every state is
// accepted: the oracle is then a global -1, so the run is a no-op on
// probabilities.
Circuit build_classical_oracle(const OracleSpec& spec,
                               const std::vector<std::uint64_t>& targets);

// The amplitude-suppression oracle O_S. Enumerates whichever of S and its
// complement is smaller, arranging the ancilla flip so the phased set is
// always the desired complement of S.
Circuit build_suppression_oracle(const OracleSpec& spec,
                                 const SuppressionOptions& opts = {});

enum class DiffuserSpan {
    RegisterOnly, // inversion about the mean on the register, ancilla untouched
    FullWidth     // conditional phase on |0...0> across register plus ancilla
};

// Diffuser over `register_qubits`, emitted into a circuit of `total_qubits`
// wires. RegisterOnly realizes exactly 2|psi><psi| - I (a four-gate global
// phase fixup pins the sign). FullWidth requires total = register + 1 and
// expands as: H on the register, X everywhere, an
// H-conjugated MCX onto the ancilla, X everywhere, H on the register.
Circuit build_diffuser(int register_qubits, int total_qubits, DiffuserSpan span);

// Same with an arbitrary register preparation A replacing H^n:
// A (phase flip on |0...0>) A^dagger.
Circuit build_diffuser_with_prep(const Circuit& state_prep, int register_qubits,
                                 int total_qubits, DiffuserSpan span);

struct IterationPlan {
    std::uint64_t total_states = 0;  // N = 2^n
    std::uint64_t driving_count = 0; // M: |S| in suppression mode, |targets| in classical
    std::uint64_t sweep_bound = 0;   // ceil(N / M)
    std::uint64_t optimal_k = 0;     // floor(pi / (4 asin(sqrt(m/N)))), m = marked count
};

IterationPlan plan_iterations(const OracleSpec& spec, GroverMode mode);

// sin^2((2k+1) asin(sqrt(m/N))): the success probability of standard
// amplitude amplification with m marked states after k rounds.
double closed_form_success(std::uint64_t total_states, std::uint64_t marked,
                           std::uint64_t iterations);

struct GroverConfig {
    OracleSpec spec;
    GroverMode mode = GroverMode::Classical;
    // Default: optimal_k in classical mode, sweep argmin P(S) in suppression.
    std::optional<int> iterations;
    // Register-only preparation A; default H on every register qubit.
    std::optional<Circuit> state_prep;
    SuppressionOptions suppression;
};

struct SweepPoint {
    int k = 0;
    double undesired_probability = 0.0;
};

struct GroverResult {
    std::vector<double> register_probabilities; // 2^n entries, ancilla summed out
    int iterations_used = 0;
    std::vector<SweepPoint> sweep; // filled when the iteration count came from a sweep
};

// The full pipeline over n+1 qubits as a single circuit from |0...0>:
// preparation (classical mode raises the ancilla into (|0>-|1>)/sqrt(2),
// suppression mode leaves it in |0>), then k oracle+diffuser rounds.
// Classical rounds use the register diffuser; suppression rounds span the
// ancilla as well.
Circuit build_grover_circuit(const GroverConfig& config, int iterations);

// P(S) after each k in [1, k_max] under the suppression pipeline.
std::vector<SweepPoint> sweep_suppression(const OracleSpec& spec, int k_max,
                                          const SuppressionOptions& opts = {},
                                          const std::optional<Circuit>& state_prep = {});

GroverResult run_grover(const GroverConfig& config);

} // namespace qgs
