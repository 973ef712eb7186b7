#include "qgs/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgs {

namespace {

Circuit default_prep(int n, int total) {
    Circuit a(total);
    for (int b = 0; b < n; ++b) a.h(b);
    return a;
}

// Register preparation block, widened to `total` wires.
Circuit widen(const Circuit& reg_circuit, int total) {
    Circuit out(total);
    for (const GateOp& g : reg_circuit.gates()) out.add(g);
    return out;
}

void check_state_prep(const Circuit& prep, int n) {
    for (const GateOp& g : prep.gates()) {
        if (g.target >= n)
            throw std::invalid_argument("grover: state_prep must act on register qubits only");
        for (const Control& c : g.controls)
            if (c.qubit >= n)
                throw std::invalid_argument("grover: state_prep must act on register qubits only");
    }
}

} // namespace

OracleSpec::OracleSpec(int n_, std::set<std::uint64_t> undesired_)
    : n(n_), undesired(std::move(undesired_)) {
    if (n < 1 || n > 62)
        throw std::invalid_argument("oracle spec: register size out of range");
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s : undesired)
        if (s >= total)
            throw std::invalid_argument("oracle spec: state index out of range");
    if (undesired.size() >= total)
        throw std::invalid_argument("oracle spec: undesired set must be a proper subset");
}

OracleSpec OracleSpec::from_targets(int n, const std::set<std::uint64_t>& targets) {
    if (targets.empty())
        throw std::invalid_argument("oracle spec: target set is empty");
    std::set<std::uint64_t> undesired;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t t : targets)
        if (t >= total)
            throw std::invalid_argument("oracle spec: target index out of range");
    for (std::uint64_t i = 0; i < total; ++i)
        if (!targets.contains(i)) undesired.insert(i);
    return OracleSpec(n, std::move(undesired));
}

std::vector<std::uint64_t> OracleSpec::desired() const {
    std::vector<std::uint64_t> out;
    out.reserve(total_states() - undesired.size());
    for (std::uint64_t i = 0; i < total_states(); ++i)
        if (!undesired.contains(i)) out.push_back(i);
    return out;
}

Circuit build_classical_oracle(const OracleSpec& spec,
                               const std::vector<std::uint64_t>& targets) {
    if (targets.empty())
        throw std::invalid_argument("classical oracle: target set is empty");
    std::set<std::uint64_t> seen;
    for (std::uint64_t t : targets) {
        if (t >= spec.total_states())
            throw std::invalid_argument("classical oracle: target out of range");
        if (!seen.insert(t).second)
            throw std::invalid_argument("classical oracle: duplicate target");
    }
    const int ancilla = spec.n;
    Circuit c(spec.n + 1, ancilla);
    for (std::uint64_t t : targets)
        c.mcx(ancilla, controls_for_basis(t, spec.n));
    return c;
}

Circuit build_suppression_oracle(const OracleSpec& spec, const SuppressionOptions& opts) {
    if (spec.undesired.empty())
        throw std::invalid_argument(
            "suppression oracle: empty undesired set would phase every state");
    const int ancilla = spec.n;
    Circuit c(spec.n + 1, ancilla);

    // Enumerate the smaller of S and its complement; with the leading flip
    // omitted in the complement case the phased set stays the desired one
    // and the two constructions are the same unitary.
    const bool enumerate_undesired =
        2 * spec.undesired.size() <= spec.total_states();
    std::vector<std::uint64_t> enumerated;
    if (enumerate_undesired)
        enumerated.assign(spec.undesired.begin(), spec.undesired.end());
    else
        enumerated = spec.desired();

    if (enumerate_undesired) c.x(ancilla);
    for (std::uint64_t s : enumerated)
        c.mcx(ancilla, controls_for_basis(s, spec.n));
    c.z(ancilla);

    switch (opts.ancilla) {
        case AncillaHandling::Entangled:
            break;
        case AncillaHandling::EntangledTrailingX:
            c.x(ancilla);
            break;
        case AncillaHandling::Uncomputed:
            for (std::uint64_t s : enumerated)
                c.mcx(ancilla, controls_for_basis(s, spec.n));
            if (enumerate_undesired) c.x(ancilla);
            break;
    }
    return c;
}

Circuit build_diffuser(int register_qubits, int total_qubits, DiffuserSpan span) {
    return build_diffuser_with_prep(default_prep(register_qubits, total_qubits),
                                    register_qubits, total_qubits, span);
}

Circuit build_diffuser_with_prep(const Circuit& state_prep, int register_qubits,
                                 int total_qubits, DiffuserSpan span) {
    if (total_qubits < 2)
        throw std::invalid_argument("diffuser: need at least 2 qubits");
    if (register_qubits < 1 || register_qubits > total_qubits)
        throw std::invalid_argument("diffuser: register size out of range");
    if (span == DiffuserSpan::FullWidth && total_qubits != register_qubits + 1)
        throw std::invalid_argument("diffuser: full width needs exactly one ancilla");
    check_state_prep(state_prep, register_qubits);

    const Circuit prep = widen(state_prep, total_qubits);
    Circuit c = adjoint(prep);

    if (span == DiffuserSpan::RegisterOnly) {
        for (int b = 0; b < register_qubits; ++b) c.x(b);
        if (register_qubits == 1) {
            c.z(0);
        } else {
            std::vector<Control> controls;
            for (int b = 1; b < register_qubits; ++b)
                controls.push_back({b, Polarity::Closed});
            c.mcz(0, std::move(controls));
        }
        for (int b = 0; b < register_qubits; ++b) c.x(b);
        // ZXZX = -I on one wire: pins the overall sign so the block equals
        // 2|0><0| - I rather than its negative.
        c.z(0).x(0).z(0).x(0);
    } else {
        const int ancilla = total_qubits - 1;
        for (int b = 0; b < total_qubits; ++b) c.x(b);
        c.h(ancilla);
        std::vector<Control> controls;
        for (int b = 0; b < register_qubits; ++b)
            controls.push_back({b, Polarity::Closed});
        c.mcx(ancilla, std::move(controls));
        c.h(ancilla);
        for (int b = 0; b < total_qubits; ++b) c.x(b);
    }

    for (const GateOp& g : prep.gates()) c.add(g);
    return c;
}

IterationPlan plan_iterations(const OracleSpec& spec, GroverMode mode) {
    IterationPlan plan;
    plan.total_states = spec.total_states();
    // Both modes amplify the complement of S; only the sweep bound's M
    // switches between the undesired and the marked count.
    const std::uint64_t marked = plan.total_states - spec.undesired.size();
    plan.driving_count =
        mode == GroverMode::Suppression ? spec.undesired.size() : marked;
    if (plan.driving_count == 0)
        throw std::invalid_argument("iteration plan: driving set is empty");
    plan.sweep_bound =
        (plan.total_states + plan.driving_count - 1) / plan.driving_count;
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) /
                                             static_cast<double>(plan.total_states)));
    plan.optimal_k =
        static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4.0 * theta)));
    return plan;
}

double closed_form_success(std::uint64_t total_states, std::uint64_t marked,
                           std::uint64_t iterations) {
    if (marked < 1 || marked > total_states)
        throw std::invalid_argument("closed form: marked count out of [1, N]");
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) /
                                             static_cast<double>(total_states)));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

Circuit build_grover_circuit(const GroverConfig& config, int iterations) {
    if (iterations < 0)
        throw std::invalid_argument("grover: iteration count must be >= 0");
    const int n = config.spec.n;
    const int total = n + 1;
    const int ancilla = n;

    Circuit prep_reg =
        config.state_prep ? *config.state_prep : default_prep(n, n);
    check_state_prep(prep_reg, n);

    Circuit c(total, ancilla);
    for (const GateOp& g : prep_reg.gates()) c.add(g);

    Circuit oracle(total);
    Circuit diffuser(total);
    if (config.mode == GroverMode::Classical) {
        c.x(ancilla).h(ancilla); // ancilla into (|0> - |1>)/sqrt(2)
        oracle = build_classical_oracle(config.spec, config.spec.desired());
        diffuser = build_diffuser_with_prep(prep_reg, n, total,
                                            DiffuserSpan::RegisterOnly);
    } else {
        oracle = build_suppression_oracle(config.spec, config.suppression);
        diffuser = build_diffuser_with_prep(prep_reg, n, total,
                                            DiffuserSpan::FullWidth);
    }

    for (int k = 0; k < iterations; ++k) {
        for (const GateOp& g : oracle.gates()) c.add(g);
        for (const GateOp& g : diffuser.gates()) c.add(g);
    }
    return c;
}

std::vector<SweepPoint> sweep_suppression(const OracleSpec& spec, int k_max,
                                          const SuppressionOptions& opts,
                                          const std::optional<Circuit>& state_prep) {
    GroverConfig cfg{spec, GroverMode::Suppression, std::nullopt, state_prep, opts};
    const int total = spec.n + 1;
    StateVector state = run_circuit(build_grover_circuit(cfg, 0), StateVector(total));

    Circuit round(total);
    {
        const Circuit oracle = build_suppression_oracle(spec, opts);
        const Circuit prep = state_prep ? *state_prep : default_prep(spec.n, spec.n);
        const Circuit diff =
            build_diffuser_with_prep(prep, spec.n, total, DiffuserSpan::FullWidth);
        round = compose(widen(oracle, total), diff);
    }

    std::vector<SweepPoint> sweep;
    for (int k = 1; k <= k_max; ++k) {
        state = run_circuit(round, std::move(state));
        const std::vector<double> marg = marginal_over_top(state);
        double p_undesired = 0.0;
        for (std::uint64_t s : spec.undesired) p_undesired += marg[s];
        sweep.push_back({k, p_undesired});
    }
    return sweep;
}

GroverResult run_grover(const GroverConfig& config) {
    GroverResult result;
    int k = 0;
    if (config.iterations) {
        k = *config.iterations;
        if (k < 0) throw std::invalid_argument("grover: iteration count must be >= 0");
    } else if (config.mode == GroverMode::Classical) {
        k = static_cast<int>(plan_iterations(config.spec, config.mode).optimal_k);
    } else {
        const IterationPlan plan = plan_iterations(config.spec, config.mode);
        result.sweep = sweep_suppression(config.spec,
                                         static_cast<int>(plan.sweep_bound),
                                         config.suppression, config.state_prep);
        const auto best = std::min_element(
            result.sweep.begin(), result.sweep.end(),
            [](const SweepPoint& a, const SweepPoint& b) {
                return a.undesired_probability < b.undesired_probability;
            });
        k = best->k;
    }

    const Circuit pipeline = build_grover_circuit(config, k);
    const StateVector final_state =
        run_circuit(pipeline, StateVector(config.spec.n + 1));
    result.register_probabilities = marginal_over_top(final_state);
    result.iterations_used = k;
    return result;
}

} // namespace qgs
