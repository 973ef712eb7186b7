#include "qgs/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "qgs/basis.hpp"
#include "qgs/format.hpp"
#include "qgs/grover.hpp"
#include "qgs/optim.hpp"

namespace qgs {

namespace {

int register_qubits(const TspInstance& instance) {
    const int side = instance.city_count - 1;
    return side * side;
}

std::vector<double> energy_table(const IsingModel& ising) {
    const std::uint64_t dim = std::uint64_t{1} << ising.num_spins;
    std::vector<double> e(dim);
    for (std::uint64_t x = 0; x < dim; ++x) e[x] = ising.energy_of_bits(x);
    return e;
}

void apply_rx_all(std::vector<cplx>& a, int num_qubits, double beta) {
    const cplx diag{std::cos(beta), 0.0};
    const cplx offdiag{0.0, -std::sin(beta)};
    for (int t = 0; t < num_qubits; ++t) {
        const std::uint64_t tmask = std::uint64_t{1} << t;
        const std::uint64_t block = tmask << 1;
        for (std::uint64_t base = 0; base < a.size(); base += block)
            for (std::uint64_t off = 0; off < tmask; ++off) {
                const std::uint64_t i0 = base + off;
                const std::uint64_t i1 = i0 | tmask;
                const cplx v0 = a[i0], v1 = a[i1];
                a[i0] = diag * v0 + offdiag * v1;
                a[i1] = offdiag * v0 + diag * v1;
            }
    }
}

struct OptimalSet {
    std::vector<std::uint64_t> states;
    double energy = 0.0;
};

OptimalSet optimal_states(const Qubo& qubo) {
    OptimalSet out;
    out.energy = brute_force_min(qubo).second;
    const std::uint64_t dim = std::uint64_t{1} << qubo.num_vars;
    for (std::uint64_t x = 0; x < dim; ++x)
        if (std::abs(qubo.energy(x) - out.energy) < 1e-9) out.states.push_back(x);
    return out;
}

double mass_on(const std::vector<std::uint64_t>& states, const std::vector<double>& probs) {
    double p = 0.0;
    for (std::uint64_t s : states) p += probs[s];
    return p;
}

} // namespace

InitialStateReport build_initial_state(QaoaInit mode, const TspInstance& instance,
                                       std::optional<int> grover_iterations) {
    const int n = register_qubits(instance);
    if (mode == QaoaInit::Uniform) {
        InitialStateReport report{StateVector::uniform(n), 0.0, 0};
        const std::vector<double> probs = probabilities(report.state);
        report.feasible_probability = mass_on(feasible_indices(instance), probs);
        return report;
    }

    const std::vector<std::uint64_t> feasible = feasible_indices(instance);
    std::set<std::uint64_t> infeasible;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) infeasible.insert(i);
    for (std::uint64_t f : feasible) infeasible.erase(f);
    const OracleSpec spec(n, std::move(infeasible));

    // The ancilla-uncomputed oracle keeps each round a clean phase flip, so
    // the standard iteration count applies and the sweep lands on it.
    const SuppressionOptions opts{AncillaHandling::Uncomputed};

    int k = 0;
    if (grover_iterations) {
        k = *grover_iterations;
        if (k < 0) throw std::invalid_argument("initial state: iterations must be >= 0");
    } else {
        const IterationPlan plan = plan_iterations(spec, GroverMode::Suppression);
        const auto sweep =
            sweep_suppression(spec, static_cast<int>(plan.sweep_bound), opts);
        k = std::min_element(sweep.begin(), sweep.end(),
                             [](const SweepPoint& a, const SweepPoint& b) {
                                 return a.undesired_probability < b.undesired_probability;
                             })
                ->k;
    }

    GroverConfig cfg{spec, GroverMode::Suppression, k, std::nullopt, opts};
    const Circuit pipeline = build_grover_circuit(cfg, k);
    const StateVector full = run_circuit(pipeline, StateVector(n + 1));
    const std::vector<double> marg = marginal_over_top(full);

    // Re-prepare the probability marginal as a real state.
    std::vector<cplx> amps(marg.size());
    double norm2 = 0.0;
    for (double p : marg) norm2 += p;
    const double scale = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < marg.size(); ++i)
        amps[i] = cplx{std::sqrt(marg[i]) * scale, 0.0};

    InitialStateReport report{StateVector::from_amplitudes(n, std::move(amps)), 0.0, k};
    report.feasible_probability = mass_on(feasible, probabilities(report.state));
    return report;
}

StateVector qaoa_evolve(const IsingModel& ising, std::span<const double> gammas,
                        std::span<const double> betas, const StateVector& initial) {
    if (gammas.size() != betas.size())
        throw std::invalid_argument("qaoa: gamma and beta lists differ in length");
    if (ising.num_spins != initial.num_qubits())
        throw std::invalid_argument("qaoa: state size does not match spin count");

    const std::vector<double> energy = energy_table(ising);
    std::vector<cplx> a(initial.amplitudes().begin(), initial.amplitudes().end());
    for (std::size_t layer = 0; layer < gammas.size(); ++layer) {
        const double gamma = gammas[layer];
        for (std::size_t x = 0; x < a.size(); ++x) {
            const double phase = -gamma * (energy[x] - ising.offset);
            a[x] *= cplx{std::cos(phase), std::sin(phase)};
        }
        apply_rx_all(a, ising.num_spins, betas[layer]);
    }
    return StateVector::from_amplitudes(ising.num_spins, std::move(a));
}

double qaoa_expected_cost(const IsingModel& ising, std::span<const double> gammas,
                          std::span<const double> betas, const StateVector& initial) {
    const StateVector out = qaoa_evolve(ising, gammas, betas, initial);
    const std::vector<double> probs = probabilities(out);
    double cost = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x)
        if (probs[x] > 0.0) cost += probs[x] * ising.energy_of_bits(x);
    return cost;
}

QaoaResult optimize_qaoa(const QaoaConfig& config) {
    if (config.budget < 1)
        throw std::invalid_argument("qaoa: budget must be >= 1");
    if (config.layers < 0)
        throw std::invalid_argument("qaoa: layer count must be >= 0");

    const double penalty =
        config.penalty ? *config.penalty : default_penalty(config.instance);
    const TspEncoding enc = tsp_to_qubo(config.instance, penalty);
    const IsingModel ising = qubo_to_ising(enc.qubo);
    const OptimalSet optimum = optimal_states(enc.qubo);

    const InitialStateReport init =
        build_initial_state(config.init, config.instance, config.grover_iterations);

    QaoaResult result;
    result.initial_feasible_probability = init.feasible_probability;
    result.grover_iterations_used = init.grover_iterations_used;

    const int p = config.layers;
    auto evaluate_state = [&](std::span<const double> params) {
        return qaoa_evolve(ising, params.subspan(0, static_cast<std::size_t>(p)),
                           params.subspan(static_cast<std::size_t>(p)), init.state);
    };

    if (p == 0) {
        const std::vector<double> probs = probabilities(init.state);
        double cost = 0.0;
        for (std::size_t x = 0; x < probs.size(); ++x)
            if (probs[x] > 0.0) cost += probs[x] * ising.energy_of_bits(x);
        result.best_expected_cost = cost;
        result.optimal_state_probability = mass_on(optimum.states, probs);
        result.final_distribution = probability_map(init.state);
        result.evaluations = 1;
        result.trace = {{0, cost, result.optimal_state_probability}};
        return result;
    }

    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<double> best_params;
    double best_osp = 0.0;
    int evaluations = 0;

    auto objective = [&](std::span<const double> params) {
        const StateVector out = evaluate_state(params);
        const std::vector<double> probs = probabilities(out);
        double cost = 0.0;
        for (std::size_t x = 0; x < probs.size(); ++x)
            if (probs[x] > 0.0) cost += probs[x] * ising.energy_of_bits(x);
        if (cost < best_cost) {
            best_cost = cost;
            best_params.assign(params.begin(), params.end());
            best_osp = mass_on(optimum.states, probs);
        }
        result.trace.push_back({evaluations, best_cost, best_osp});
        ++evaluations;
        return cost;
    };

    // Multi-start: the all-zero point first, then seeded uniform draws in
    // gamma [0, 2pi) x beta [0, pi). Per-start slice keeps restarts coming.
    std::mt19937_64 rng(config.seed);
    auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    const int per_start = std::max(50, config.budget / 5);
    bool first = true;
    while (evaluations < config.budget) {
        std::vector<double> x0(static_cast<std::size_t>(2 * p), 0.0);
        if (!first)
            for (int i = 0; i < 2 * p; ++i)
                x0[static_cast<std::size_t>(i)] =
                    uniform01() * (i < p ? 2.0 * std::numbers::pi : std::numbers::pi);
        first = false;
        const int slice = std::min(per_start, config.budget - evaluations);
        nelder_mead(objective, std::move(x0), slice);
    }

    result.best_gammas.assign(best_params.begin(), best_params.begin() + p);
    result.best_betas.assign(best_params.begin() + p, best_params.end());
    result.best_expected_cost = best_cost;
    result.evaluations = evaluations;
    result.optimal_state_probability = best_osp;
    const StateVector final_state = evaluate_state(best_params);
    result.final_distribution = probability_map(final_state);
    return result;
}

ComparisonReport compare_initializations(const QaoaConfig& config) {
    ComparisonReport report;
    QaoaConfig uniform_cfg = config;
    uniform_cfg.init = QaoaInit::Uniform;
    QaoaConfig suppression_cfg = config;
    suppression_cfg.init = QaoaInit::Suppression;
    report.uniform = optimize_qaoa(uniform_cfg);
    report.suppression = optimize_qaoa(suppression_cfg);

    const double penalty =
        config.penalty ? *config.penalty : default_penalty(config.instance);
    const auto [idx, energy] = brute_force_min(tsp_to_qubo(config.instance, penalty).qubo);
    report.optimal_index = idx;
    report.optimal_energy = energy;
    return report;
}

std::string comparison_csv(const ComparisonReport& report) {
    std::string out = "mode,evaluation,best_expected_cost,optimal_state_probability\n";
    auto emit = [&out](const char* mode, const QaoaResult& r) {
        for (const TracePoint& t : r.trace)
            out += std::string(mode) + ',' + std::to_string(t.evaluation) + ',' +
                   format_g12(t.best_expected_cost) + ',' +
                   format_g12(t.optimal_state_probability) + '\n';
    };
    emit("uniform", report.uniform);
    emit("suppression", report.suppression);
    return out;
}

} // namespace qgs
