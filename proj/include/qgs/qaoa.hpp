#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgs/state.hpp"
#include "qgs/tsp.hpp"

namespace qgs {

enum class QaoaInit { Uniform, Suppression };

struct QaoaConfig {
    TspInstance instance;
    QaoaInit init = QaoaInit::Uniform;
    int layers = 1; // p
    int budget = 500;
    std::uint64_t seed = 1;
    std::optional<double> penalty;         // default 2 * c * max distance
    std::optional<int> grover_iterations;  // default: sweep argmin P(infeasible)
};

struct InitialStateReport {
    StateVector state;
    double feasible_probability = 0.0;
    int grover_iterations_used = 0;
};

// Uniform mode returns the flat superposition. Suppression mode runs the
// amplitude-suppression pipeline against the infeasible set (ancilla
// uncomputed so the standard iteration analysis applies), picks k by a
// sweep over [1, ceil(N/M)] unless given, and returns the square root of
// the register probability marginal as a re-prepared real state.
InitialStateReport build_initial_state(QaoaInit mode, const TspInstance& instance,
                                       std::optional<int> grover_iterations = {});

// p cost layers of diagonal phases exp(-i gamma E(x)) interleaved with a
// mixer of RX(2 beta) on every qubit.
StateVector qaoa_evolve(const IsingModel& ising, std::span<const double> gammas,
                        std::span<const double> betas, const StateVector& initial);

double qaoa_expected_cost(const IsingModel& ising, std::span<const double> gammas,
                          std::span<const double> betas, const StateVector& initial);

struct TracePoint {
    int evaluation = 0;
    double best_expected_cost = 0.0;
    double optimal_state_probability = 0.0;
};

struct QaoaResult {
    std::vector<double> best_gammas;
    std::vector<double> best_betas;
    double best_expected_cost = 0.0;
    std::map<std::string, double> final_distribution;
    // Probability mass on the set of minimum-energy basis states.
    double optimal_state_probability = 0.0;
    int evaluations = 0;
    std::vector<TracePoint> trace; // best-so-far after every evaluation
    double initial_feasible_probability = 0.0;
    int grover_iterations_used = 0;
};

// Seeded multi-start Nelder-Mead over the 2p angles; start 0 is always the
// all-zero point, later starts draw gamma in [0, 2pi) and beta in [0, pi).
// Deterministic for a fixed config.
QaoaResult optimize_qaoa(const QaoaConfig& config);

struct ComparisonReport {
    QaoaResult uniform;
    QaoaResult suppression;
    std::uint64_t optimal_index = 0;
    double optimal_energy = 0.0;
};

// Both arms under identical seed, layers, budget, and Ising model.
ComparisonReport compare_initializations(const QaoaConfig& config);

// CSV rows mode,evaluation,best_expected_cost,optimal_state_probability.
std::string comparison_csv(const ComparisonReport& report);

} // namespace qgs
