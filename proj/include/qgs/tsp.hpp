#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgs {

struct TspInstance {
    int city_count = 0;
    std::vector<std::vector<double>> distances; // square, zero diagonal

    // Throws on non-square input, negative entries, or a nonzero diagonal.
    static TspInstance create(std::vector<std::vector<double>> distances);

    double max_distance() const;
};

struct Qubo {
    int num_vars = 0;
    std::map<int, double> linear;
    std::map<std::pair<int, int>, double> quadratic; // keys with first < second
    double offset = 0.0;

    void add_linear(int v, double w);
    void add_quadratic(int a, int b, double w); // a == b folds into linear
    double energy(std::uint64_t assignment) const;
};

struct IsingModel {
    int num_spins = 0;
    std::map<int, double> h;
    std::map<std::pair<int, int>, double> coupling; // keys with first < second
    double offset = 0.0;

    // Energy of the bitstring under z_i = 1 - 2 * bit_i.
    double energy_of_bits(std::uint64_t assignment) const;
};

// One-hot encoding with city 0 pinned to position 0: variable (i, p) for
// city i in {1..c-1} at position p in {1..c-1}, index (i-1)*(c-1)+(p-1),
// so qubit counts stay at (c-1)^2. Objective = tour length plus
// penalty * (one-hot violations).
struct TspEncoding {
    Qubo qubo;
    double penalty = 0.0;
    bool penalty_valid = false; // true when penalty > c * max distance
};

double default_penalty(const TspInstance& instance); // 2 * c * max distance

TspEncoding tsp_to_qubo(const TspInstance& instance, double penalty);

IsingModel qubo_to_ising(const Qubo& q);

// All (c-1)! register indices that satisfy every one-hot constraint.
std::vector<std::uint64_t> feasible_indices(const TspInstance& instance);

// Exhaustive scan; ties break toward the lowest index. Throws above 20 vars.
std::pair<std::uint64_t, double> brute_force_min(const Qubo& q);

// The bundled three-city demo instance.
TspInstance example_tsp3();

std::string tsp_to_json(const TspInstance& instance);
TspInstance tsp_from_json_text(const std::string& text);

} // namespace qgs
