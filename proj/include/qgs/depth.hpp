#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgs/circuit.hpp"
#include "qgs/grover.hpp"

namespace qgs {

// Oracle gate-count growth for the benchmark family that marks every
// register state except all-zeros and all-ones.
struct GrowthRow {
    int n = 0;
    std::uint64_t classical_formula = 0;
    std::uint64_t suppression_formula = 0;
    std::uint64_t classical_measured_polarity = 0; // polarity-bearing MCX, one per state
    std::uint64_t classical_measured_xconj = 0;    // X-conjugated closed-control MCX
    std::uint64_t suppression_measured = 0;        // trailing-flip oracle, native controls
};

// (2^n - 2) + 2 * sum_{i=1..n} C(n, i); the binomial sum collapses to
// 3 * 2^n - 4 and both forms are computed and checked against each other.
// Throws for n > 62.
std::uint64_t classical_growth_formula(int n);

// 4 + 2n.
std::uint64_t suppression_growth_formula(int n);

// X-conjugation realization of a circuit: every open control becomes a
// closed control wrapped in an X pair on the controlling wire.
Circuit to_closed_controls(const Circuit& c);

// Gate count of the X-conjugation realization of the suppression oracle,
// measured blockwise so large registers stay cheap.
std::uint64_t suppression_xconj_count(int n, const SuppressionOptions& opts = {});

// Builds both oracles for the 2^n - 2 benchmark and fills every column.
// Valid for 2 <= n <= 20.
GrowthRow measure_oracles(int n);

std::vector<GrowthRow> growth_sweep(int n_min, int n_max);

// CSV with header n,classical_formula,suppression_formula,
// classical_measured_polarity,classical_measured_xconj,suppression_measured.
std::string growth_csv(const std::vector<GrowthRow>& rows);

// First n with classical_formula > suppression_formula, or -1 if none.
int crossover_n(const std::vector<GrowthRow>& rows);

} // namespace qgs
