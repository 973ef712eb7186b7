#include "qgs/depth.hpp"

#include <stdexcept>

namespace qgs {

namespace {

void check_range(int n) {
    if (n < 2 || n > 20)
        throw std::invalid_argument("depth: register size must be in [2, 20]");
}

// Benchmark spec: undesired = {all zeros, all ones}.
OracleSpec benchmark_spec(int n) {
    return OracleSpec(n, {0, (std::uint64_t{1} << n) - 1});
}

// The classical oracle built one marked state at a time so the n = 20 row
// never materializes millions of gates at once; the per-block counts add
// exactly as count_gates does over a composition.
std::uint64_t classical_count(int n, bool xconj) {
    const OracleSpec spec = benchmark_spec(n);
    std::uint64_t total = 0;
    const std::uint64_t all = spec.total_states();
    for (std::uint64_t t = 1; t + 1 < all; ++t) {
        Circuit block(n + 1, n);
        block.mcx(n, controls_for_basis(t, n));
        const Circuit realized = xconj ? to_closed_controls(block) : block;
        total += count_gates(realized).total();
    }
    return total;
}

} // namespace

std::uint64_t classical_growth_formula(int n) {
    if (n < 1)
        throw std::invalid_argument("classical growth formula: n must be >= 1");
    if (n > 62)
        throw std::overflow_error("classical growth formula: n > 62 overflows");
    const std::uint64_t pow2 = std::uint64_t{1} << n;

    // Binomial sum evaluated term by term, then checked against the closed
    // form 3 * 2^n - 4.
    std::uint64_t sum = 0;
    std::uint64_t binom = 1; // C(n, 0)
    for (int i = 1; i <= n; ++i) {
        binom = binom * static_cast<std::uint64_t>(n - i + 1) /
                static_cast<std::uint64_t>(i);
        sum += binom;
    }
    const std::uint64_t by_sum = (pow2 - 2) + 2 * sum;
    const std::uint64_t closed = 3 * pow2 - 4;
    if (by_sum != closed)
        throw std::logic_error("classical growth formula: forms disagree");
    return closed;
}

std::uint64_t suppression_growth_formula(int n) {
    if (n < 1)
        throw std::invalid_argument("suppression growth formula: n must be >= 1");
    return 4 + 2 * static_cast<std::uint64_t>(n);
}

Circuit to_closed_controls(const Circuit& c) {
    Circuit out(c.num_qubits(), c.ancilla());
    for (const GateOp& g : c.gates()) {
        if (!g.is_controlled()) {
            out.add(g);
            continue;
        }
        std::vector<int> flipped;
        std::vector<Control> closed;
        closed.reserve(g.controls.size());
        for (const Control& ctl : g.controls) {
            if (ctl.polarity == Polarity::Open) flipped.push_back(ctl.qubit);
            closed.push_back({ctl.qubit, Polarity::Closed});
        }
        for (int q : flipped) out.x(q);
        out.add({g.kind, g.target, std::move(closed)});
        for (int q : flipped) out.x(q);
    }
    return out;
}

std::uint64_t suppression_xconj_count(int n, const SuppressionOptions& opts) {
    check_range(n);
    const Circuit oracle = build_suppression_oracle(benchmark_spec(n), opts);
    return count_gates(to_closed_controls(oracle)).total();
}

GrowthRow measure_oracles(int n) {
    check_range(n);
    GrowthRow row;
    row.n = n;
    row.classical_formula = classical_growth_formula(n);
    row.suppression_formula = suppression_growth_formula(n);
    row.classical_measured_polarity = classical_count(n, /*xconj=*/false);
    row.classical_measured_xconj = classical_count(n, /*xconj=*/true);

    const Circuit trailing = build_suppression_oracle(
        benchmark_spec(n), {AncillaHandling::EntangledTrailingX});
    row.suppression_measured = count_gates(trailing).total();
    return row;
}

std::vector<GrowthRow> growth_sweep(int n_min, int n_max) {
    check_range(n_min);
    check_range(n_max);
    if (n_min > n_max)
        throw std::invalid_argument("depth sweep: n_min exceeds n_max");
    std::vector<GrowthRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) rows.push_back(measure_oracles(n));
    return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
    std::string out =
        "n,classical_formula,suppression_formula,classical_measured_polarity,"
        "classical_measured_xconj,suppression_measured\n";
    for (const GrowthRow& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.classical_formula) + ',' +
               std::to_string(r.suppression_formula) + ',' +
               std::to_string(r.classical_measured_polarity) + ',' +
               std::to_string(r.classical_measured_xconj) + ',' +
               std::to_string(r.suppression_measured) + '\n';
    }
    return out;
}

int crossover_n(const std::vector<GrowthRow>& rows) {
    for (const GrowthRow& r : rows)
        if (r.classical_formula > r.suppression_formula) return r.n;
    return -1;
}

} // namespace qgs
