#include <doctest.h>

#include "qgs/dense.hpp"
#include "qgs/depth.hpp"
#include "test_util.hpp"

using namespace qgs;

TEST_CASE("growth formulas") {
    CHECK(classical_growth_formula(1) == 2);
    CHECK(classical_growth_formula(2) == 8);
    CHECK(classical_growth_formula(3) == 20);
    CHECK(suppression_growth_formula(2) == 8);
    CHECK(suppression_growth_formula(3) == 10);
    CHECK(suppression_growth_formula(20) == 44);

    // the term-by-term binomial sum and the closed form are cross-checked
    // internally for the whole sweep range
    for (int n = 1; n <= 62; ++n) CHECK(classical_growth_formula(n) > 0);
    CHECK_THROWS_AS(classical_growth_formula(63), std::overflow_error);
    CHECK_THROWS_AS(classical_growth_formula(0), std::invalid_argument);
}

TEST_CASE("formula comparison across the sweep range") {
    CHECK(classical_growth_formula(2) == suppression_growth_formula(2));
    for (int n = 3; n <= 20; ++n)
        CHECK(classical_growth_formula(n) > suppression_growth_formula(n));

    // classical is exponential: (f(n+1) + 4) = 2 (f(n) + 4) exactly
    for (int n = 2; n < 20; ++n)
        CHECK(classical_growth_formula(n + 1) + 4 == 2 * (classical_growth_formula(n) + 4));

    // suppression is affine with slope exactly 2
    for (int n = 2; n < 20; ++n)
        CHECK(suppression_growth_formula(n + 1) - suppression_growth_formula(n) == 2);
}

TEST_CASE("measured oracle counts at n=3") {
    const GrowthRow row = measure_oracles(3);
    CHECK(row.classical_formula == 20);
    CHECK(row.suppression_formula == 10);
    CHECK(row.classical_measured_polarity == 6);
    CHECK(row.classical_measured_xconj == 24);
    CHECK(row.suppression_measured == 5);
}

TEST_CASE("X-conjugated suppression oracle lands exactly on 4 + 2n") {
    for (int n = 2; n <= 12; ++n)
        CHECK(suppression_xconj_count(n) == suppression_growth_formula(n));
    // the trailing flip adds one
    for (int n = 2; n <= 12; ++n)
        CHECK(suppression_xconj_count(n, {AncillaHandling::EntangledTrailingX}) ==
              suppression_growth_formula(n) + 1);
}

TEST_CASE("X conjugation preserves the unitary") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 6; ++round) {
        const Circuit c = qgs::test::random_circuit(4, 12, rng);
        const Circuit closed = to_closed_controls(c);
        for (const GateOp& g : closed.gates())
            for (const Control& ctl : g.controls)
                CHECK(ctl.polarity == Polarity::Closed);
        CHECK(max_abs_diff(dense_unitary(c), dense_unitary(closed)) < 1e-12);
    }
}

TEST_CASE("blockwise counting equals counting the full construction") {
    for (int n = 2; n <= 8; ++n) {
        const OracleSpec spec(n, {0, (std::uint64_t{1} << n) - 1});
        const Circuit full = build_classical_oracle(spec, spec.desired());
        const GrowthRow row = measure_oracles(n);
        CHECK(count_gates(full).total() == row.classical_measured_polarity);
        CHECK(count_gates(to_closed_controls(full)).total() ==
              row.classical_measured_xconj);
    }
}

TEST_CASE("sweep rows and crossover") {
    const auto rows = growth_sweep(2, 8);
    REQUIRE(rows.size() == 7);
    CHECK(crossover_n(rows) == 3);

    // measured columns: polarity count is 2^n - 2, the X-conjugated one
    // grows strictly faster than any affine slope on this range
    for (const GrowthRow& r : rows)
        CHECK(r.classical_measured_polarity ==
              (std::uint64_t{1} << r.n) - 2);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const auto d1 = rows[i - 1].classical_measured_xconj -
                        rows[i - 2].classical_measured_xconj;
        const auto d2 = rows[i].classical_measured_xconj -
                        rows[i - 1].classical_measured_xconj;
        CHECK(d2 > d1);
    }
    // with native controls the suppression oracle never grows at all
    for (const GrowthRow& r : rows) CHECK(r.suppression_measured == 5);

    CHECK_THROWS_AS(growth_sweep(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(growth_sweep(5, 21), std::invalid_argument);
    CHECK_THROWS_AS(growth_sweep(6, 4), std::invalid_argument);
}

TEST_CASE("CSV emission") {
    const auto rows = growth_sweep(2, 3);
    const std::string csv = growth_csv(rows);
    CHECK(csv ==
          "n,classical_formula,suppression_formula,classical_measured_polarity,"
          "classical_measured_xconj,suppression_measured\n"
          "2,8,8,2,6,5\n"
          "3,20,10,6,24,5\n");
}
