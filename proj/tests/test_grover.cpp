#include <doctest.h>

#include <cmath>

#include "qgs/basis.hpp"
#include "qgs/dense.hpp"
#include "qgs/grover.hpp"
#include "test_util.hpp"

using namespace qgs;

namespace {

std::vector<cplx> uniform_with_ancilla(int n) {
    std::vector<cplx> amps(std::size_t{1} << (n + 1), cplx{0, 0});
    const double a = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) amps[i] = cplx{a, 0};
    return amps;
}

double set_probability(const std::vector<double>& probs,
                       const std::set<std::uint64_t>& states) {
    double p = 0.0;
    for (std::uint64_t s : states) p += probs[s];
    return p;
}

} // namespace

TEST_CASE("classical oracle construction") {
    const OracleSpec spec = OracleSpec::from_targets(3, {label_to_index("001")});
    const Circuit oracle = build_classical_oracle(spec, {label_to_index("001")});
    REQUIRE(oracle.size() == 1);
    CHECK(oracle.gates()[0] ==
          GateOp::mcx(3, {{0, Polarity::Closed}, {1, Polarity::Open}, {2, Polarity::Open}}));

    // six desired states, one marking gate each
    std::vector<std::uint64_t> six;
    for (std::uint64_t t = 1; t < 7; ++t) six.push_back(t);
    const Circuit wide = build_classical_oracle(OracleSpec(3, {0, 7}), six);
    CHECK(wide.size() == 6);
    CHECK(count_gates(wide).multi_controlled == 6);

    // applying the oracle twice is the identity
    std::mt19937_64 rng(3);
    const StateVector s = qgs::test::random_state(4, rng);
    const StateVector back = run_circuit(compose(oracle, oracle), s);
    CHECK(qgs::test::max_amp_diff(back, s) < 1e-12);

    CHECK_THROWS_AS(build_classical_oracle(spec, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_classical_oracle(spec, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_classical_oracle(spec, {9}), std::invalid_argument);
}

TEST_CASE("suppression oracle follows the stated gate order") {
    const Circuit oracle = build_suppression_oracle(OracleSpec(3, {0, 7}));
    REQUIRE(oracle.size() == 4);
    CHECK(oracle.gates()[0] == GateOp::x(3));
    CHECK(oracle.gates()[1] ==
          GateOp::mcx(3, {{0, Polarity::Open}, {1, Polarity::Open}, {2, Polarity::Open}}));
    CHECK(oracle.gates()[2] ==
          GateOp::mcx(3, {{0, Polarity::Closed}, {1, Polarity::Closed}, {2, Polarity::Closed}}));
    CHECK(oracle.gates()[3] == GateOp::z(3));

    const Circuit two = build_suppression_oracle(OracleSpec(2, {0, 3}));
    REQUIRE(two.size() == 4);
    CHECK(two.gates()[1].controls.size() == 2);

    CHECK_THROWS_AS(build_suppression_oracle(OracleSpec(2, {})), std::invalid_argument);
    CHECK_THROWS_AS(OracleSpec(2, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("suppression oracle phases the complement against a raised ancilla") {
    // S = {00}: uniform x |0> maps to (|00>|0> - |01>|1> - |10>|1> - |11>|1>)/2
    const Circuit oracle = build_suppression_oracle(OracleSpec(2, {0}));
    const std::vector<cplx> out =
        mat_vec(dense_unitary(oracle), uniform_with_ancilla(2));
    CHECK(std::abs(out[0] - cplx{0.5, 0}) < 1e-12);
    CHECK(std::abs(out[5] + cplx{0.5, 0}) < 1e-12);
    CHECK(std::abs(out[6] + cplx{0.5, 0}) < 1e-12);
    CHECK(std::abs(out[7] + cplx{0.5, 0}) < 1e-12);
    for (std::size_t i : {1u, 2u, 3u, 4u}) CHECK(std::abs(out[i]) < 1e-12);
}

TEST_CASE("oracle enumerates the smaller side, same unitary either way") {
    // |S| = 3 of 4: the single desired state is enumerated, no leading flip
    const Circuit flipped = build_suppression_oracle(OracleSpec(2, {0, 1, 2}));
    REQUIRE(flipped.size() == 2);
    CHECK(flipped.gates()[0] ==
          GateOp::mcx(2, {{0, Polarity::Closed}, {1, Polarity::Closed}}));
    CHECK(flipped.gates()[1] == GateOp::z(2));

    // manual direct construction over S itself
    Circuit direct(3, 2);
    direct.x(2);
    for (std::uint64_t s : {0u, 1u, 2u}) direct.mcx(2, controls_for_basis(s, 2));
    direct.z(2);
    CHECK(max_abs_diff(dense_unitary(flipped), dense_unitary(direct)) < 1e-12);
}

TEST_CASE("uncomputed oracle phase-flips the desired states on the |0> branch") {
    const OracleSpec spec(3, {0, 7});
    const Circuit oracle =
        build_suppression_oracle(spec, {AncillaHandling::Uncomputed});
    const DenseMatrix u = dense_unitary(oracle);
    // diagonal; the ancilla comes back where it started, desired states pick
    // up -1 against ancilla |0> (the branch the pipeline lives in) and the
    // roles swap on the |1> branch
    const DenseMatrix expected = [&] {
        DenseMatrix m(16);
        for (std::uint64_t i = 0; i < 16; ++i) {
            const bool in_s = (i & 7) == 0 || (i & 7) == 7;
            const bool anc = (i & 8) != 0;
            m.at(i, i) = (in_s != anc) ? 1.0 : -1.0;
        }
        return m;
    }();
    CHECK(max_abs_diff(u, expected) < 1e-12);

    // so a pipeline that starts with the ancilla in |0> sees exactly a
    // register phase oracle and the ancilla never leaves |0>
    const std::vector<cplx> out =
        mat_vec(dense_unitary(oracle), uniform_with_ancilla(3));
    const double a = 1.0 / std::sqrt(8.0);
    for (std::uint64_t i = 0; i < 16; ++i) {
        if (i >= 8)
            CHECK(std::abs(out[i]) < 1e-12);
        else if (i == 0 || i == 7)
            CHECK(std::abs(out[i] - cplx{a, 0}) < 1e-12);
        else
            CHECK(std::abs(out[i] + cplx{a, 0}) < 1e-12);
    }
}

TEST_CASE("register diffuser equals inversion about the mean, sign included") {
    const Circuit d2 = build_diffuser(2, 2, DiffuserSpan::RegisterOnly);
    const DenseMatrix u = dense_unitary(d2);
    DenseMatrix expected(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            expected.at(r, c) = (r == c ? -1.0 : 0.0) + 0.5;
    CHECK(max_abs_diff(u, expected) < 1e-10);

    // uniform state is a +1 eigenvector
    const StateVector psi = StateVector::uniform(3);
    const Circuit d3 = build_diffuser(3, 3, DiffuserSpan::RegisterOnly);
    CHECK(qgs::test::max_amp_diff(run_circuit(d3, psi), psi) < 1e-12);

    // anything orthogonal to uniform is negated
    std::vector<cplx> amps(8, cplx{0, 0});
    amps[0] = cplx{1.0 / std::sqrt(2.0), 0};
    amps[1] = cplx{-1.0 / std::sqrt(2.0), 0};
    const StateVector orth = StateVector::from_amplitudes(3, std::move(amps));
    const StateVector neg = run_circuit(d3, orth);
    const auto nv = neg.amplitudes();
    const auto ov = orth.amplitudes();
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(nv[i] + ov[i]) < 1e-12);
}

TEST_CASE("full-width diffuser is a conditional phase, not the register one") {
    const int n = 2;
    const Circuit full = build_diffuser(n, n + 1, DiffuserSpan::FullWidth);
    const DenseMatrix u = dense_unitary(full);

    // I - 2 |psi><psi| (x) |0><0| on the ancilla
    DenseMatrix expected = DenseMatrix::identity(8);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) expected.at(r, c) -= 0.5;
    CHECK(max_abs_diff(u, expected) < 1e-10);

    // and it differs from (2|psi><psi| - I) (x) I by more than a global phase
    const Circuit reg = build_diffuser(n, n + 1, DiffuserSpan::RegisterOnly);
    const DenseMatrix v = dense_unitary(reg);
    double best_aligned_diff = 1e300;
    for (double phase : {1.0, -1.0}) {
        double worst = 0.0;
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c)
                worst = std::max(worst, std::abs(u.at(r, c) - phase * v.at(r, c)));
        best_aligned_diff = std::min(best_aligned_diff, worst);
    }
    CHECK(best_aligned_diff > 0.4);
}

TEST_CASE("iteration planning") {
    const IterationPlan supp = plan_iterations(OracleSpec(3, {0, 7}), GroverMode::Suppression);
    CHECK(supp.total_states == 8);
    CHECK(supp.driving_count == 2);
    CHECK(supp.sweep_bound == 4);

    const IterationPlan single =
        plan_iterations(OracleSpec::from_targets(3, {1}), GroverMode::Classical);
    CHECK(single.optimal_k == 2);
    CHECK(single.driving_count == 1);
    CHECK(single.sweep_bound == 8);

    const IterationPlan tiny =
        plan_iterations(OracleSpec::from_targets(2, {3}), GroverMode::Classical);
    CHECK(tiny.optimal_k == 1);
    CHECK(closed_form_success(4, 1, tiny.optimal_k) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(plan_iterations(OracleSpec(2, {}), GroverMode::Suppression),
                    std::invalid_argument);
}

TEST_CASE("closed-form success probability") {
    CHECK(closed_form_success(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed_form_success(8, 1, 0) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(closed_form_success(8, 6, 0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(closed_form_success(8, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_success(8, 0, 1), std::invalid_argument);
}

TEST_CASE("classical runs hit the closed form") {
    {
        GroverConfig cfg{OracleSpec::from_targets(2, {3}), GroverMode::Classical, 1, {}, {}};
        const GroverResult r = run_grover(cfg);
        CHECK(r.register_probabilities[3] == doctest::Approx(1.0).epsilon(1e-9));
    }
    {
        GroverConfig cfg{OracleSpec::from_targets(3, {1}), GroverMode::Classical, 2, {}, {}};
        const GroverResult r = run_grover(cfg);
        CHECK(r.register_probabilities[1] == doctest::Approx(0.9453125).epsilon(1e-9));
    }
    // a sweep across sizes, set sizes, and depths up to k = 6
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 5; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
            std::set<std::uint64_t> targets;
            while (targets.size() < m)
                targets.insert(rng() % (std::uint64_t{1} << n));
            for (int k = 0; k <= 6; ++k) {
                GroverConfig cfg{OracleSpec::from_targets(n, targets),
                                 GroverMode::Classical, k, {}, {}};
                const GroverResult r = run_grover(cfg);
                const double expected =
                    closed_form_success(std::uint64_t{1} << n, m,
                                        static_cast<std::uint64_t>(k));
                CHECK(set_probability(r.register_probabilities, targets) ==
                      doctest::Approx(expected).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("marking every state classically is a global phase") {
    std::set<std::uint64_t> all;
    for (std::uint64_t t = 0; t < 4; ++t) all.insert(t);
    GroverConfig cfg{OracleSpec::from_targets(2, all), GroverMode::Classical, 1, {}, {}};
    const GroverResult r = run_grover(cfg);
    for (double p : r.register_probabilities)
        CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    // and the planner asks for zero rounds by itself
    CHECK(plan_iterations(OracleSpec::from_targets(2, all), GroverMode::Classical)
              .optimal_k == 0);
}

TEST_CASE("diffuser size validation") {
    CHECK_THROWS_AS(build_diffuser(1, 1, DiffuserSpan::RegisterOnly),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_diffuser(2, 4, DiffuserSpan::FullWidth),
                    std::invalid_argument);
}

TEST_CASE("suppression run without iterations stays uniform") {
    GroverConfig cfg{OracleSpec(3, {0, 7}), GroverMode::Suppression, 0, {}, {}};
    const GroverResult r = run_grover(cfg);
    for (double p : r.register_probabilities)
        CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("suppression dynamics, frozen from an independent evaluation") {
    const OracleSpec spec(3, {0, 7});
    const auto sweep = sweep_suppression(spec, 4);
    REQUIRE(sweep.size() == 4);
    CHECK(sweep[0].undesired_probability == doctest::Approx(1.0 / 16).epsilon(1e-12));
    CHECK(sweep[1].undesired_probability == doctest::Approx(49.0 / 64).epsilon(1e-12));
    CHECK(sweep[2].undesired_probability == doctest::Approx(1.0 / 256).epsilon(1e-12));
    CHECK(sweep[3].undesired_probability == doctest::Approx(49.0 / 1024).epsilon(1e-12));

    // default run picks the sweep argmin
    GroverConfig cfg{spec, GroverMode::Suppression, {}, {}, {}};
    const GroverResult r = run_grover(cfg);
    CHECK(r.iterations_used == 3);
    CHECK(r.sweep.size() == 4);
    CHECK(r.register_probabilities[0] + r.register_probabilities[7] ==
          doctest::Approx(1.0 / 256).epsilon(1e-12));
    for (std::uint64_t i = 1; i < 7; ++i)
        CHECK(r.register_probabilities[i] ==
              doctest::Approx(85.0 / 512).epsilon(1e-12));
}

TEST_CASE("two-qubit suppression instance empties the undesired set at k=1") {
    GroverConfig cfg{OracleSpec(2, {0, 3}), GroverMode::Suppression, {}, {}, {}};
    const GroverResult r = run_grover(cfg);
    CHECK(r.iterations_used == 1);
    CHECK(r.register_probabilities[0] + r.register_probabilities[3] <= 1e-12);
    CHECK(r.register_probabilities[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.register_probabilities[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trailing ancilla flip changes the dynamics for the worse here") {
    const OracleSpec spec(3, {0, 7});
    const auto sweep =
        sweep_suppression(spec, 4, {AncillaHandling::EntangledTrailingX});
    double best = 1.0;
    for (const SweepPoint& pt : sweep) best = std::min(best, pt.undesired_probability);
    CHECK(best > 0.02); // the no-flip ordering reaches 1/256; this one never gets close
}

TEST_CASE("suppression keeps both orbits internally symmetric") {
    const OracleSpec spec(3, {1, 6});
    for (int k = 1; k <= 4; ++k) {
        GroverConfig cfg{spec, GroverMode::Suppression, k, {}, {}};
        const GroverResult r = run_grover(cfg);
        double lo = 1.0, hi = 0.0, slo = 1.0, shi = 0.0;
        for (std::uint64_t i = 0; i < 8; ++i) {
            const double p = r.register_probabilities[i];
            if (spec.undesired.contains(i)) {
                slo = std::min(slo, p);
                shi = std::max(shi, p);
            } else {
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
        }
        CHECK(hi - lo < 1e-9);
        CHECK(shi - slo < 1e-9);
    }
}

TEST_CASE("oracle alone leaves register marginals untouched") {
    // evaluated through the dense-matrix route, independent of the kernels
    const Circuit oracle = build_suppression_oracle(OracleSpec(3, {0, 7}));
    const std::vector<cplx> out =
        mat_vec(dense_unitary(oracle), uniform_with_ancilla(3));
    for (std::size_t reg = 0; reg < 8; ++reg) {
        const double p = std::norm(out[reg]) + std::norm(out[reg + 8]);
        CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
    }
}

TEST_CASE("arbitrary state preparation flows through the pipeline") {
    std::mt19937_64 rng(45);
    for (int round = 0; round < 5; ++round) {
        Circuit prep = qgs::test::random_circuit(3, 10, rng);
        GroverConfig cfg{OracleSpec::from_targets(3, {5}), GroverMode::Classical,
                         0, prep, {}};
        const GroverResult r = run_grover(cfg);
        const StateVector direct = run_circuit(prep, StateVector(3));
        const std::vector<double> expected = probabilities(direct);
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(r.register_probabilities[i] ==
                  doctest::Approx(expected[i]).epsilon(1e-10));
    }
}

TEST_CASE("classical pipeline agrees with its dense matrix") {
    GroverConfig cfg{OracleSpec::from_targets(3, {1}), GroverMode::Classical, 2, {}, {}};
    const Circuit pipeline = build_grover_circuit(cfg, 2);
    const StateVector fast = run_circuit(pipeline, StateVector(4));
    const std::vector<cplx> slow =
        mat_vec(dense_unitary(pipeline), StateVector(4).amplitudes());
    CHECK(qgs::test::max_amp_diff(fast, slow) < 1e-9);
}
