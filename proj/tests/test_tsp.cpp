#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qgs/basis.hpp"
#include "qgs/tsp.hpp"

using namespace qgs;

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(TspInstance::create({{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TspInstance::create({{0, 1, 2}, {1, 0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(TspInstance::create({{1, 1, 2}, {1, 0, 3}, {2, 3, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(TspInstance::create({{0, -1, 2}, {-1, 0, 3}, {2, 3, 0}}),
                    std::invalid_argument);
    CHECK(example_tsp3().city_count == 3);
    CHECK(example_tsp3().max_distance() == 4.0);
    CHECK(default_penalty(example_tsp3()) == 24.0);
}

TEST_CASE("unit-distance three-city encoding") {
    const TspInstance unit = TspInstance::create({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const TspEncoding enc = tsp_to_qubo(unit, default_penalty(unit));
    CHECK(enc.penalty_valid);
    CHECK(enc.qubo.num_vars == 4);
    for (std::uint64_t f : feasible_indices(unit))
        CHECK(enc.qubo.energy(f) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("bundled instance: both tours cost 7, infeasible strings pay the penalty") {
    const TspInstance inst = example_tsp3();
    const TspEncoding enc = tsp_to_qubo(inst, default_penalty(inst));
    const auto feasible = feasible_indices(inst);
    REQUIRE(feasible.size() == 2);
    CHECK(feasible[0] == label_to_index("0110"));
    CHECK(feasible[1] == label_to_index("1001"));
    for (std::uint64_t f : feasible)
        CHECK(enc.qubo.energy(f) == doctest::Approx(7.0).epsilon(1e-12));

    double feasible_min = 1e300;
    for (std::uint64_t f : feasible) feasible_min = std::min(feasible_min, enc.qubo.energy(f));
    for (std::uint64_t x = 0; x < 16; ++x) {
        if (x == feasible[0] || x == feasible[1]) continue;
        CHECK(enc.qubo.energy(x) >= feasible_min + enc.penalty - 1e-9);
    }

    const TspEncoding weak = tsp_to_qubo(inst, 1.0);
    CHECK_FALSE(weak.penalty_valid);
}

TEST_CASE("qubo to ising substitution") {
    Qubo lin_only;
    lin_only.num_vars = 1;
    lin_only.add_linear(0, 1.0);
    const IsingModel m1 = qubo_to_ising(lin_only);
    CHECK(m1.h.at(0) == doctest::Approx(-0.5));
    CHECK(m1.offset == doctest::Approx(0.5));

    Qubo quad;
    quad.num_vars = 2;
    quad.add_quadratic(0, 1, 4.0);
    const IsingModel m2 = qubo_to_ising(quad);
    CHECK(m2.coupling.at({0, 1}) == doctest::Approx(1.0));
    CHECK(m2.h.at(0) == doctest::Approx(-1.0));
    CHECK(m2.h.at(1) == doctest::Approx(-1.0));
    CHECK(m2.offset == doctest::Approx(1.0));
}

TEST_CASE("qubo and ising agree on every assignment") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coeff(-8, 8);
    for (int round = 0; round < 20; ++round) {
        Qubo q;
        q.num_vars = 4;
        q.offset = coeff(rng);
        for (int v = 0; v < 4; ++v) q.add_linear(v, coeff(rng));
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) q.add_quadratic(a, b, coeff(rng));
        const IsingModel m = qubo_to_ising(q);
        for (std::uint64_t x = 0; x < 16; ++x)
            CHECK(q.energy(x) == m.energy_of_bits(x)); // dyadic, exact
    }
}

TEST_CASE("feasible labels for four cities") {
    const TspInstance inst = TspInstance::create({{0, 1, 2, 3},
                                                  {1, 0, 4, 5},
                                                  {2, 4, 0, 6},
                                                  {3, 5, 6, 0}});
    const auto feasible = feasible_indices(inst);
    CHECK(feasible.size() == 6); // (4-1)!
    const TspEncoding enc = tsp_to_qubo(inst, default_penalty(inst));
    for (std::uint64_t f : feasible) {
        // zero penalty: energy is a plain tour length, well under the penalty
        CHECK(enc.qubo.energy(f) < enc.penalty);
        CHECK(enc.qubo.energy(f) > 0.0);
    }
}

TEST_CASE("brute force minimum") {
    Qubo tiny;
    tiny.num_vars = 1;
    tiny.add_linear(0, -2.0);
    const auto [idx, e] = brute_force_min(tiny);
    CHECK(idx == 1);
    CHECK(e == doctest::Approx(-2.0));

    // degenerate optimum resolves to the lowest index
    const TspEncoding enc = tsp_to_qubo(example_tsp3(), 24.0);
    const auto [best, energy] = brute_force_min(enc.qubo);
    CHECK(best == label_to_index("0110"));
    CHECK(energy == doctest::Approx(7.0));

    // with a valid penalty the global optimum is feasible
    const auto feasible = feasible_indices(example_tsp3());
    CHECK(std::find(feasible.begin(), feasible.end(), best) != feasible.end());

    Qubo wide;
    wide.num_vars = 21;
    CHECK_THROWS_AS(brute_force_min(wide), std::length_error);
}

TEST_CASE("instance JSON round-trip and error naming") {
    const std::string text = tsp_to_json(example_tsp3());
    const TspInstance back = tsp_from_json_text(text);
    CHECK(back.city_count == 3);
    CHECK(back.distances == example_tsp3().distances);

    auto message_of = [](const char* text) {
        try {
            tsp_from_json_text(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("{\"distances\": [[0]]}").find("cities") != std::string::npos);
    CHECK(message_of("{\"cities\": 3}").find("distances") != std::string::npos);
    CHECK_THROWS_AS(tsp_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(
        tsp_from_json_text("{\"cities\": 4, \"distances\": [[0,1,4],[1,0,2],[4,2,0]]}"),
        std::invalid_argument);
}
