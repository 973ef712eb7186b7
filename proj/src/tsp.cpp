#include "qgs/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace qgs {

namespace {

int var_index(int city, int position, int side) {
    return (city - 1) * side + (position - 1);
}

} // namespace

TspInstance TspInstance::create(std::vector<std::vector<double>> distances) {
    const std::size_t c = distances.size();
    if (c < 3)
        throw std::invalid_argument("tsp instance: need at least 3 cities");
    for (std::size_t i = 0; i < c; ++i) {
        if (distances[i].size() != c)
            throw std::invalid_argument("tsp instance: distance matrix is not square");
        if (distances[i][i] != 0.0)
            throw std::invalid_argument("tsp instance: diagonal must be zero");
        for (double d : distances[i]) {
            if (!(d >= 0.0) || !std::isfinite(d))
                throw std::invalid_argument("tsp instance: distances must be finite and >= 0");
        }
    }
    return TspInstance{static_cast<int>(c), std::move(distances)};
}

double TspInstance::max_distance() const {
    double m = 0.0;
    for (const auto& row : distances)
        for (double d : row) m = std::max(m, d);
    return m;
}

void Qubo::add_linear(int v, double w) {
    if (w != 0.0) linear[v] += w;
}

void Qubo::add_quadratic(int a, int b, double w) {
    if (w == 0.0) return;
    if (a == b) {
        linear[a] += w; // x^2 = x on binaries
        return;
    }
    quadratic[{std::min(a, b), std::max(a, b)}] += w;
}

double Qubo::energy(std::uint64_t assignment) const {
    double e = offset;
    for (const auto& [v, w] : linear)
        e += w * static_cast<double>((assignment >> v) & 1);
    for (const auto& [key, w] : quadratic)
        e += w * static_cast<double>((assignment >> key.first) & 1) *
             static_cast<double>((assignment >> key.second) & 1);
    return e;
}

double IsingModel::energy_of_bits(std::uint64_t assignment) const {
    auto spin = [&](int v) {
        return 1.0 - 2.0 * static_cast<double>((assignment >> v) & 1);
    };
    double e = offset;
    for (const auto& [v, w] : h) e += w * spin(v);
    for (const auto& [key, w] : coupling) e += w * spin(key.first) * spin(key.second);
    return e;
}

double default_penalty(const TspInstance& instance) {
    return 2.0 * static_cast<double>(instance.city_count) * instance.max_distance();
}

TspEncoding tsp_to_qubo(const TspInstance& instance, double penalty) {
    const int c = instance.city_count;
    const int side = c - 1;
    const auto& d = instance.distances;

    TspEncoding enc;
    enc.penalty = penalty;
    enc.penalty_valid = penalty > static_cast<double>(c) * instance.max_distance();
    Qubo& q = enc.qubo;
    q.num_vars = side * side;

    // Tour legs touching the pinned city 0 are linear, interior legs
    // quadratic across adjacent positions.
    for (int i = 1; i < c; ++i) {
        q.add_linear(var_index(i, 1, side), d[0][static_cast<std::size_t>(i)]);
        q.add_linear(var_index(i, side, side), d[static_cast<std::size_t>(i)][0]);
    }
    for (int p = 1; p < side; ++p)
        for (int i = 1; i < c; ++i)
            for (int j = 1; j < c; ++j)
                if (i != j)
                    q.add_quadratic(var_index(i, p, side), var_index(j, p + 1, side),
                                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    // (sum_p x_{i,p} - 1)^2 per city and (sum_i x_{i,p} - 1)^2 per position.
    auto one_hot = [&](const std::vector<int>& vars) {
        q.offset += penalty;
        for (int v : vars) q.add_linear(v, -penalty);
        for (std::size_t a = 0; a < vars.size(); ++a)
            for (std::size_t b = a + 1; b < vars.size(); ++b)
                q.add_quadratic(vars[a], vars[b], 2.0 * penalty);
    };
    for (int i = 1; i < c; ++i) {
        std::vector<int> vars;
        for (int p = 1; p < c; ++p) vars.push_back(var_index(i, p, side));
        one_hot(vars);
    }
    for (int p = 1; p < c; ++p) {
        std::vector<int> vars;
        for (int i = 1; i < c; ++i) vars.push_back(var_index(i, p, side));
        one_hot(vars);
    }
    return enc;
}

IsingModel qubo_to_ising(const Qubo& q) {
    // x = (1 - z) / 2 exactly
    IsingModel m;
    m.num_spins = q.num_vars;
    m.offset = q.offset;
    for (const auto& [v, w] : q.linear) {
        m.offset += w / 2.0;
        m.h[v] -= w / 2.0;
    }
    for (const auto& [key, w] : q.quadratic) {
        m.offset += w / 4.0;
        m.h[key.first] -= w / 4.0;
        m.h[key.second] -= w / 4.0;
        m.coupling[key] += w / 4.0;
    }
    return m;
}

std::vector<std::uint64_t> feasible_indices(const TspInstance& instance) {
    const int side = instance.city_count - 1;
    std::vector<int> positions(static_cast<std::size_t>(side));
    for (int i = 0; i < side; ++i) positions[static_cast<std::size_t>(i)] = i + 1;

    std::vector<std::uint64_t> out;
    do {
        std::uint64_t idx = 0;
        for (int i = 1; i <= side; ++i) {
            const int p = positions[static_cast<std::size_t>(i - 1)];
            idx |= std::uint64_t{1} << var_index(i, p, side);
        }
        out.push_back(idx);
    } while (std::next_permutation(positions.begin(), positions.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::uint64_t, double> brute_force_min(const Qubo& q) {
    if (q.num_vars < 1 || q.num_vars > 20)
        throw std::length_error("brute force: variable count out of [1, 20]");
    std::uint64_t best_idx = 0;
    double best_e = q.energy(0);
    const std::uint64_t total = std::uint64_t{1} << q.num_vars;
    for (std::uint64_t x = 1; x < total; ++x) {
        const double e = q.energy(x);
        if (e < best_e) {
            best_e = e;
            best_idx = x;
        }
    }
    return {best_idx, best_e};
}

TspInstance example_tsp3() {
    return TspInstance::create({{0, 1, 4}, {1, 0, 2}, {4, 2, 0}});
}

std::string tsp_to_json(const TspInstance& instance) {
    nlohmann::json j;
    j["cities"] = instance.city_count;
    j["distances"] = instance.distances;
    return j.dump(2);
}

TspInstance tsp_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("tsp instance: bad JSON: ") + e.what());
    }
    if (!j.contains("cities") || !j["cities"].is_number_integer())
        throw std::invalid_argument("tsp instance: missing integer field \"cities\"");
    if (!j.contains("distances") || !j["distances"].is_array())
        throw std::invalid_argument("tsp instance: missing array field \"distances\"");
    std::vector<std::vector<double>> d;
    try {
        d = j["distances"].get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("tsp instance: field \"distances\" is not a numeric matrix");
    }
    const TspInstance inst = TspInstance::create(std::move(d));
    if (inst.city_count != j["cities"].get<int>())
        throw std::invalid_argument("tsp instance: field \"cities\" disagrees with matrix size");
    return inst;
}

} // namespace qgs
