#include "qgs/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "qgs/basis.hpp"

namespace qgs {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kDustThreshold = 1e-14;

void check_qubit_count(int q) {
    if (q < 1)
        throw std::invalid_argument("state: qubit count must be >= 1");
    if (q > max_qubits())
        throw std::invalid_argument("state: qubit count " + std::to_string(q) +
                                    " exceeds maximum " + std::to_string(max_qubits()));
}

// Bitmasks a basis index must match for every control to fire.
struct ControlMask {
    std::uint64_t closed = 0;
    std::uint64_t open = 0;
    bool matches(std::uint64_t i) const {
        return (i & closed) == closed && (i & open) == 0;
    }
};

ControlMask control_mask(const GateOp& g) {
    ControlMask m;
    for (const Control& c : g.controls) {
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if (c.polarity == Polarity::Closed)
            m.closed |= bit;
        else
            m.open |= bit;
    }
    return m;
}

} // namespace

int max_qubits() {
    if (const char* env = std::getenv("GROVER_SUPPRESS_MAX_QUBITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
    }
    return 24;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = cplx{1.0, 0.0};
}

StateVector StateVector::uniform(int num_qubits) {
    StateVector s(num_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    std::fill(s.amps_.begin(), s.amps_.end(), cplx{a, 0.0});
    return s;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dim())
        throw std::invalid_argument("state: basis index out of range");
    s.amps_[0] = cplx{0.0, 0.0};
    s.amps_[index] = cplx{1.0, 0.0};
    return s;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<cplx> amplitudes) {
    StateVector s(num_qubits);
    if (amplitudes.size() != s.dim())
        throw std::invalid_argument("state: amplitude count is not 2^q");
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("state: amplitudes are not normalized");
    return s;
}

double StateVector::norm() const {
    double s2 = 0.0;
    for (const cplx& a : amps_) s2 += std::norm(a);
    return std::sqrt(s2);
}

void apply_gate(StateVector& state, const GateOp& g) {
    validate_gate(g, state.num_qubits_);
    auto& a = state.amps_;
    const std::uint64_t n = a.size();
    const std::uint64_t tmask = std::uint64_t{1} << g.target;

    switch (g.kind) {
        case GateKind::H: {
            // blocked pair walk: i0 has target bit 0, i1 = i0 | tmask
            const std::uint64_t block = tmask << 1;
            for (std::uint64_t base = 0; base < n; base += block)
                for (std::uint64_t off = 0; off < tmask; ++off) {
                    const std::uint64_t i0 = base + off;
                    const std::uint64_t i1 = i0 | tmask;
                    const cplx v0 = a[i0], v1 = a[i1];
                    a[i0] = kInvSqrt2 * (v0 + v1);
                    a[i1] = kInvSqrt2 * (v0 - v1);
                }
            break;
        }
        case GateKind::X: {
            const std::uint64_t block = tmask << 1;
            for (std::uint64_t base = 0; base < n; base += block)
                for (std::uint64_t off = 0; off < tmask; ++off)
                    std::swap(a[base + off], a[base + off + tmask]);
            break;
        }
        case GateKind::Z: {
            for (std::uint64_t i = 0; i < n; ++i)
                if (i & tmask) a[i] = -a[i];
            break;
        }
        case GateKind::MCX: {
            // controls never overlap the target, so checking i covers i|tmask
            const ControlMask cm = control_mask(g);
            for (std::uint64_t i = 0; i < n; ++i)
                if (!(i & tmask) && cm.matches(i))
                    std::swap(a[i], a[i | tmask]);
            break;
        }
        case GateKind::MCZ: {
            const ControlMask cm = control_mask(g);
            for (std::uint64_t i = 0; i < n; ++i)
                if ((i & tmask) && cm.matches(i)) a[i] = -a[i];
            break;
        }
    }
}

StateVector run_circuit(const Circuit& circuit, StateVector initial) {
    if (circuit.num_qubits() != initial.num_qubits())
        throw std::invalid_argument("run_circuit: circuit spans " +
                                    std::to_string(circuit.num_qubits()) +
                                    " qubits but state has " +
                                    std::to_string(initial.num_qubits()));
    for (const GateOp& g : circuit.gates()) apply_gate(initial, g);
    return initial;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(state.dim());
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = std::abs(amps[i]) < kDustThreshold ? 0.0 : std::norm(amps[i]);
    return p;
}

std::map<std::string, double> probability_map(const StateVector& state) {
    std::map<std::string, double> out;
    const std::vector<double> p = probabilities(state);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0)
            out[index_to_label(i, state.num_qubits())] = p[i];
    return out;
}

std::vector<double> marginal_over_top(const StateVector& state) {
    if (state.num_qubits() < 2)
        throw std::invalid_argument("marginal_over_top: need at least 2 qubits");
    const std::vector<double> p = probabilities(state);
    const std::size_t half = p.size() / 2;
    std::vector<double> marg(half);
    for (std::size_t i = 0; i < half; ++i) marg[i] = p[i] + p[i + half];
    return marg;
}

std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                            std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0)
        throw std::invalid_argument("sample: shots must be >= 1");
    const std::vector<double> p = probabilities(state);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }

    // Raw 53-bit uniforms from a fixed engine keep histograms reproducible
    // independent of the standard library's distribution internals. Draws
    // scale by the accumulated mass, so zero-probability buckets stay
    // unreachable even with the dust threshold trimming the total.
    std::mt19937_64 rng(seed);
    auto next_uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::map<std::string, std::uint64_t> hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = next_uniform() * cdf.back();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            it == cdf.end() ? cdf.size() - 1
                            : static_cast<std::size_t>(it - cdf.begin());
        ++hist[index_to_label(idx, state.num_qubits())];
    }
    return hist;
}

} // namespace qgs
