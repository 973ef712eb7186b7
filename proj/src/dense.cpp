#include "qgs/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace qgs {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool controls_match(const GateOp& g, std::uint64_t i) {
    for (const Control& c : g.controls) {
        const bool bit = (i >> c.qubit) & 1;
        if (bit != (c.polarity == Polarity::Closed)) return false;
    }
    return true;
}

// Column i of the gate's full-space matrix: where does basis state |i> go.
DenseMatrix gate_matrix(const GateOp& g, std::size_t dim) {
    DenseMatrix m(dim);
    const std::uint64_t tmask = std::uint64_t{1} << g.target;
    for (std::uint64_t i = 0; i < dim; ++i) {
        switch (g.kind) {
            case GateKind::H: {
                const std::uint64_t i0 = i & ~tmask;
                const double sign = (i & tmask) ? -1.0 : 1.0;
                m.at(i0, i) += kInvSqrt2;
                m.at(i0 | tmask, i) += sign * kInvSqrt2;
                break;
            }
            case GateKind::X:
                m.at(i ^ tmask, i) = 1.0;
                break;
            case GateKind::Z:
                m.at(i, i) = (i & tmask) ? -1.0 : 1.0;
                break;
            case GateKind::MCX:
                m.at(controls_match(g, i) ? (i ^ tmask) : i, i) = 1.0;
                break;
            case GateKind::MCZ:
                m.at(i, i) = (controls_match(g, i) && (i & tmask)) ? -1.0 : 1.0;
                break;
        }
    }
    return m;
}

} // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dense multiply: dimension mismatch");
    const std::size_t n = a.dim();
    DenseMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx ark = a.at(r, k);
            if (ark == cplx{0, 0}) continue;
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    return out;
}

std::vector<cplx> mat_vec(const DenseMatrix& m, std::span<const cplx> v) {
    if (m.dim() != v.size())
        throw std::invalid_argument("dense mat_vec: dimension mismatch");
    std::vector<cplx> out(m.dim(), cplx{0, 0});
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

double unitarity_defect(const DenseMatrix& u) {
    const std::size_t n = u.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cplx acc{0, 0};
            for (std::size_t k = 0; k < n; ++k)
                acc += std::conj(u.at(k, r)) * u.at(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dense diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
    return worst;
}

DenseMatrix dense_unitary(const Circuit& circuit) {
    if (circuit.num_qubits() > 12)
        throw std::length_error("dense_unitary: circuit exceeds 12 qubits");
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    DenseMatrix u = DenseMatrix::identity(dim);
    for (const GateOp& g : circuit.gates())
        u = multiply(gate_matrix(g, dim), u); // later gates act on the left
    return u;
}

} // namespace qgs
