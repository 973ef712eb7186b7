#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qgs/circuit.hpp"

namespace qgs {

using cplx = std::complex<double>;

// Row-major square complex matrix. Small-dimension reference arithmetic
// only; nothing here is tuned.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0, 0}) {}

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    cplx& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<cplx> mat_vec(const DenseMatrix& m, std::span<const cplx> v);

// max |(U^dagger U - I)_{rc}|
double unitarity_defect(const DenseMatrix& u);

// max elementwise |a - b|
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Full 2^q x 2^q matrix of a circuit, built column by column from the gate
// definitions rather than through the statevector kernels, so it can serve
// as an independent reference for them. Throws for q > 12.
DenseMatrix dense_unitary(const Circuit& circuit);

} // namespace qgs
