#pragma once

#include <complex>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sized for desk-scale verification work
// (dims are capped at 64 upstream), so no blocking or BLAS.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n) {
        CMatrix I(n, n);
        for (int i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix adjoint() const;
    double frobenius_norm() const;

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix scaled(cplx c) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// Square complex matrix certified Hermitian at construction.
// Hermiticity tolerance: 1e-12 * max(1, ||A||_F).
class HermitianMatrix {
  public:
    HermitianMatrix() = default;

    // Validates hermiticity; throws NotHermitian.
    static HermitianMatrix from_matrix(const CMatrix& a);
    static HermitianMatrix from_raw(int dim, const std::vector<cplx>& entries);

    // Symmetrizes (A + A*)/2 instead of validating; for results that are
    // Hermitian by construction up to rounding.
    static HermitianMatrix symmetrized(const CMatrix& a);

    static HermitianMatrix identity(int n) { return HermitianMatrix(CMatrix::identity(n)); }
    static HermitianMatrix zero(int n) { return HermitianMatrix(CMatrix(n, n)); }
    static HermitianMatrix diagonal(const std::vector<double>& d);
    static HermitianMatrix scalar(double x) { return diagonal({x}); }

    int dim() const { return mat_.rows(); }
    const CMatrix& mat() const { return mat_; }
    const cplx& operator()(int i, int j) const { return mat_(i, j); }

    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double trace_real() const;

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    HermitianMatrix scaled(double c) const;
    HermitianMatrix plus_scaled_identity(double c) const;

  private:
    explicit HermitianMatrix(CMatrix m) : mat_(std::move(m)) {}
    CMatrix mat_;
};

inline double hermiticity_tolerance(double frob) { return 1e-12 * (frob > 1.0 ? frob : 1.0); }

}  // namespace loewner
