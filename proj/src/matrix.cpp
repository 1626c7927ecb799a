#include "loewner/matrix.hpp"

#include <cmath>

namespace loewner {

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape mismatch");
    CMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
    CMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix mul: inner dimension mismatch");
    CMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

CMatrix CMatrix::scaled(cplx c) const {
    CMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = c * a_[k];
    return r;
}

HermitianMatrix HermitianMatrix::from_matrix(const CMatrix& a) {
    if (a.rows() != a.cols()) throw NotHermitian("hermitian matrix must be square");
    if (a.rows() < 1) throw InvalidParams("hermitian matrix needs dim >= 1");
    const double tol = hermiticity_tolerance(a.frobenius_norm());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
                throw NotHermitian("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") breaks hermiticity tolerance");
        }
    }
    // Snap to exact hermiticity so downstream algebra sees a clean input.
    return symmetrized(a);
}

HermitianMatrix HermitianMatrix::from_raw(int dim, const std::vector<cplx>& entries) {
    if (dim < 1) throw InvalidParams("hermitian matrix needs dim >= 1");
    if (entries.size() != static_cast<size_t>(dim) * dim)
        throw DimensionMismatch("entry count does not match dim*dim");
    CMatrix a(dim, dim);
    a.data() = entries;
    return from_matrix(a);
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& a) {
    if (a.rows() != a.cols()) throw NotHermitian("hermitian matrix must be square");
    CMatrix h(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        h(i, i) = cplx(a(i, i).real(), 0.0);
        for (int j = i + 1; j < a.cols(); ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    CMatrix a(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return HermitianMatrix(std::move(a));
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += mat_(i, i).real();
    return t;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    return HermitianMatrix(mat_ + o.mat_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    return HermitianMatrix(mat_ - o.mat_);
}

HermitianMatrix HermitianMatrix::scaled(double c) const { return HermitianMatrix(mat_.scaled(c)); }

HermitianMatrix HermitianMatrix::plus_scaled_identity(double c) const {
    CMatrix r = mat_;
    for (int i = 0; i < dim(); ++i) r(i, i) += c;
    return HermitianMatrix(std::move(r));
}

}  // namespace loewner
