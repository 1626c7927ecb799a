#include "loewner/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace loewner {

namespace {

// One cyclic-Jacobi run over a row-major Hermitian matrix held in a flat
// buffer of std::complex<Real>. Rotations zero a[p][q] via the unitary
//   R = I except R[pp]=c, R[pq]=-s e^{i t}, R[qp]=s e^{-i t}, R[qq]=c
// with e^{i t} the phase of a[p][q]. Vectors accumulate in vecs when given.
template <typename Real>
void jacobi_cycle(std::vector<std::complex<Real>>& a, int n, std::vector<std::complex<Real>>* vecs) {
    using C = std::complex<Real>;
    auto at = [&](std::vector<C>& m, int i, int j) -> C& {
        return m[static_cast<size_t>(i) * n + j];
    };

    Real frob2 = 0;
    for (const C& v : a) frob2 += std::norm(v);
    const Real frob = std::sqrt(frob2);
    if (frob == Real(0)) return;

    const Real conv = std::numeric_limits<Real>::epsilon() * Real(16);
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real off2 = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off2 += Real(2) * std::norm(at(a, p, q));
        if (std::sqrt(off2) <= conv * frob) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const C apq = at(a, p, q);
                const Real r = std::abs(apq);
                if (r <= conv * frob / Real(n)) continue;

                const Real app = at(a, p, p).real();
                const Real aqq = at(a, q, q).real();
                const C phase = apq / r;  // e^{i t}

                // Zeroing condition: r (c^2 - s^2) + c s (aqq - app) = 0,
                // i.e. t^2 - 2 tau t - 1 = 0 with tau = (aqq - app) / (2 r);
                // take the small-magnitude root.
                const Real tau = (aqq - app) / (Real(2) * r);
                const Real t = (tau >= Real(0))
                                   ? Real(-1) / (tau + std::sqrt(tau * tau + Real(1)))
                                   : Real(1) / (-tau + std::sqrt(tau * tau + Real(1)));
                const Real c = Real(1) / std::sqrt(Real(1) + t * t);
                const Real s = t * c;

                const C rpq = -s * phase;           // R[p][q]
                const C rqp = s * std::conj(phase); // R[q][p]

                // A <- R* A R: columns p,q then rows p,q.
                for (int k = 0; k < n; ++k) {
                    const C akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp + rqp * akq;
                    at(a, k, q) = rpq * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const C apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk + std::conj(rqp) * aqk;
                    at(a, q, k) = std::conj(rpq) * apk + c * aqk;
                }
                at(a, p, q) = C(0);
                at(a, q, p) = C(0);
                at(a, p, p) = C(at(a, p, p).real(), 0);
                at(a, q, q) = C(at(a, q, q).real(), 0);

                if (vecs) {
                    for (int k = 0; k < n; ++k) {
                        const C vkp = at(*vecs, k, p), vkq = at(*vecs, k, q);
                        at(*vecs, k, p) = c * vkp + rqp * vkq;
                        at(*vecs, k, q) = rpq * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

template <typename Real>
std::vector<Real> values_sorted(const HermitianMatrix& h) {
    const int n = h.dim();
    std::vector<std::complex<Real>> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] =
                std::complex<Real>(Real(h(i, j).real()), Real(h(i, j).imag()));
    jacobi_cycle<Real>(a, n, nullptr);
    std::vector<Real> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a[static_cast<size_t>(i) * n + i].real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

void validate_hermitian(const HermitianMatrix& h) {
    const CMatrix& m = h.mat();
    const double tol = hermiticity_tolerance(m.frobenius_norm());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                throw NotHermitian("matrix breaks hermiticity tolerance");
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
    validate_hermitian(h);
    const int n = h.dim();

    std::vector<cplx> a = h.mat().data();
    std::vector<cplx> u(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i) * n + i] = 1.0;

    jacobi_cycle<double>(a, n, &u);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<size_t>(i) * n + i].real() < a[static_cast<size_t>(j) * n + j].real();
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        out.eigenvalues[j] = a[static_cast<size_t>(src) * n + src].real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = u[static_cast<size_t>(i) * n + src];
    }
    return out;
}

std::vector<double> eigenvalues_only(const HermitianMatrix& h) {
    validate_hermitian(h);
    return values_sorted<double>(h);
}

double min_eigenvalue(const HermitianMatrix& h) { return values_sorted<double>(h).front(); }

double min_eigenvalue_refined(const HermitianMatrix& h) {
    return static_cast<double>(values_sorted<long double>(h).front());
}

OrderVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double rtol) {
    if (a.dim() != b.dim()) throw DimensionMismatch("loewner_leq: dimensions differ");
    OrderVerdict v;
    const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
    v.tolerance_used = rtol * scale;
    v.min_eig_gap = min_eigenvalue(b - a);
    v.holds = v.min_eig_gap >= -v.tolerance_used;
    if (!v.holds && v.min_eig_gap > -10.0 * v.tolerance_used) {
        // Near miss: retry in extended precision before calling it.
        v.min_eig_gap = min_eigenvalue_refined(b - a);
        v.holds = v.min_eig_gap >= -v.tolerance_used;
        v.marginal = !v.holds;
    }
    return v;
}

std::pair<HermitianMatrix, HermitianMatrix> sqrt_and_inv_sqrt(const HermitianMatrix& a) {
    const SpectralDecomposition d = spectral_decompose(a);
    if (d.eigenvalues.front() <= 0.0)
        throw NotPositiveDefinite("sqrt requires a positive definite matrix, min eig = " +
                                  std::to_string(d.eigenvalues.front()));
    const int n = a.dim();
    CMatrix sq(n, n), isq(n, n);
    const CMatrix& u = d.eigenvectors;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx s{}, is{};
            for (int k = 0; k < n; ++k) {
                const cplx w = u(i, k) * std::conj(u(j, k));
                const double rt = std::sqrt(d.eigenvalues[k]);
                s += w * rt;
                is += w / rt;
            }
            sq(i, j) = s;
            isq(i, j) = is;
        }
    }
    return {HermitianMatrix::symmetrized(sq), HermitianMatrix::symmetrized(isq)};
}

HermitianMatrix congruence(const CMatrix& c, const HermitianMatrix& x) {
    if (c.rows() != x.dim()) throw DimensionMismatch("congruence: C rows must match dim(X)");
    return HermitianMatrix::symmetrized(c.adjoint() * x.mat() * c);
}

HermitianMatrix apply_spectral(const HermitianMatrix& a, const std::function<double(double)>& fn) {
    const SpectralDecomposition d = spectral_decompose(a);
    const int n = a.dim();
    std::vector<double> mapped(n);
    for (int k = 0; k < n; ++k) mapped[k] = fn(d.eigenvalues[k]);
    const CMatrix& u = d.eigenvectors;
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s{};
            for (int k = 0; k < n; ++k) s += u(i, k) * mapped[k] * std::conj(u(j, k));
            r(i, j) = s;
        }
    return HermitianMatrix::symmetrized(r);
}

HermitianMatrix inverse_pd(const HermitianMatrix& a) {
    if (min_eigenvalue(a) <= 0.0) throw NotPositiveDefinite("inverse requires positive definiteness");
    return apply_spectral(a, [](double x) { return 1.0 / x; });
}

}  // namespace loewner
