#include "loewner/random_instances.hpp"

#include <cmath>

#include "loewner/eig.hpp"

namespace loewner {

HermitianMatrix random_hermitian_with_spectrum(int n, const SpectrumBound& bounds,
                                               bool pin_endpoints, Rng& rng) {
    if (n < 1) throw InvalidParams("random_hermitian_with_spectrum: n >= 1 required");
    std::vector<double> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = rng.uniform(bounds.m, bounds.M);
    if (pin_endpoints && n >= 2) {
        lambda[0] = bounds.m;
        lambda[n - 1] = bounds.M;
    }
    if (n == 1) return HermitianMatrix::scalar(lambda[0]);

    const CMatrix u = random_unitary(n, rng);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s{};
            for (int k = 0; k < n; ++k) s += u(i, k) * lambda[k] * std::conj(u(j, k));
            a(i, j) = s;
        }
    return HermitianMatrix::symmetrized(a);
}

HermitianMatrix random_hermitian_with_spectrum(int n, const SpectrumBound& bounds,
                                               bool pin_endpoints, std::uint64_t seed) {
    Rng rng(seed);
    return random_hermitian_with_spectrum(n, bounds, pin_endpoints, rng);
}

std::pair<HermitianMatrix, HermitianMatrix> random_pair_relative_bounds(
    int n, const SpectrumBound& bounds, Rng& rng) {
    if (n < 1) throw InvalidParams("random_pair_relative_bounds: n >= 1 required");
    const HermitianMatrix a =
        random_hermitian_with_spectrum(n, SpectrumBound(0.5, 2.0), false, rng);
    const HermitianMatrix c = random_hermitian_with_spectrum(n, bounds, false, rng);
    const auto [sa, isa] = sqrt_and_inv_sqrt(a);
    (void)isa;
    const HermitianMatrix b = congruence(sa.mat(), c);  // A^{1/2} C A^{1/2}
    return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> random_pair_relative_bounds(
    int n, const SpectrumBound& bounds, std::uint64_t seed) {
    Rng rng(seed);
    return random_pair_relative_bounds(n, bounds, rng);
}

HermitianMatrix random_psd(int n, Rng& rng) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    HermitianMatrix w = HermitianMatrix::symmetrized(g.adjoint() * g);
    const double f = w.frobenius_norm();
    return f > 0 ? w.scaled(1.0 / f) : w;
}

HermitianMatrix random_hermitian_gaussian(int n, Rng& rng) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
    return HermitianMatrix::symmetrized(g);
}

}  // namespace loewner
