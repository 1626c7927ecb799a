#include "loewner/rng.hpp"

#include <cmath>

namespace loewner {

std::uint64_t mix_seed(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t x, std::uint64_t y) { return mix_seed(x ^ mix_seed(y)); }

CMatrix random_unitary(int n, Rng& rng) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();

    // Modified Gram-Schmidt over columns, run twice: the second pass mops up
    // the orthogonality loss of the first. Diagonal scale factors stay real
    // positive, which is exactly the phase convention that yields the
    // rotation-invariant distribution.
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                cplx dot{};
                for (int i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
            }
            double nrm2 = 0.0;
            for (int i = 0; i < n; ++i) nrm2 += std::norm(g(i, j));
            const double inv = 1.0 / std::sqrt(nrm2);
            for (int i = 0; i < n; ++i) g(i, j) *= inv;
        }
    }
    return g;
}

}  // namespace loewner
