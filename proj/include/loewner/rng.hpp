#pragma once

#include <cstdint>
#include <random>

#include "loewner/matrix.hpp"

namespace loewner {

// Seeded generator with fully pinned-down output: the mt19937_64 stream is
// specified by the standard and the uniform/gaussian transforms below are
// plain IEEE arithmetic, so a seed reproduces the same instances everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    cplx cgaussian() { return cplx(gaussian(), gaussian()) * 0.70710678118654752440; }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Deterministic 64-bit mix for deriving independent seed streams.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t x, std::uint64_t y);

// Haar-distributed random unitary: orthonormalize a complex Gaussian matrix;
// the positive-diagonal convention of the factorization makes the result
// rotation invariant.
CMatrix random_unitary(int n, Rng& rng);

}  // namespace loewner
