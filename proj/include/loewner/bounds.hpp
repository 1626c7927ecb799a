#pragma once

#include "loewner/errors.hpp"

namespace loewner {

// Spectral bracket [m, M] with 0 < m < M. Degenerate m == M is rejected:
// every secant-type formula divides by M - m.
struct SpectrumBound {
    double m;
    double M;

    SpectrumBound(double m_, double M_) : m(m_), M(M_) {
        if (!(m > 0.0) || !(m < M)) {
            throw InvalidParams("SpectrumBound requires 0 < m < M, got m=" + std::to_string(m_) +
                                ", M=" + std::to_string(M_));
        }
    }

    double width() const { return M - m; }
    double midpoint() const { return 0.5 * (m + M); }
    bool contains(double t) const { return t >= m && t <= M; }

    // Drift window for functional-calculus clamping; keeps e.g. quotient
    // spectra from aborting a chain over last-bit rounding.
    double clamp_eps() const { return 1e-9 * (M > 1.0 ? M : 1.0); }
};

}  // namespace loewner
