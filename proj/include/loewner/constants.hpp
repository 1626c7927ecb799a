#pragma once

#include <map>
#include <optional>
#include <string>

#include "loewner/scalar_function.hpp"

namespace loewner {

// Optimal multiplicative constant mu(m, M, f):
//   max over [m, M] of (a_f t + b_f) / f(t)
// Global 1024-point grid scan, then golden-section refinement of the best
// bracket down to width 1e-12 (M - m). The grid pre-scan is there because
// the ratio is not guaranteed unimodal.
double secant_ratio_constant(const ScalarFunction& f, const SpectrumBound& bounds);

// Generalized Kantorovich constant K(m, M, t); the closed form of the
// secant-ratio constant for x^t. Structurally undefined at t in {0, 1}.
double kantorovich_constant(const SpectrumBound& bounds, double t);

// Weighted harmonic mean of 1 and x with weight t: (1 - t + t/x)^{-1}.
double scalar_harmonic(double t, double x);

// Sharp constant for the weighted harmonic mean chains (t <= 0, m >= 1):
//   H(m,M,t) = [(1-t)^2 + (t/mM) (2 (1-t) sqrt(mM) + t)] (1 !_t m)(1 !_t M).
double harmonic_mean_constant(const SpectrumBound& bounds, double t);

// t -> -inf limit of H: (sqrt(mM) - 1)^2 / ((m-1)(M-1)); needs m > 1.
double harmonic_mean_constant_limit(const SpectrumBound& bounds);

// Bag of named constants attached to a chain report. Every stored value is
// finite; provenance records which operation produced it.
struct ConstantSet {
    std::map<std::string, double> values;
    std::map<std::string, std::string> provenance;

    void set(const std::string& name, double v, const std::string& origin);
    std::optional<double> get(const std::string& name) const;
};

}  // namespace loewner
