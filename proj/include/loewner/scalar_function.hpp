#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "loewner/bounds.hpp"

namespace loewner {

// Scalar function families used throughout the inequality chains.
//
//   power              x^t                           params {t}
//   harmonic_resolvent (1 - t + t/x)^{-1}            params {t}, t < 0, needs m >= 1
//   exp_scaled         e^{c x}                       params {c}
//   geom_envelope      (M^{x-m} m^{M-x})^{t/(M-m)}   params {t}
//   geom_interp        (fM^{x-m} fm^{M-x})^{1/(M-m)} params {fm, fM}
//   geom_interp_pow    fM^{x-m} fm^{M-x}             params {fm, fM}
//   interval_root      x^{1/(M-m)}                   no params
//   exp_tangent        e^{c (x - t0)}                params {c, t0}
//
// geom_interp is the geometric interpolation between a positive function's
// endpoint values f(m), f(M); it bounds any log-convex f from above on
// [m, M] and anchors it at the endpoints. geom_interp_pow is its (M-m)-th
// power; interval_root undoes that power.
enum class FamilyKind {
    power,
    harmonic_resolvent,
    exp_scaled,
    geom_envelope,
    geom_interp,
    geom_interp_pow,
    interval_root,
    exp_tangent,
};

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double x) const { return x > lo && x < hi; }
};

// Evaluable real function with an analytic derivative and curvature tags.
// Derivatives are closed-form per family; finite differences appear only in
// test oracles, since the alpha/beta constants are derivative-sensitive.
struct ScalarFunction {
    FamilyKind kind{};
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    Interval domain;
    bool convex = false;
    bool concave = false;
    bool log_convex = false;
    int monotone_direction = 0;  // +1 increasing, -1 decreasing, 0 none/unknown
    std::string label;

    double operator()(double x) const { return eval(x); }
};

ScalarFunction make_family(FamilyKind kind, const std::vector<double>& params,
                           const SpectrumBound& bounds);

// Chord of f over [m, M]: slope a_f = (f(M) - f(m)) / (M - m),
// intercept b_f = (M f(m) - m f(M)) / (M - m).
struct SecantLine {
    double slope = 0.0;
    double intercept = 0.0;
    SpectrumBound bounds;

    double operator()(double t) const { return slope * t + intercept; }
};

SecantLine secant(const ScalarFunction& f, const SpectrumBound& bounds);

// f(t0) + f'(t0) (t - t0); lies below f on the convexity interval
// (above, for concave f). t0 may sit anywhere in f's domain.
double tangent_value(const ScalarFunction& f, double t0, double t);

// Mond-Pecaric constants at a calibration point t0:
//   alpha = a_f / f'(t0)
//   beta  = a_f t0 + b_f - a_f f(t0) / f'(t0)
// They satisfy alpha * tangent(t) + beta = secant(t) identically.
struct AlphaBeta {
    double alpha = 0.0;
    double beta = 0.0;
    double t0 = 0.0;
};

AlphaBeta mond_pecaric_constants(const ScalarFunction& f, const SpectrumBound& bounds, double t0);

// Mean-value calibration: the t0 in (m, M) where h'(t0) equals the secant
// slope, making alpha = 1. Bisection on h' - a_h; requires h' monotone.
double mean_value_point(const ScalarFunction& h, const SpectrumBound& bounds);

// Calibration with beta(h, t0) = 0, yielding a purely multiplicative bound.
double zero_offset_point(const ScalarFunction& h, const SpectrumBound& bounds);

// True iff log f passes a midpoint-convexity grid test on [m, M] and the
// geometric endpoint interpolation dominates f at every grid point.
bool is_log_convex(const ScalarFunction& f, const SpectrumBound& bounds);

}  // namespace loewner
