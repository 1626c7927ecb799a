#include "loewner/scalar_function.hpp"

#include <cmath>
#include <sstream>

namespace loewner {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

ScalarFunction make_power(double t) {
    ScalarFunction f;
    f.kind = FamilyKind::power;
    f.eval = [t](double x) { return std::pow(x, t); };
    f.deriv = [t](double x) { return t * std::pow(x, t - 1.0); };
    f.domain = {0.0, std::numeric_limits<double>::infinity()};
    f.convex = (t <= 0.0 || t >= 1.0);
    f.concave = (t >= 0.0 && t <= 1.0);
    f.log_convex = (t < 0.0);
    f.monotone_direction = (t > 0.0) ? 1 : (t < 0.0 ? -1 : 0);
    f.label = "pow:" + fmt(t);
    return f;
}

// (1 - t + t/x)^{-1}; log-convex on [m, M] for t < 0 provided m >= 1.
ScalarFunction make_harmonic_resolvent(double t, const SpectrumBound& bounds) {
    if (!(t < 0.0))
        throw InvalidParams("harmonic_resolvent requires t < 0, got t=" + fmt(t));
    if (bounds.m < 1.0)
        throw InvalidParams("harmonic_resolvent requires bounds with m >= 1");
    ScalarFunction f;
    f.kind = FamilyKind::harmonic_resolvent;
    f.eval = [t](double x) { return 1.0 / (1.0 - t + t / x); };
    f.deriv = [t](double x) {
        const double u = 1.0 - t + t / x;
        return (t / (x * x)) / (u * u);
    };
    // Pole where 1 - t + t/x = 0, i.e. x = t / (t - 1) in (0, 1) for t < 0.
    f.domain = {t / (t - 1.0), std::numeric_limits<double>::infinity()};
    f.convex = true;
    f.log_convex = true;
    f.monotone_direction = -1;
    f.label = "hres:" + fmt(t);
    return f;
}

ScalarFunction make_exp_scaled(double c) {
    if (c == 0.0) throw InvalidParams("exp_scaled requires a nonzero rate");
    ScalarFunction f;
    f.kind = FamilyKind::exp_scaled;
    f.eval = [c](double x) { return std::exp(c * x); };
    f.deriv = [c](double x) { return c * std::exp(c * x); };
    f.convex = true;
    f.log_convex = true;  // log f is affine
    f.monotone_direction = (c > 0.0) ? 1 : -1;
    f.label = "exp:" + fmt(c);
    return f;
}

// exp(p + q x): shared shape of the geometric envelopes.
ScalarFunction make_exp_affine(FamilyKind kind, double p, double q, std::string label) {
    ScalarFunction f;
    f.kind = kind;
    f.eval = [p, q](double x) { return std::exp(p + q * x); };
    f.deriv = [p, q](double x) { return q * std::exp(p + q * x); };
    f.convex = true;
    f.log_convex = true;
    f.monotone_direction = (q > 0.0) ? 1 : (q < 0.0 ? -1 : 0);
    f.label = std::move(label);
    return f;
}

ScalarFunction make_geom_envelope(double t, const SpectrumBound& b) {
    const double lm = std::log(b.m), lM = std::log(b.M);
    const double q = t * (lM - lm) / b.width();
    const double p = t * (b.M * lm - b.m * lM) / b.width();
    return make_exp_affine(FamilyKind::geom_envelope, p, q, "genv:" + fmt(t));
}

ScalarFunction make_geom_interp(double fm, double fM, const SpectrumBound& b, bool normalized) {
    if (!(fm > 0.0) || !(fM > 0.0))
        throw InvalidParams("geometric interpolation needs positive endpoint values");
    const double lm = std::log(fm), lM = std::log(fM);
    const double scale = normalized ? 1.0 / b.width() : 1.0;
    const double q = scale * (lM - lm);
    const double p = scale * (b.M * lm - b.m * lM);
    return make_exp_affine(normalized ? FamilyKind::geom_interp : FamilyKind::geom_interp_pow, p, q,
                           (normalized ? "ginterp(" : "ginterp_pow(") + fmt(fm) + "," + fmt(fM) +
                               ")");
}

ScalarFunction make_interval_root(const SpectrumBound& b) {
    const double r = 1.0 / b.width();
    ScalarFunction f;
    f.kind = FamilyKind::interval_root;
    f.eval = [r](double x) { return std::pow(x, r); };
    f.deriv = [r](double x) { return r * std::pow(x, r - 1.0); };
    f.domain = {0.0, std::numeric_limits<double>::infinity()};
    f.convex = (r >= 1.0);
    f.concave = (r <= 1.0);
    f.monotone_direction = 1;
    f.label = "iroot:" + fmt(r);
    return f;
}

ScalarFunction make_exp_tangent(double c, double t0) {
    if (c == 0.0) throw InvalidParams("exp_tangent requires a nonzero rate");
    ScalarFunction f;
    f.kind = FamilyKind::exp_tangent;
    f.eval = [c, t0](double x) { return std::exp(c * (x - t0)); };
    f.deriv = [c, t0](double x) { return c * std::exp(c * (x - t0)); };
    f.convex = true;
    f.log_convex = true;
    f.monotone_direction = (c > 0.0) ? 1 : -1;
    f.label = "etan(" + fmt(c) + "," + fmt(t0) + ")";
    return f;
}

void need_params(const std::vector<double>& params, size_t n, const char* kind) {
    if (params.size() != n)
        throw InvalidParams(std::string(kind) + " expects " + std::to_string(n) + " parameter(s)");
}

}  // namespace

ScalarFunction make_family(FamilyKind kind, const std::vector<double>& params,
                           const SpectrumBound& bounds) {
    switch (kind) {
        case FamilyKind::power:
            need_params(params, 1, "power");
            return make_power(params[0]);
        case FamilyKind::harmonic_resolvent:
            need_params(params, 1, "harmonic_resolvent");
            return make_harmonic_resolvent(params[0], bounds);
        case FamilyKind::exp_scaled:
            need_params(params, 1, "exp_scaled");
            return make_exp_scaled(params[0]);
        case FamilyKind::geom_envelope:
            need_params(params, 1, "geom_envelope");
            return make_geom_envelope(params[0], bounds);
        case FamilyKind::geom_interp:
            need_params(params, 2, "geom_interp");
            return make_geom_interp(params[0], params[1], bounds, true);
        case FamilyKind::geom_interp_pow:
            need_params(params, 2, "geom_interp_pow");
            return make_geom_interp(params[0], params[1], bounds, false);
        case FamilyKind::interval_root:
            need_params(params, 0, "interval_root");
            return make_interval_root(bounds);
        case FamilyKind::exp_tangent:
            need_params(params, 2, "exp_tangent");
            return make_exp_tangent(params[0], params[1]);
    }
    throw InvalidParams("unknown scalar family kind");
}

SecantLine secant(const ScalarFunction& f, const SpectrumBound& bounds) {
    if (!f.domain.contains(bounds.m) || !f.domain.contains(bounds.M))
        throw FunctionDomainError("secant endpoints outside function domain for " + f.label);
    const double fm = f.eval(bounds.m), fM = f.eval(bounds.M);
    if (!std::isfinite(fm) || !std::isfinite(fM))
        throw FunctionDomainError("secant endpoints not finite for " + f.label);
    SecantLine s{(fM - fm) / bounds.width(), (bounds.M * fm - bounds.m * fM) / bounds.width(),
                 bounds};
    return s;
}

double tangent_value(const ScalarFunction& f, double t0, double t) {
    if (!f.domain.contains(t0)) throw FunctionDomainError("tangent point outside domain of " + f.label);
    return f.eval(t0) + f.deriv(t0) * (t - t0);
}

AlphaBeta mond_pecaric_constants(const ScalarFunction& f, const SpectrumBound& bounds, double t0) {
    const double d0 = f.deriv(t0);
    if (d0 == 0.0 || !std::isfinite(d0))
        throw ZeroDerivative("alpha/beta need a nonzero derivative at t0 for " + f.label);

    // Monotonicity gate: a sign flip of f' on a 64-point grid means the
    // secant and tangent slopes may disagree in sign and alpha < 0.
    int sign_seen = 0;
    for (int i = 0; i < 64; ++i) {
        const double t = bounds.m + bounds.width() * (i + 0.5) / 64.0;
        const double d = f.deriv(t);
        if (d == 0.0) continue;
        const int s = d > 0.0 ? 1 : -1;
        if (sign_seen == 0) sign_seen = s;
        else if (s != sign_seen)
            throw NotMonotone("derivative changes sign on [m, M] for " + f.label);
    }

    const SecantLine line = secant(f, bounds);
    AlphaBeta ab;
    ab.t0 = t0;
    ab.alpha = line.slope / d0;
    ab.beta = line.slope * t0 + line.intercept - line.slope * f.eval(t0) / d0;
    return ab;
}

double mean_value_point(const ScalarFunction& h, const SpectrumBound& bounds) {
    const SecantLine line = secant(h, bounds);
    const double delta = 1e-9 * bounds.width();
    double lo = bounds.m + delta, hi = bounds.M - delta;
    auto g = [&](double t) { return h.deriv(t) - line.slope; };
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw NoRoot("h' - a_h has no sign change on (m, M) for " + h.label);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0 || hi - lo < 1e-15 * bounds.width()) return mid;
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double zero_offset_point(const ScalarFunction& h, const SpectrumBound& bounds) {
    const SecantLine line = secant(h, bounds);
    const double tol = 1e-10 * std::max(1.0, std::abs(line.intercept));
    auto beta_at = [&](double t) { return mond_pecaric_constants(h, bounds, t).beta; };

    const double mid = bounds.midpoint();
    const double bmid = beta_at(mid);
    if (std::abs(bmid) <= tol) return mid;  // covers affine h, where beta == 0

    const double delta = 1e-9 * bounds.width();
    double lo = bounds.m + delta, hi = bounds.M - delta;
    double blo = beta_at(lo), bhi = beta_at(hi);
    if ((blo > 0.0) == (bhi > 0.0)) throw NoRoot("beta(h, .) has no sign change on (m, M)");
    for (int it = 0; it < 200; ++it) {
        const double t = 0.5 * (lo + hi);
        const double b = beta_at(t);
        if (std::abs(b) <= tol) return t;
        if ((b > 0.0) == (blo > 0.0)) {
            lo = t;
            blo = b;
        } else {
            hi = t;
        }
    }
    return 0.5 * (lo + hi);
}

bool is_log_convex(const ScalarFunction& f, const SpectrumBound& bounds) {
    constexpr int kGrid = 256;
    std::vector<double> logs(kGrid);
    std::vector<double> vals(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        const double t = bounds.m + bounds.width() * i / (kGrid - 1);
        const double v = f.eval(t);
        if (!(v > 0.0) || !std::isfinite(v)) return false;
        vals[i] = v;
        logs[i] = std::log(v);
    }
    // Midpoint convexity on the uniform grid.
    for (int i = 0; i + 2 < kGrid; ++i) {
        if (logs[i + 1] > 0.5 * (logs[i] + logs[i + 2]) + 1e-12 * (1.0 + std::abs(logs[i + 1])))
            return false;
    }
    // Geometric endpoint interpolation must dominate f at every grid point.
    const double fm = vals.front(), fM = vals.back();
    for (int i = 0; i < kGrid; ++i) {
        const double t = bounds.m + bounds.width() * i / (kGrid - 1);
        const double env =
            std::exp(((t - bounds.m) * std::log(fM) + (bounds.M - t) * std::log(fm)) /
                     bounds.width());
        if (vals[i] > env * (1.0 + 1e-10)) return false;
    }
    return true;
}

}  // namespace loewner
