#include "loewner/constants.hpp"

#include <cmath>

namespace loewner {

double secant_ratio_constant(const ScalarFunction& f, const SpectrumBound& bounds) {
    const SecantLine line = secant(f, bounds);
    auto ratio = [&](double t) {
        const double v = f.eval(t);
        if (!(v > 0.0) || !std::isfinite(v))
            throw FunctionDomainError("secant-ratio constant needs f > 0 on [m, M]");
        return line(t) / v;
    };

    constexpr int kGrid = 1024;
    int best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const double t = bounds.m + bounds.width() * i / (kGrid - 1);
        const double r = ratio(t);
        if (r > best_val) {
            best_val = r;
            best = i;
        }
    }

    const double step = bounds.width() / (kGrid - 1);
    double lo = std::max(bounds.m, bounds.m + (best - 1) * step);
    double hi = std::min(bounds.M, bounds.m + (best + 1) * step);

    // Golden-section maximization inside the winning bracket.
    const double invphi = 0.6180339887498948482;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    while (hi - lo > 1e-12 * bounds.width()) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = ratio(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = ratio(x2);
        }
    }
    return std::max({best_val, f1, f2});
}

double kantorovich_constant(const SpectrumBound& bounds, double t) {
    if (t == 0.0 || t == 1.0)
        throw InvalidParams("Kantorovich constant is undefined at t in {0, 1}");
    const double m = bounds.m, M = bounds.M;
    const double mMt = m * std::pow(M, t), Mmt = M * std::pow(m, t);
    const double lead = (mMt - Mmt) / ((t - 1.0) * (M - m));
    const double inner = ((t - 1.0) / t) * (std::pow(M, t) - std::pow(m, t)) / (mMt - Mmt);
    return lead * std::pow(inner, t);
}

double scalar_harmonic(double t, double x) {
    const double u = 1.0 - t + t / x;
    if (!(u > 0.0)) throw PoleError("weighted harmonic mean hits a pole: 1 - t + t/x <= 0");
    return 1.0 / u;
}

double harmonic_mean_constant(const SpectrumBound& bounds, double t) {
    if (bounds.m < 1.0) throw InvalidParams("harmonic mean constant requires m >= 1");
    if (t > 0.0) throw InvalidParams("harmonic mean constant requires t <= 0");
    const double m = bounds.m, M = bounds.M;
    const double bracket =
        (1.0 - t) * (1.0 - t) + (t / (m * M)) * (2.0 * (1.0 - t) * std::sqrt(m * M) + t);
    return bracket * scalar_harmonic(t, m) * scalar_harmonic(t, M);
}

double harmonic_mean_constant_limit(const SpectrumBound& bounds) {
    if (bounds.m <= 1.0)
        throw InvalidParams("harmonic mean constant limit requires m > 1");
    const double s = std::sqrt(bounds.m * bounds.M) - 1.0;
    return s * s / ((bounds.m - 1.0) * (bounds.M - 1.0));
}

void ConstantSet::set(const std::string& name, double v, const std::string& origin) {
    if (!std::isfinite(v)) throw InvalidParams("constant '" + name + "' is not finite");
    values[name] = v;
    provenance[name] = origin;
}

std::optional<double> ConstantSet::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) return std::nullopt;
    return it->second;
}

}  // namespace loewner
