#include "loewner/calculus.hpp"

#include <cmath>
#include <string>

namespace loewner {

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a,
                               const SpectrumBound& bounds) {
    const double eps = bounds.clamp_eps();
    return apply_spectral(a, [&](double lambda) {
        if (lambda < bounds.m - eps || lambda > bounds.M + eps)
            throw SpectrumOutOfDomain("eigenvalue " + std::to_string(lambda) +
                                      " outside [" + std::to_string(bounds.m) + ", " +
                                      std::to_string(bounds.M) + "] clamp window");
        const double t = std::min(std::max(lambda, bounds.m), bounds.M);
        if (!f.domain.contains(t))
            throw FunctionDomainError("eigenvalue outside domain of " + f.label);
        const double v = f.eval(t);
        if (!std::isfinite(v))
            throw FunctionDomainError(f.label + " not finite at eigenvalue " + std::to_string(t));
        return v;
    });
}

}  // namespace loewner
