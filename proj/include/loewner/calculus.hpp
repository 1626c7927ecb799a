#pragma once

#include "loewner/eig.hpp"
#include "loewner/scalar_function.hpp"

namespace loewner {

// f(A) = U diag(f(lambda)) U* for spectrum(A) inside [m, M].
// Eigenvalues drifting past the bracket by at most the clamp window are
// snapped to the boundary; anything further out aborts.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a,
                               const SpectrumBound& bounds);

}  // namespace loewner
