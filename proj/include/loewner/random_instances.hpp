#pragma once

#include "loewner/bounds.hpp"
#include "loewner/rng.hpp"

namespace loewner {

// Random Hermitian matrix with i.i.d. uniform spectrum in [m, M] and a Haar
// random eigenbasis. With pin_endpoints and n >= 2, the extreme eigenvalues
// are set to m and M exactly.
HermitianMatrix random_hermitian_with_spectrum(int n, const SpectrumBound& bounds,
                                               bool pin_endpoints, Rng& rng);
HermitianMatrix random_hermitian_with_spectrum(int n, const SpectrumBound& bounds,
                                               bool pin_endpoints, std::uint64_t seed);

// Pair (A, B) with A positive definite (spectrum in [0.5, 2]) and
// m A <= B <= M A; the quotient A^{-1/2} B A^{-1/2} has spectrum in [m, M].
std::pair<HermitianMatrix, HermitianMatrix> random_pair_relative_bounds(
    int n, const SpectrumBound& bounds, Rng& rng);
std::pair<HermitianMatrix, HermitianMatrix> random_pair_relative_bounds(
    int n, const SpectrumBound& bounds, std::uint64_t seed);

// Random positive semidefinite matrix (Gram matrix of a Gaussian square
// factor), normalized to unit Frobenius scale. Probe fodder for map checks.
HermitianMatrix random_psd(int n, Rng& rng);

// Random Hermitian with Gaussian entries (no spectral constraint).
HermitianMatrix random_hermitian_gaussian(int n, Rng& rng);

}  // namespace loewner
