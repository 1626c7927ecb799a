#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loewner/eig.hpp"
#include "loewner/rng.hpp"

namespace loewner {

// Positive linear map between Hermitian matrix spaces. Concrete kinds:
//
//   identity          X -> X
//   compression       X -> V* X V          (V* V = I on the output space)
//   unitary_mixture   X -> sum_i w_i U_i* X U_i   (w on the simplex)
//   pinching          X -> block-diagonal restriction over a partition
//   trace_state       X -> tr(X rho) as a 1x1 matrix (rho a density matrix)
//   induced           the normalized map transporting a positive map
//                     through a positive definite anchor A:
//                     X -> phi(A)^{-1/2} phi(A^{1/2} X A^{1/2}) phi(A)^{-1/2}
//
// Every base kind is normalized (maps I to I). Non-normalized maps exist
// only as a positive scalar multiple of a normalized one, applied on top.
class PositiveLinearMap {
  public:
    enum class Kind { identity, compression, unitary_mixture, pinching, trace_state, induced };

    static PositiveLinearMap identity(int dim);
    static PositiveLinearMap compression(const CMatrix& isometry);
    static PositiveLinearMap unitary_mixture(std::vector<double> weights,
                                             std::vector<CMatrix> unitaries);
    static PositiveLinearMap pinching(int dim, std::vector<std::vector<int>> blocks);
    static PositiveLinearMap trace_state(const HermitianMatrix& rho);
    // Pure scaling X -> c X, c > 0 (c times the identity map).
    static PositiveLinearMap scale(int dim, double c);

    // Returns a copy scaled by c > 0 on top of this map.
    PositiveLinearMap scaled_by(double c) const;

    HermitianMatrix apply(const HermitianMatrix& x) const;

    Kind kind() const { return kind_; }
    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }
    double scale_factor() const { return scale_; }
    bool normalized() const { return scale_ == 1.0; }
    std::string kind_name() const;

    // Payload accessors (serialization / replay).
    const CMatrix& isometry() const { return isometry_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<CMatrix>& unitaries() const { return unitaries_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const HermitianMatrix& state() const { return rho_; }

  private:
    PositiveLinearMap() = default;
    void self_test() const;

    Kind kind_ = Kind::identity;
    int in_dim_ = 0;
    int out_dim_ = 0;
    double scale_ = 1.0;

    CMatrix isometry_;                      // compression
    std::vector<double> weights_;           // unitary_mixture
    std::vector<CMatrix> unitaries_;        // unitary_mixture
    std::vector<std::vector<int>> blocks_;  // pinching
    HermitianMatrix rho_;                   // trace_state

    // induced: inner map plus the anchor's square root and phi(A)^{-1/2}
    std::shared_ptr<const PositiveLinearMap> inner_;
    CMatrix anchor_sqrt_;
    CMatrix image_inv_sqrt_;

    friend PositiveLinearMap induced_map(const PositiveLinearMap&, const HermitianMatrix&);
};

// The normalized map psi(X) = phi(A)^{-1/2} phi(A^{1/2} X A^{1/2}) phi(A)^{-1/2}.
// Requires A and phi(A) positive definite; psi(I) = I is verified at
// construction. Independent of any scalar multiple carried by phi.
PositiveLinearMap induced_map(const PositiveLinearMap& phi, const HermitianMatrix& a);

// Random payload generators for suite trials.
PositiveLinearMap random_map(const std::string& kind_name, int dim, Rng& rng);

}  // namespace loewner
