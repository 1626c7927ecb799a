#include "loewner/positive_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loewner/random_instances.hpp"

namespace loewner {

namespace {

constexpr double kSelfTestTol = 1e-10;

bool approx_identity(const HermitianMatrix& x, double tol) {
    return (x - HermitianMatrix::identity(x.dim())).frobenius_norm() <= tol;
}

}  // namespace

PositiveLinearMap PositiveLinearMap::identity(int dim) {
    PositiveLinearMap m;
    m.kind_ = Kind::identity;
    m.in_dim_ = m.out_dim_ = dim;
    m.self_test();
    return m;
}

PositiveLinearMap PositiveLinearMap::compression(const CMatrix& isometry) {
    PositiveLinearMap m;
    m.kind_ = Kind::compression;
    m.in_dim_ = isometry.rows();
    m.out_dim_ = isometry.cols();
    if (m.out_dim_ < 1 || m.out_dim_ > m.in_dim_)
        throw InvalidSpec("compression isometry must map into a space of dim <= input dim");
    // V* V = I on the output space.
    const CMatrix gram = isometry.adjoint() * isometry;
    if ((gram - CMatrix::identity(m.out_dim_)).frobenius_norm() > 1e-10)
        throw InvalidSpec("compression payload is not an isometry (V*V != I)");
    m.isometry_ = isometry;
    m.self_test();
    return m;
}

PositiveLinearMap PositiveLinearMap::unitary_mixture(std::vector<double> weights,
                                                     std::vector<CMatrix> unitaries) {
    PositiveLinearMap m;
    m.kind_ = Kind::unitary_mixture;
    if (weights.empty() || weights.size() != unitaries.size())
        throw InvalidSpec("unitary mixture needs matching, nonempty weights and unitaries");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InvalidSpec("mixture weight is negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InvalidSpec("mixture weights must sum to 1");
    const int n = unitaries.front().rows();
    for (const CMatrix& u : unitaries) {
        if (u.rows() != n || u.cols() != n) throw InvalidSpec("mixture unitaries must be square, same dim");
        if ((u.adjoint() * u - CMatrix::identity(n)).frobenius_norm() > 1e-10)
            throw InvalidSpec("mixture payload contains a non-unitary matrix");
    }
    m.in_dim_ = m.out_dim_ = n;
    m.weights_ = std::move(weights);
    m.unitaries_ = std::move(unitaries);
    m.self_test();
    return m;
}

PositiveLinearMap PositiveLinearMap::pinching(int dim, std::vector<std::vector<int>> blocks) {
    PositiveLinearMap m;
    m.kind_ = Kind::pinching;
    m.in_dim_ = m.out_dim_ = dim;
    std::vector<int> seen(dim, 0);
    for (const auto& blk : blocks) {
        if (blk.empty()) throw InvalidSpec("pinching block is empty");
        for (int i : blk) {
            if (i < 0 || i >= dim) throw InvalidSpec("pinching index out of range");
            seen[i] += 1;
        }
    }
    for (int c : seen)
        if (c != 1) throw InvalidSpec("pinching blocks must partition the index set");
    m.blocks_ = std::move(blocks);
    m.self_test();
    return m;
}

PositiveLinearMap PositiveLinearMap::trace_state(const HermitianMatrix& rho) {
    PositiveLinearMap m;
    m.kind_ = Kind::trace_state;
    m.in_dim_ = rho.dim();
    m.out_dim_ = 1;
    if (min_eigenvalue(rho) < -1e-12) throw InvalidSpec("trace state must be positive semidefinite");
    if (std::abs(rho.trace_real() - 1.0) > 1e-12) throw InvalidSpec("trace state must have trace 1");
    m.rho_ = rho;
    m.self_test();
    return m;
}

PositiveLinearMap PositiveLinearMap::scale(int dim, double c) {
    return identity(dim).scaled_by(c);
}

PositiveLinearMap PositiveLinearMap::scaled_by(double c) const {
    if (!(c > 0.0)) throw InvalidSpec("map scale factor must be positive");
    PositiveLinearMap m = *this;
    m.scale_ *= c;
    return m;
}

std::string PositiveLinearMap::kind_name() const {
    switch (kind_) {
        case Kind::identity: return "identity";
        case Kind::compression: return "compression";
        case Kind::unitary_mixture: return "unitary_mixture";
        case Kind::pinching: return "pinching";
        case Kind::trace_state: return "trace_state";
        case Kind::induced: return "induced";
    }
    return "?";
}

HermitianMatrix PositiveLinearMap::apply(const HermitianMatrix& x) const {
    if (x.dim() != in_dim_) throw DimensionMismatch("map expects dim " + std::to_string(in_dim_));
    HermitianMatrix out;
    switch (kind_) {
        case Kind::identity:
            out = x;
            break;
        case Kind::compression:
            out = congruence(isometry_, x);
            break;
        case Kind::unitary_mixture: {
            CMatrix acc(in_dim_, in_dim_);
            for (size_t i = 0; i < weights_.size(); ++i) {
                const CMatrix term = unitaries_[i].adjoint() * x.mat() * unitaries_[i];
                acc = acc + term.scaled(weights_[i]);
            }
            out = HermitianMatrix::symmetrized(acc);
            break;
        }
        case Kind::pinching: {
            CMatrix r(in_dim_, in_dim_);
            for (const auto& blk : blocks_)
                for (int i : blk)
                    for (int j : blk) r(i, j) = x.mat()(i, j);
            out = HermitianMatrix::symmetrized(r);
            break;
        }
        case Kind::trace_state: {
            cplx t{};
            for (int i = 0; i < in_dim_; ++i)
                for (int j = 0; j < in_dim_; ++j) t += x.mat()(i, j) * rho_.mat()(j, i);
            out = HermitianMatrix::scalar(t.real());
            break;
        }
        case Kind::induced: {
            const HermitianMatrix mid = congruence(anchor_sqrt_, x);  // A^{1/2} X A^{1/2}
            out = congruence(image_inv_sqrt_, inner_->apply(mid));
            break;
        }
    }
    return scale_ == 1.0 ? out : out.scaled(scale_);
}

void PositiveLinearMap::self_test() const {
    // Constructor-time probes: a malformed map would silently poison every
    // downstream verdict, so unital, positivity and linearity are checked on
    // random inputs before the map is handed out.
    const HermitianMatrix image_of_id = apply(HermitianMatrix::identity(in_dim_));
    if (!approx_identity(image_of_id.scaled(1.0 / scale_), kSelfTestTol * out_dim_))
        throw InvalidSpec("map self-test: image of identity is off");

    Rng rng(mix_seed(0x10557e57ull, static_cast<std::uint64_t>(in_dim_) * 64 + out_dim_));
    for (int probe = 0; probe < 50; ++probe) {
        const HermitianMatrix x = random_psd(in_dim_, rng);
        if (min_eigenvalue(apply(x)) < -kSelfTestTol)
            throw InvalidSpec("map self-test: positivity probe failed");
    }
    for (int probe = 0; probe < 5; ++probe) {
        const HermitianMatrix x = random_hermitian_gaussian(in_dim_, rng);
        const HermitianMatrix y = random_hermitian_gaussian(in_dim_, rng);
        const double co = rng.uniform(-2.0, 2.0);
        const HermitianMatrix lhs = apply(x + y.scaled(co));
        const HermitianMatrix rhs = apply(x) + apply(y).scaled(co);
        const double scale = std::max(1.0, lhs.frobenius_norm());
        if ((lhs - rhs).frobenius_norm() > kSelfTestTol * scale)
            throw InvalidSpec("map self-test: linearity probe failed");
    }
}

PositiveLinearMap induced_map(const PositiveLinearMap& phi, const HermitianMatrix& a) {
    if (a.dim() != phi.in_dim()) throw DimensionMismatch("induced map: anchor dim mismatch");
    const auto [a_sqrt, a_inv_sqrt] = sqrt_and_inv_sqrt(a);  // throws if A not PD
    (void)a_inv_sqrt;
    const HermitianMatrix phi_a = phi.apply(a);
    const auto [pa_sqrt, pa_inv_sqrt] = sqrt_and_inv_sqrt(phi_a);
    (void)pa_sqrt;

    PositiveLinearMap m;
    m.kind_ = PositiveLinearMap::Kind::induced;
    m.in_dim_ = phi.in_dim();
    m.out_dim_ = phi.out_dim();
    m.inner_ = std::make_shared<const PositiveLinearMap>(phi);
    m.anchor_sqrt_ = a_sqrt.mat();
    m.image_inv_sqrt_ = pa_inv_sqrt.mat();

    const HermitianMatrix id_image = m.apply(HermitianMatrix::identity(m.in_dim_));
    if (!approx_identity(id_image, 1e-9 * m.out_dim_))
        throw InvalidSpec("induced map is not normalized; anchor too ill-conditioned");
    m.self_test();
    return m;
}

PositiveLinearMap random_map(const std::string& kind_name, int dim, Rng& rng) {
    if (kind_name == "identity") return PositiveLinearMap::identity(dim);
    if (kind_name == "compression") {
        const int out = std::max(1, dim / 2);
        const CMatrix u = random_unitary(dim, rng);
        CMatrix v(dim, out);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < out; ++j) v(i, j) = u(i, j);
        return PositiveLinearMap::compression(v);
    }
    if (kind_name == "unitary_mixture") {
        const int k = dim == 1 ? 2 : 3;
        std::vector<double> w(k);
        double sum = 0.0;
        for (double& wi : w) {
            wi = -std::log(1.0 - rng.uniform01());
            sum += wi;
        }
        double acc = 0.0;
        for (int i = 0; i + 1 < k; ++i) {
            w[i] /= sum;
            acc += w[i];
        }
        w[k - 1] = 1.0 - acc;  // exact simplex closure
        std::vector<CMatrix> us;
        us.reserve(k);
        for (int i = 0; i < k; ++i) us.push_back(random_unitary(dim, rng));
        return PositiveLinearMap::unitary_mixture(std::move(w), std::move(us));
    }
    if (kind_name == "pinching") {
        // Random partition into up to 3 blocks.
        const int nblocks = dim == 1 ? 1 : rng.uniform_int(2, std::min(3, dim));
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < dim; ++i) blocks[i % nblocks].push_back(i);
        for (int i = dim - 1; i > 0; --i) {
            // shuffle indices across blocks for variety
            const int j = rng.uniform_int(0, i);
            for (auto& blk : blocks)
                for (int& v : blk) {
                    if (v == i) v = -1;
                    else if (v == j) v = i;
                }
            for (auto& blk : blocks)
                for (int& v : blk)
                    if (v == -1) v = j;
        }
        return PositiveLinearMap::pinching(dim, std::move(blocks));
    }
    if (kind_name == "trace_state") {
        HermitianMatrix w = random_psd(dim, rng);
        // Strictly positive trace: shift a hair if the Gram factor degenerated.
        if (w.trace_real() <= 1e-12) w = w.plus_scaled_identity(1.0);
        HermitianMatrix rho = w.scaled(1.0 / w.trace_real());
        // Snap the trace exactly to 1.
        CMatrix r = rho.mat();
        double t = rho.trace_real();
        r(0, 0) += 1.0 - t;
        return PositiveLinearMap::trace_state(HermitianMatrix::symmetrized(r));
    }
    throw InvalidSpec("unknown map kind '" + kind_name + "'");
}

}  // namespace loewner
