#include "rftwirl/twirl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

ComplexMatrix identity_scaled(int d) {
    return ComplexMatrix::Identity(d, d) / static_cast<double>(d);
}

enum class BlockMap { DepolarizeR, DepolarizeP, DepolarizeBoth };

DensityMatrix twirl_blockwise(const DensityMatrix& rho,
                              const SchurTransform& st, BlockMap map) {
    require(rho.dim() == st.dim(), "twirl: dimension mismatch");
    const ComplexMatrix s = st.to_schur(rho.matrix());
    ComplexMatrix out = ComplexMatrix::Zero(s.rows(), s.cols());
    for (const IrrepBlock& b : st.blocks()) {
        const ComplexMatrix sub = s.block(b.offset, b.offset, b.dim(), b.dim());
        ComplexMatrix mapped;
        switch (map) {
            case BlockMap::DepolarizeR:
                mapped = depolarize_block(sub, b.d_R, b.d_P, FactorSide::R);
                break;
            case BlockMap::DepolarizeP:
                mapped = depolarize_block(sub, b.d_R, b.d_P, FactorSide::P);
                break;
            case BlockMap::DepolarizeBoth:
                mapped = sub.trace() * identity_scaled(b.dim());
                break;
        }
        out.block(b.offset, b.offset, b.dim(), b.dim()) = mapped;
    }
    return DensityMatrix::trusted(st.from_schur(out));
}

}  // namespace

std::string to_string(SrfKind kind) {
    switch (kind) {
        case SrfKind::Su2: return "su2";
        case SrfKind::Perm: return "perm";
        case SrfKind::Both: return "both";
    }
    throw std::logic_error("unreachable");
}

SrfKind srf_kind_from_string(const std::string& s) {
    if (s == "su2") return SrfKind::Su2;
    if (s == "perm") return SrfKind::Perm;
    if (s == "both") return SrfKind::Both;
    throw std::invalid_argument("unknown SRF kind: " + s);
}

DensityMatrix twirl_su2_exact(const DensityMatrix& rho,
                              const SchurTransform& st) {
    return twirl_blockwise(rho, st, BlockMap::DepolarizeR);
}

DensityMatrix twirl_perm_exact(const DensityMatrix& rho,
                               const SchurTransform& st) {
    return twirl_blockwise(rho, st, BlockMap::DepolarizeP);
}

DensityMatrix twirl_both_exact(const DensityMatrix& rho,
                               const SchurTransform& st) {
    return twirl_blockwise(rho, st, BlockMap::DepolarizeBoth);
}

DensityMatrix twirl_exact(SrfKind kind, const DensityMatrix& rho,
                          const SchurTransform& st) {
    switch (kind) {
        case SrfKind::Su2: return twirl_su2_exact(rho, st);
        case SrfKind::Perm: return twirl_perm_exact(rho, st);
        case SrfKind::Both: return twirl_both_exact(rho, st);
    }
    throw std::logic_error("unreachable");
}

DensityMatrix twirl_su2_sampled(const DensityMatrix& rho, long n_samples,
                                std::uint64_t seed) {
    require(n_samples >= 1, "twirl_su2_sampled: n_samples must be >= 1");
    const int dim = rho.dim();
    require((dim & (dim - 1)) == 0, "twirl_su2_sampled: dim must be 2^N");
    int n_qubits = 0;
    while ((1 << n_qubits) < dim) ++n_qubits;

    ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
    for (long i = 0; i < n_samples; ++i) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(i)));
        const Rotation omega = Rotation::haar_random(rng);
        const ComplexMatrix r = collective_rotation(omega, n_qubits);
        acc += r * rho.matrix() * r.adjoint();
    }
    acc /= static_cast<double>(n_samples);
    // Enforce exact Hermiticity of the empirical mean.
    acc = (acc + acc.adjoint()).eval() / 2.0;
    return DensityMatrix::trusted(std::move(acc));
}

DensityMatrix twirl_perm_enumerated(const DensityMatrix& rho) {
    const int dim = rho.dim();
    require((dim & (dim - 1)) == 0, "twirl_perm_enumerated: dim must be 2^N");
    int n = 0;
    while ((1 << n) < dim) ++n;
    if (n > 6)
        throw std::domain_error(
            "twirl_perm_enumerated: N! enumeration capped at N = 6");

    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
    long count = 0;
    do {
        const ComplexMatrix p =
            permutation_operator(Permutation::from_images(images));
        acc += p * rho.matrix() * p.adjoint();
        ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    acc /= static_cast<double>(count);
    return DensityMatrix::trusted(std::move(acc));
}

ComplexMatrix depolarize_block(const ComplexMatrix& block, int d_R, int d_P,
                               FactorSide side) {
    require(block.rows() == block.cols() &&
                block.rows() == static_cast<Eigen::Index>(d_R) * d_P,
            "depolarize_block: block shape mismatch");
    const FactorShape shape{d_R, d_P};
    if (side == FactorSide::R) {
        const ComplexMatrix kept = partial_trace(block, shape, {1});
        return tensor(identity_scaled(d_R), kept);
    }
    const ComplexMatrix kept = partial_trace(block, shape, {0});
    return tensor(kept, identity_scaled(d_P));
}

Superop Superop::twirl(SrfKind srf, std::shared_ptr<const SchurTransform> st) {
    require(st != nullptr, "Superop: null transform");
    Kind k = Kind::Both;
    if (srf == SrfKind::Su2) k = Kind::Su2Twirl;
    if (srf == SrfKind::Perm) k = Kind::PermTwirl;
    return Superop(k, std::move(st));
}

Superop Superop::block_depolarizer(std::shared_ptr<const SchurTransform> st,
                                   IrrepBlock block, FactorSide side) {
    require(st != nullptr, "Superop: null transform");
    Superop s(Kind::BlockDepolarize, std::move(st));
    s.block_ = block;
    s.side_ = side;
    return s;
}

SrfKind Superop::srf() const {
    switch (kind_) {
        case Kind::Su2Twirl: return SrfKind::Su2;
        case Kind::PermTwirl: return SrfKind::Perm;
        case Kind::Both: return SrfKind::Both;
        case Kind::BlockDepolarize:
            throw std::logic_error("Superop: block depolarizer has no SRF kind");
    }
    throw std::logic_error("unreachable");
}

DensityMatrix Superop::apply(const DensityMatrix& rho) const {
    switch (kind_) {
        case Kind::Su2Twirl: return twirl_su2_exact(rho, *transform_);
        case Kind::PermTwirl: return twirl_perm_exact(rho, *transform_);
        case Kind::Both: return twirl_both_exact(rho, *transform_);
        case Kind::BlockDepolarize:
            return DensityMatrix::trusted(
                depolarize_block(rho.matrix(), block_.d_R, block_.d_P, side_));
    }
    throw std::logic_error("unreachable");
}

nlohmann::json Superop::descriptor() const {
    return {{"kind", to_string(srf())}, {"n", n_qubits()}};
}

}  // namespace rftwirl
