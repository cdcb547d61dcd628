// Group-averaging superoperators over N qubits: the collective-rotation
// twirl, the qubit-permutation twirl, and their composition. Exact twirls
// are computed structurally in the Schur basis (never by numerical
// integration); a Monte-Carlo rotation average and a full permutation
// enumeration exist as independent oracles.
#pragma once

#include "rftwirl/schurweyl.hpp"

#include <json.hpp>

#include <memory>

namespace rftwirl {

/// Which reference the eavesdropper lacks.
enum class SrfKind { Su2, Perm, Both };

std::string to_string(SrfKind kind);
SrfKind srf_kind_from_string(const std::string& s);

enum class FactorSide { R, P };

/// Exact rotation twirl: every Schur block j is replaced by
/// (I/d_R) (x) Tr_R(block); inter-block coherences vanish.
DensityMatrix twirl_su2_exact(const DensityMatrix& rho,
                              const SchurTransform& st);

/// Exact permutation twirl: every Schur block j is replaced by
/// Tr_P(block) (x) (I/d_P).
DensityMatrix twirl_perm_exact(const DensityMatrix& rho,
                               const SchurTransform& st);

/// Composition of both twirls: block j becomes p_j I / (d_R d_P).
DensityMatrix twirl_both_exact(const DensityMatrix& rho,
                               const SchurTransform& st);

DensityMatrix twirl_exact(SrfKind kind, const DensityMatrix& rho,
                          const SchurTransform& st);

/// Monte-Carlo estimate of the rotation twirl: empirical mean of
/// R rho R^dag over rotations drawn from the invariant distribution.
/// Deterministic given the seed; sample streams are derived per index.
DensityMatrix twirl_su2_sampled(const DensityMatrix& rho, long n_samples,
                                std::uint64_t seed);

/// Literal average over all N! permutation conjugations (oracle, N <= 6).
DensityMatrix twirl_perm_enumerated(const DensityMatrix& rho);

/// Replaces the chosen tensor factor of a (d_R d_P)-dimensional block state
/// with its maximally mixed state, keeping the partial trace on the other.
ComplexMatrix depolarize_block(const ComplexMatrix& block, int d_R, int d_P,
                               FactorSide side);

/// Tagged description of a decohering map, bundling the transform it acts
/// through. BlockDepolarize applies to block-sized inputs only.
class Superop {
  public:
    enum class Kind { Su2Twirl, PermTwirl, Both, BlockDepolarize };

    static Superop twirl(SrfKind srf, std::shared_ptr<const SchurTransform> st);
    static Superop block_depolarizer(std::shared_ptr<const SchurTransform> st,
                                     IrrepBlock block, FactorSide side);

    Kind kind() const { return kind_; }
    SrfKind srf() const;
    int n_qubits() const { return transform_->n_qubits(); }
    const SchurTransform& transform() const { return *transform_; }

    DensityMatrix apply(const DensityMatrix& rho) const;

    /// {"kind":"su2"|"perm"|"both","n":N}
    nlohmann::json descriptor() const;

  private:
    Superop(Kind kind, std::shared_ptr<const SchurTransform> st)
        : kind_(kind), transform_(std::move(st)) {}

    Kind kind_;
    std::shared_ptr<const SchurTransform> transform_;
    IrrepBlock block_{};
    FactorSide side_ = FactorSide::R;
};

}  // namespace rftwirl
