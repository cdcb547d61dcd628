#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rftwirl/twirl.hpp"

#include <memory>

using namespace rftwirl;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix projector_sum(const SchurTransform& st, const IrrepBlock& b) {
    ComplexMatrix acc = ComplexMatrix::Zero(st.dim(), st.dim());
    for (int c = b.offset; c < b.offset + b.dim(); ++c)
        acc += st.unitary().col(c) * st.unitary().col(c).adjoint();
    return acc;
}

DensityMatrix block_supported_pure(const SchurTransform& st,
                                   const IrrepBlock& b, SplitMix64& rng) {
    const Ket block_state = random_ket(b.dim(), rng);
    ComplexVector full = ComplexVector::Zero(st.dim());
    full.segment(b.offset, b.dim()) = block_state.amplitudes();
    return DensityMatrix::pure(Ket::from_vector(st.from_schur(full)));
}

}  // namespace

TEST_CASE("single-qubit rotation twirl sends everything to I/2") {
    const SchurTransform st = build_schur_transform(1);
    SplitMix64 rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = random_density(2, rng);
        const DensityMatrix out = twirl_su2_exact(rho, st);
        CHECK(max_abs(out.matrix() - ComplexMatrix::Identity(2, 2) / 2.0) <
              1e-12);
    }
}

TEST_CASE("two-qubit rotation twirl: |00><00| becomes the triplet mixture") {
    const SchurTransform st = build_schur_transform(2);
    const DensityMatrix up2 =
        DensityMatrix::pure(Ket::from_vector(ComplexVector::Unit(4, 0)));
    const DensityMatrix out = twirl_su2_exact(up2, st);
    const ComplexMatrix pi1 = projector_sum(st, st.block_for_two_j(2));
    CHECK(max_abs(out.matrix() - pi1 / 3.0) < 1e-12);
}

TEST_CASE("two-qubit rotation twirl always lands on p1 Pi1/3 + p0 Pi0") {
    const SchurTransform st = build_schur_transform(2);
    const ComplexMatrix pi1 = projector_sum(st, st.block_for_two_j(2));
    const ComplexMatrix pi0 = projector_sum(st, st.block_for_two_j(0));
    SplitMix64 rng(103);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix rho = random_density(4, rng);
        const ComplexMatrix rs = st.to_schur(rho).matrix();
        const double p1 = st.block_project(rs, st.block_for_two_j(2)).second;
        const double p0 = st.block_project(rs, st.block_for_two_j(0)).second;
        const DensityMatrix out = twirl_su2_exact(rho, st);
        CHECK(max_abs(out.matrix() - (p1 * pi1 / 3.0 + p0 * pi0)) < 1e-12);
    }
}

TEST_CASE("three-qubit rotation twirl depolarizes R on the j=1/2 block") {
    const SchurTransform st = build_schur_transform(3);
    const IrrepBlock& half = st.block_for_two_j(1);
    SplitMix64 rng(105);
    for (int rep = 0; rep < 10; ++rep) {
        const Ket block_state = random_ket(half.dim(), rng);
        ComplexVector full = ComplexVector::Zero(8);
        full.segment(half.offset, half.dim()) = block_state.amplitudes();
        const DensityMatrix rho =
            DensityMatrix::pure(Ket::from_vector(st.from_schur(full)));

        const DensityMatrix out = twirl_su2_exact(rho, st);
        const ComplexMatrix out_block =
            st.block_project(st.to_schur(out).matrix(), half).first;
        const ComplexMatrix rho_p = partial_trace(
            block_state.projector(), FactorShape{half.d_R, half.d_P}, {1});
        CHECK(max_abs(out_block -
                      tensor(ComplexMatrix::Identity(2, 2) / 2.0, rho_p)) <
              1e-12);
    }
}

TEST_CASE("permutation twirl matches the N! enumeration") {
    SplitMix64 rng(107);
    for (int n : {2, 3, 4, 5}) {
        const SchurTransform st = build_schur_transform(n);
        for (int rep = 0; rep < 5; ++rep) {
            const DensityMatrix rho = random_density(1 << n, rng);
            const DensityMatrix exact = twirl_perm_exact(rho, st);
            const DensityMatrix brute = twirl_perm_enumerated(rho);
            CHECK(max_abs(exact.matrix() - brute.matrix()) < 1e-10);
        }
    }
}

TEST_CASE("permutation twirl: explicit two-qubit average") {
    const SchurTransform st = build_schur_transform(2);
    const DensityMatrix updown =
        DensityMatrix::pure(Ket::from_vector(ComplexVector::Unit(4, 1)));
    const DensityMatrix out = twirl_perm_exact(updown, st);
    const ComplexMatrix p01 =
        ComplexVector::Unit(4, 1) * ComplexVector::Unit(4, 1).adjoint();
    const ComplexMatrix swap =
        permutation_operator(Permutation::from_images({1, 0}));
    const ComplexMatrix expect = (p01 + swap * p01 * swap.adjoint()) / 2.0;
    CHECK(max_abs(out.matrix() - expect) < 1e-13);
}

TEST_CASE("permutation twirl: symmetric states are fixed points") {
    const SchurTransform st = build_schur_transform(4);
    SplitMix64 rng(109);
    const DensityMatrix rho =
        block_supported_pure(st, st.block_for_two_j(4), rng);  // d_P = 1
    CHECK(max_abs(twirl_perm_exact(rho, st).matrix() - rho.matrix()) < 1e-12);
}

TEST_CASE("composed twirl: commutes and hits the block-uniform form") {
    const SchurTransform st = build_schur_transform(3);
    SplitMix64 rng(111);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = random_density(8, rng);
        const DensityMatrix both = twirl_both_exact(rho, st);
        const DensityMatrix ep = twirl_su2_exact(twirl_perm_exact(rho, st), st);
        const DensityMatrix pe = twirl_perm_exact(twirl_su2_exact(rho, st), st);
        CHECK(max_abs(both.matrix() - ep.matrix()) < 1e-12);
        CHECK(max_abs(both.matrix() - pe.matrix()) < 1e-12);

        const ComplexMatrix bs = st.to_schur(both).matrix();
        for (const auto& b : st.blocks()) {
            const auto [sub, weight] = st.block_project(bs, b);
            CHECK(max_abs(sub - weight *
                                    ComplexMatrix::Identity(b.dim(), b.dim()) /
                                    double(b.dim())) < 1e-12);
        }
    }
}

TEST_CASE("block-supported input: composed twirl gives the mixed block state") {
    const SchurTransform st = build_schur_transform(4);
    SplitMix64 rng(113);
    const IrrepBlock& b = st.block_for_two_j(2);
    const DensityMatrix rho = block_supported_pure(st, b, rng);
    const DensityMatrix out = twirl_both_exact(rho, st);
    CHECK(max_abs(out.matrix() - projector_sum(st, b) / double(b.dim())) <
          1e-12);
}

TEST_CASE("exact twirls are idempotent, covariant, and state-preserving") {
    SplitMix64 rng(115);
    for (int n : {2, 3, 4}) {
        const SchurTransform st = build_schur_transform(n);
        const DensityMatrix rho = random_density(1 << n, rng);

        for (SrfKind kind : {SrfKind::Su2, SrfKind::Perm, SrfKind::Both}) {
            const DensityMatrix once = twirl_exact(kind, rho, st);
            const DensityMatrix twice = twirl_exact(kind, once, st);
            CHECK(max_abs(once.matrix() - twice.matrix()) < 1e-12);

            CHECK(std::abs(once.matrix().trace().real() - 1.0) < 1e-12);
            CHECK(max_abs(once.matrix() - once.matrix().adjoint()) < 1e-12);
            CHECK(hermitian_eigenvalues(once.matrix()).front() > -1e-12);
        }

        const Rotation omega = Rotation::haar_random(rng);
        const ComplexMatrix r = collective_rotation(omega, n);
        const DensityMatrix rotated =
            DensityMatrix::trusted(r * rho.matrix() * r.adjoint());
        CHECK(max_abs(twirl_su2_exact(rotated, st).matrix() -
                      twirl_su2_exact(rho, st).matrix()) < 1e-10);

        const Permutation p = Permutation::uniform_random(n, rng);
        const ComplexMatrix pm = permutation_operator(p);
        const DensityMatrix permuted =
            DensityMatrix::trusted(pm * rho.matrix() * pm.adjoint());
        CHECK(max_abs(twirl_perm_exact(permuted, st).matrix() -
                      twirl_perm_exact(rho, st).matrix()) < 1e-10);
    }
}

TEST_CASE("sampled rotation twirl: trace, Hermiticity, convergence trend") {
    SplitMix64 rng(117);
    const SchurTransform st = build_schur_transform(2);
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix exact = twirl_su2_exact(rho, st);

    const DensityMatrix coarse = twirl_su2_sampled(rho, 200, 42);
    CHECK(std::abs(coarse.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(max_abs(coarse.matrix() - coarse.matrix().adjoint()) < 1e-12);

    const DensityMatrix fine = twirl_su2_sampled(rho, 4000, 42);
    const double err_coarse = trace_distance(coarse, exact);
    const double err_fine = trace_distance(fine, exact);
    CHECK(err_fine < 8e-2);
    CHECK(err_fine < err_coarse);

    const DensityMatrix again = twirl_su2_sampled(rho, 200, 42);
    CHECK(max_abs(coarse.matrix() - again.matrix()) == 0.0);
}

TEST_CASE("enumerated permutation twirl: invariance, idempotence, cap") {
    SplitMix64 rng(119);
    const DensityMatrix rho = random_density(8, rng);
    const DensityMatrix once = twirl_perm_enumerated(rho);

    const Permutation p = Permutation::from_images({2, 0, 1});
    const ComplexMatrix pm = permutation_operator(p);
    const DensityMatrix pre =
        DensityMatrix::trusted(pm * rho.matrix() * pm.adjoint());
    CHECK(max_abs(twirl_perm_enumerated(pre).matrix() - once.matrix()) <
          1e-12);
    CHECK(max_abs(twirl_perm_enumerated(once).matrix() - once.matrix()) <
          1e-10);

    CHECK_THROWS_AS(twirl_perm_enumerated(DensityMatrix::maximally_mixed(128)),
                    std::domain_error);
}

TEST_CASE("depolarize_block") {
    SplitMix64 rng(121);
    const DensityMatrix rho_r = random_density(2, rng);
    const DensityMatrix sig_p = random_density(3, rng);
    const ComplexMatrix prod = tensor(rho_r.matrix(), sig_p.matrix());

    const ComplexMatrix dep_r = depolarize_block(prod, 2, 3, FactorSide::R);
    CHECK(max_abs(dep_r - tensor(ComplexMatrix::Identity(2, 2) / 2.0,
                                 sig_p.matrix())) < 1e-13);

    const ComplexMatrix dep_p = depolarize_block(prod, 2, 3, FactorSide::P);
    CHECK(max_abs(dep_p - tensor(rho_r.matrix(),
                                 ComplexMatrix::Identity(3, 3) / 3.0)) <
          1e-13);

    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const ComplexMatrix dep_bell =
        depolarize_block(bell * bell.adjoint(), 2, 2, FactorSide::R);
    CHECK(max_abs(dep_bell - ComplexMatrix::Identity(4, 4) / 4.0) < 1e-13);

    const ComplexMatrix solo = rho_r.matrix();
    CHECK(max_abs(depolarize_block(solo, 2, 1, FactorSide::P) - solo) < 1e-13);

    CHECK_THROWS_AS(depolarize_block(prod, 3, 3, FactorSide::R),
                    std::invalid_argument);
}

TEST_CASE("Superop wrapper dispatch and descriptor") {
    auto st = std::make_shared<const SchurTransform>(build_schur_transform(2));
    SplitMix64 rng(123);
    const DensityMatrix rho = random_density(4, rng);

    const Superop e2 = Superop::twirl(SrfKind::Su2, st);
    CHECK(max_abs(e2.apply(rho).matrix() - twirl_su2_exact(rho, *st).matrix()) ==
          0.0);
    CHECK(e2.descriptor()["kind"] == "su2");
    CHECK(e2.descriptor()["n"] == 2);

    const Superop p2 = Superop::twirl(SrfKind::Perm, st);
    CHECK(max_abs(p2.apply(rho).matrix() -
                  twirl_perm_exact(rho, *st).matrix()) == 0.0);

    // Block depolarizer acts on block-sized states.
    const Superop dep = Superop::block_depolarizer(
        st, st->block_for_two_j(2), FactorSide::R);
    const DensityMatrix block_rho =
        DensityMatrix::pure(Ket::from_vector(ComplexVector::Unit(3, 1)));
    CHECK(max_abs(dep.apply(block_rho).matrix() -
                  ComplexMatrix::Identity(3, 3) / 3.0) < 1e-14);
    CHECK_THROWS_AS(dep.srf(), std::logic_error);

    CHECK(srf_kind_from_string("both") == SrfKind::Both);
    CHECK_THROWS_AS(srf_kind_from_string("u1"), std::invalid_argument);
}
