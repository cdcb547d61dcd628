#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rftwirl/schurweyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace rftwirl;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Independent multiplicity oracle: count coupling paths 1 qubit -> (N, 2j)
// by dynamic programming over intermediate spins.
long path_count_dp(int n_qubits, int two_j) {
    std::map<int, long> counts{{1, 1}};
    for (int k = 2; k <= n_qubits; ++k) {
        std::map<int, long> next;
        for (const auto& [tj, c] : counts) {
            next[tj + 1] += c;
            if (tj >= 1) next[tj - 1] += c;
        }
        counts = std::move(next);
    }
    const auto it = counts.find(two_j);
    return it == counts.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("dim_R and dim_P: known values") {
    CHECK(dim_R({2, 2}) == 3);   // N=2, j=1
    CHECK(dim_R({1, 3}) == 2);   // N=3, j=1/2
    CHECK(dim_R({8, 8}) == 9);   // N=8, j=4
    CHECK(dim_P({1, 3}) == 2);   // N=3, j=1/2
    CHECK(dim_P({2, 4}) == 3);   // N=4, j=1
    CHECK(dim_P({0, 2}) == 1);   // N=2, j=0
    CHECK_THROWS_AS(dim_P({1, 2}), std::invalid_argument);  // parity
    CHECK_THROWS_AS(dim_R({5, 3}), std::invalid_argument);  // 2j > N
}

TEST_CASE("dim_P equals the coupling-path count for N <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (int two_j = n % 2; two_j <= n; two_j += 2)
            CHECK(dim_P({two_j, n}) == path_count_dp(n, two_j));
}

TEST_CASE("sum over blocks of (2j+1) d_P = 2^N for N <= 12") {
    for (int n = 1; n <= 12; ++n) {
        long total = 0;
        for (int two_j = n % 2; two_j <= n; two_j += 2)
            total += static_cast<long>(two_j + 1) * dim_P({two_j, n});
        CHECK(total == (1L << n));
    }
}

TEST_CASE("d_P >= d_R strictly below maximal j, N <= 12") {
    for (int n = 2; n <= 12; ++n)
        for (int two_j = n % 2; two_j < n; two_j += 2)
            CHECK(dim_P({two_j, n}) >= dim_R({two_j, n}));
}

TEST_CASE("schur transform: N=1 is the identity") {
    const SchurTransform st = build_schur_transform(1);
    CHECK(st.blocks().size() == 1);
    CHECK(st.blocks()[0].label.two_j == 1);
    CHECK(st.blocks()[0].d_R == 2);
    CHECK(st.blocks()[0].d_P == 1);
    CHECK(max_abs(st.unitary() - ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("schur transform: N=2 triplet and singlet columns") {
    const SchurTransform st = build_schur_transform(2);
    REQUIRE(st.blocks().size() == 2);
    CHECK(st.blocks()[0].label.two_j == 2);
    CHECK(st.blocks()[1].label.two_j == 0);

    const ComplexMatrix& u = st.unitary();
    // Descending m within j=1: |00>, (|01>+|10>)/sqrt2, |11>.
    ComplexVector m1 = ComplexVector::Zero(4), m0 = ComplexVector::Zero(4),
                  mm1 = ComplexVector::Zero(4), sing = ComplexVector::Zero(4);
    m1(0) = 1.0;
    m0(1) = m0(2) = 1.0 / std::sqrt(2.0);
    mm1(3) = 1.0;
    sing(1) = 1.0 / std::sqrt(2.0);
    sing(2) = -1.0 / std::sqrt(2.0);
    CHECK(max_abs(u.col(0) - m1) < 1e-14);
    CHECK(max_abs(u.col(1) - m0) < 1e-14);
    CHECK(max_abs(u.col(2) - mm1) < 1e-14);
    CHECK(max_abs(u.col(3) - sing) < 1e-14);
}

TEST_CASE("schur transform: N=4 block registry") {
    const SchurTransform st = build_schur_transform(4);
    REQUIRE(st.blocks().size() == 3);
    CHECK(st.blocks()[0].d_R == 5);
    CHECK(st.blocks()[0].d_P == 1);
    CHECK(st.blocks()[1].d_R == 3);
    CHECK(st.blocks()[1].d_P == 3);
    CHECK(st.blocks()[2].d_R == 1);
    CHECK(st.blocks()[2].d_P == 2);
    int total = 0;
    for (const auto& b : st.blocks()) total += b.dim();
    CHECK(total == 16);
    // Path labels enumerate the multiplicity index.
    for (size_t bi = 0; bi < st.blocks().size(); ++bi)
        CHECK(static_cast<int>(st.path_labels()[bi].size()) ==
              st.blocks()[bi].d_P);
}

TEST_CASE("schur transform: unitary for N <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const SchurTransform st = build_schur_transform(n);
        const ComplexMatrix& u = st.unitary();
        CHECK(max_abs(u.adjoint() * u -
                      ComplexMatrix::Identity(u.rows(), u.cols())) < 1e-12);
    }
}

TEST_CASE("schur transform: cap enforcement") {
    CHECK_THROWS_AS(build_schur_transform(11), std::domain_error);
    CHECK_THROWS_AS(build_schur_transform(5, 4), std::domain_error);
    CHECK_THROWS_AS(build_schur_transform(0), std::invalid_argument);
}

TEST_CASE("collective rotations block-diagonalize as D_j (x) I") {
    SplitMix64 rng(7);
    for (int n : {2, 3, 4, 5}) {
        const SchurTransform st = build_schur_transform(n);
        for (int rep = 0; rep < 10; ++rep) {
            const Rotation omega = Rotation::haar_random(rng);
            const ComplexMatrix conj =
                st.to_schur(collective_rotation(omega, n));
            double off_block = 0.0;
            for (const auto& bi : st.blocks()) {
                const ComplexMatrix expected =
                    tensor(wigner_d(bi.label.two_j, omega),
                           ComplexMatrix::Identity(bi.d_P, bi.d_P));
                CHECK(max_abs(conj.block(bi.offset, bi.offset, bi.dim(),
                                         bi.dim()) -
                              expected) < 1e-11);
                for (const auto& bj : st.blocks()) {
                    if (bi.offset == bj.offset) continue;
                    off_block = std::max(
                        off_block, max_abs(conj.block(bi.offset, bj.offset,
                                                      bi.dim(), bj.dim())));
                }
            }
            CHECK(off_block < 1e-11);
        }
    }
}

namespace {

void check_perm_block_structure(const SchurTransform& st,
                                const Permutation& p) {
    const ComplexMatrix conj = st.to_schur(permutation_operator(p));
    for (const auto& bi : st.blocks()) {
        const ComplexMatrix sub =
            conj.block(bi.offset, bi.offset, bi.dim(), bi.dim());
        // Average over the R factor, then check the I (x) pi form.
        const ComplexMatrix pi =
            partial_trace(sub, FactorShape{bi.d_R, bi.d_P}, {1}) /
            double(bi.d_R);
        CHECK(max_abs(sub - tensor(ComplexMatrix::Identity(bi.d_R, bi.d_R),
                                   pi)) < 1e-11);
        CHECK(max_abs(pi * pi.adjoint() -
                      ComplexMatrix::Identity(bi.d_P, bi.d_P)) < 1e-11);
        for (const auto& bj : st.blocks()) {
            if (bi.offset == bj.offset) continue;
            CHECK(max_abs(conj.block(bi.offset, bj.offset, bi.dim(),
                                     bj.dim())) < 1e-11);
        }
    }
}

}  // namespace

TEST_CASE("permutations block-diagonalize as I (x) pi_j") {
    for (int n : {3, 4, 5}) {  // exhaustive up to S_5
        const SchurTransform st = build_schur_transform(n);
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 0);
        do check_perm_block_structure(st, Permutation::from_images(images));
        while (std::next_permutation(images.begin(), images.end()));
    }
}

TEST_CASE("permutation_operator: group law and examples") {
    // identity
    CHECK(max_abs(permutation_operator(Permutation::identity(3)) -
                  ComplexMatrix::Identity(8, 8)) == 0.0);

    // SWAP on N=2 maps |01> to |10>
    const ComplexMatrix swap =
        permutation_operator(Permutation::from_images({1, 0}));
    ComplexVector e01 = ComplexVector::Unit(4, 1), e10 = ComplexVector::Unit(4, 2);
    CHECK(max_abs(swap * e01 - e10) == 0.0);

    // 3-cycle cubed is the identity
    const Permutation cyc = Permutation::from_images({1, 2, 0});
    const ComplexMatrix c = permutation_operator(cyc);
    CHECK(max_abs(c * c * c - ComplexMatrix::Identity(8, 8)) == 0.0);

    // faithful homomorphism on all pairs in S_4
    std::vector<Permutation> s4;
    std::vector<int> im(4);
    std::iota(im.begin(), im.end(), 0);
    do s4.push_back(Permutation::from_images(im));
    while (std::next_permutation(im.begin(), im.end()));
    for (const auto& p : s4)
        for (const auto& q : s4)
            CHECK(max_abs(permutation_operator(p.compose(q)) -
                          permutation_operator(p) * permutation_operator(q)) ==
                  0.0);
}

TEST_CASE("collective_rotation: examples") {
    CHECK(max_abs(collective_rotation(Rotation::identity(), 3) -
                  ComplexMatrix::Identity(8, 8)) == 0.0);

    // pi about z: diag(e^{-i pi/2}, e^{i pi/2})
    const Rotation rz = Rotation::from_axis_angle(0, 0, 1, M_PI);
    ComplexMatrix expect(2, 2);
    expect << Complex(0, -1), 0, 0, Complex(0, 1);
    CHECK(max_abs(collective_rotation(rz, 1) - expect) < 1e-15);

    // collective action commutes with SWAP
    SplitMix64 rng(17);
    const Rotation omega = Rotation::haar_random(rng);
    const ComplexMatrix r2 = collective_rotation(omega, 2);
    const ComplexMatrix swap =
        permutation_operator(Permutation::from_images({1, 0}));
    CHECK(max_abs(r2 * swap - swap * r2) < 1e-12);
}

TEST_CASE("rotation parameterizations agree") {
    // Euler z-y-z against axis-angle on the generators.
    const Rotation a = Rotation::from_euler_zyz(0.3, 0.0, 0.0);
    const Rotation b = Rotation::from_axis_angle(0, 0, 1, 0.3);
    CHECK(max_abs(a.matrix() - b.matrix()) < 1e-14);
    const Rotation c = Rotation::from_euler_zyz(0.0, 0.7, 0.0);
    const Rotation d = Rotation::from_axis_angle(0, 1, 0, 0.7);
    CHECK(max_abs(c.matrix() - d.matrix()) < 1e-14);

    // quaternion round trip
    SplitMix64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const Rotation r = Rotation::haar_random(rng);
        const auto q = r.quaternion();
        const Rotation back = Rotation::from_quaternion(q[0], q[1], q[2], q[3]);
        CHECK(max_abs(r.matrix() - back.matrix()) < 1e-12);
    }
}

TEST_CASE("wigner_d: spin-1/2 reproduces the defining matrix, -I sign") {
    SplitMix64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const Rotation r = Rotation::haar_random(rng);
        CHECK(max_abs(wigner_d(1, r) - r.matrix()) < 1e-12);
    }
    const Rotation minus_i = Rotation::from_axis_angle(0, 0, 1, 2.0 * M_PI);
    CHECK(max_abs(wigner_d(1, minus_i) + ComplexMatrix::Identity(2, 2)) <
          1e-12);
    CHECK(max_abs(wigner_d(2, minus_i) - ComplexMatrix::Identity(3, 3)) <
          1e-12);
}

TEST_CASE("to_schur / from_schur round trip") {
    SplitMix64 rng(29);
    const SchurTransform st = build_schur_transform(3);
    const DensityMatrix rho = random_density(8, rng);
    const DensityMatrix round = st.from_schur(st.to_schur(rho));
    CHECK(max_abs(round.matrix() - rho.matrix()) < 1e-12);

    const DensityMatrix mixed = DensityMatrix::maximally_mixed(8);
    CHECK(max_abs(st.to_schur(mixed).matrix() - mixed.matrix()) < 1e-12);

    CHECK_THROWS_AS(st.to_schur(ComplexMatrix::Identity(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("block_project: weights") {
    const SchurTransform st = build_schur_transform(2);
    const IrrepBlock& triplet = st.block_for_two_j(2);
    const IrrepBlock& singlet = st.block_for_two_j(0);

    // |psi-> lives entirely in the singlet block.
    ComplexVector psim = ComplexVector::Zero(4);
    psim(1) = 1.0 / std::sqrt(2.0);
    psim(2) = -1.0 / std::sqrt(2.0);
    const ComplexMatrix s =
        st.to_schur(DensityMatrix::pure(Ket::from_vector(psim))).matrix();
    CHECK(st.block_project(s, singlet).second == doctest::Approx(1.0));
    CHECK(st.block_project(s, triplet).second ==
          doctest::Approx(0.0).epsilon(1e-12));

    // Symmetric product state: p_1 = 1. |01>: p_1 = p_0 = 1/2.
    const ComplexMatrix sym = st.to_schur(
        DensityMatrix::pure(Ket::from_vector(ComplexVector::Unit(4, 0)))
            .matrix());
    CHECK(st.block_project(sym, triplet).second == doctest::Approx(1.0));

    const ComplexMatrix updown = st.to_schur(
        DensityMatrix::pure(Ket::from_vector(ComplexVector::Unit(4, 1)))
            .matrix());
    CHECK(st.block_project(updown, triplet).second == doctest::Approx(0.5));
    CHECK(st.block_project(updown, singlet).second == doctest::Approx(0.5));

    // Weights over blocks always sum to 1.
    SplitMix64 rng(31);
    const DensityMatrix rho = random_density(4, rng);
    const ComplexMatrix rs = st.to_schur(rho).matrix();
    double total = 0.0;
    for (const auto& b : st.blocks()) total += st.block_project(rs, b).second;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}
