// Schur basis of N-qubit space: the change of basis that simultaneously
// block-diagonalizes collective single-qubit rotations and qubit
// permutations. Each total-spin sector j contributes one block of shape
// (d_R x d_P) with d_R = 2j+1 carrying the rotation action and d_P (the
// multiplicity) carrying the permutation action.
//
// Fixed conventions, chosen once so that every column is reproducible:
//   * qubit 0 is the most significant bit of the computational index;
//   * |0> is spin-up (m = +1/2), |1> is spin-down;
//   * qubits are coupled left to right, ((q0 q1) q2) ..., with
//     Condon-Shortley phases at each spin-1/2 coupling step;
//   * within a block, columns are ordered m = j, j-1, ..., -j (outer) by
//     multiplicity path (inner); column = offset + m_index * d_P + p_index;
//   * multiplicity states are labelled by the sequence of intermediate
//     total spins (stored as 2j to keep half-integers exact), listed in
//     lexicographic order.
#pragma once

#include "rftwirl/matcore.hpp"
#include "rftwirl/rng.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace rftwirl {

inline constexpr int kDefaultMaxQubits = 10;

/// One total-spin sector. two_j stores 2j so half-integer spins are exact.
struct IrrepLabel {
    int two_j = 0;
    int n_qubits = 0;
};

/// d_R = 2j + 1.
int dim_R(const IrrepLabel& label);

/// Multiplicity of spin j in N qubits:
/// binom(N, N/2 - j) * (2j+1) / (N/2 + j + 1), evaluated exactly in
/// integer arithmetic. Equals the number of coupling paths reaching j.
long dim_P(const IrrepLabel& label);

struct IrrepBlock {
    IrrepLabel label;
    int d_R = 0;
    int d_P = 0;
    int offset = 0;  // first column of the block in Schur ordering

    int dim() const { return d_R * d_P; }
};

/// An SU(2) element; canonical form is the 2x2 special-unitary matrix.
class Rotation {
  public:
    static Rotation identity();
    /// exp(-i * angle * (n . sigma) / 2) for unit axis n.
    static Rotation from_axis_angle(double nx, double ny, double nz,
                                    double angle);
    /// R_z(alpha) R_y(beta) R_z(gamma).
    static Rotation from_euler_zyz(double alpha, double beta, double gamma);
    /// q0 I - i (q1 sigma_x + q2 sigma_y + q3 sigma_z), |q| = 1.
    static Rotation from_quaternion(double q0, double q1, double q2,
                                    double q3);
    /// Drawn from the rotation-invariant distribution on SU(2).
    static Rotation haar_random(SplitMix64& rng);

    const Eigen::Matrix2cd& matrix() const { return u_; }
    /// (q0, q1, q2, q3) such that U = q0 I - i (q1 sx + q2 sy + q3 sz).
    std::array<double, 4> quaternion() const;

  private:
    explicit Rotation(Eigen::Matrix2cd u);
    Eigen::Matrix2cd u_;
};

/// Permutation of qubit positions; images[i] is where position i is sent.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    static Permutation from_images(std::vector<int> images);  // validates
    static Permutation uniform_random(int n, SplitMix64& rng);

    int size() const { return static_cast<int>(images.size()); }
    /// (this o other): apply `other` first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
};

class SchurTransform {
  public:
    SchurTransform(int n_qubits, ComplexMatrix unitary,
                   std::vector<IrrepBlock> blocks,
                   std::vector<std::vector<std::vector<int>>> path_labels);

    int n_qubits() const { return n_qubits_; }
    int dim() const { return static_cast<int>(unitary_.rows()); }
    /// Columns are the Schur basis vectors, blocks in descending j.
    const ComplexMatrix& unitary() const { return unitary_; }
    const std::vector<IrrepBlock>& blocks() const { return blocks_; }
    const IrrepBlock& block_for_two_j(int two_j) const;
    /// Per block, per multiplicity index: the intermediate 2j sequence.
    const std::vector<std::vector<std::vector<int>>>& path_labels() const {
        return path_labels_;
    }

    /// Conjugation into the Schur basis, U^dag M U.
    ComplexMatrix to_schur(const ComplexMatrix& m) const;
    DensityMatrix to_schur(const DensityMatrix& rho) const;
    /// Inverse basis change, U M U^dag.
    ComplexMatrix from_schur(const ComplexMatrix& m) const;
    DensityMatrix from_schur(const DensityMatrix& rho) const;
    ComplexVector from_schur(const ComplexVector& v) const;

    /// Diagonal sub-block of a Schur-basis matrix and its trace weight p_j.
    std::pair<ComplexMatrix, double> block_project(
        const ComplexMatrix& rho_schur, const IrrepBlock& block) const;

  private:
    int n_qubits_;
    ComplexMatrix unitary_;
    std::vector<IrrepBlock> blocks_;
    std::vector<std::vector<std::vector<int>>> path_labels_;
};

/// Builds the Schur transform by iterated spin-1/2 coupling.
/// Throws std::domain_error when n_qubits exceeds max_qubits.
SchurTransform build_schur_transform(int n_qubits,
                                     int max_qubits = kDefaultMaxQubits);

/// N-fold tensor power of the 2x2 rotation.
ComplexMatrix collective_rotation(const Rotation& rot, int n_qubits);

/// 0/1 unitary rearranging tensor factors; a faithful homomorphism of the
/// symmetric group under compose().
ComplexMatrix permutation_operator(const Permutation& p);

/// Spin-j irrep matrix of the rotation in the descending-m basis. Within a
/// Schur block, the collective rotation acts as wigner_d(two_j, rot) on the
/// R factor and trivially on the P factor.
ComplexMatrix wigner_d(int two_j, const Rotation& rot);

}  // namespace rftwirl
