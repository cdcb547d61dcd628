// Dense complex linear algebra for finite-dimensional quantum states:
// kets, density matrices, tensor products, partial traces, distances,
// entropies. Everything is immutable after construction and all
// operations are pure functions.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rftwirl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

/// Ordered tensor-factor dimensions. The leftmost factor is the most
/// significant one in index arithmetic: a composite index decomposes as
/// x = x_0 * (d_1*...*d_{K-1}) + x_1 * (d_2*...*d_{K-1}) + ... + x_{K-1}.
struct FactorShape {
    std::vector<int> dims;

    FactorShape() = default;
    FactorShape(std::initializer_list<int> d) : dims(d) {}
    explicit FactorShape(std::vector<int> d) : dims(std::move(d)) {}

    int total() const;
    /// Strides per factor under the msb-left convention.
    std::vector<int> strides() const;
};

/// Unit-norm pure state.
class Ket {
  public:
    /// Validates ||v|| = 1 within tol.
    static Ket from_vector(ComplexVector v, double tol = kDefaultTol);
    /// Rescales v to unit norm (throws on a near-zero vector).
    static Ket normalized(ComplexVector v);

    int dim() const { return static_cast<int>(amps_.size()); }
    const ComplexVector& amplitudes() const { return amps_; }
    ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

  private:
    explicit Ket(ComplexVector v) : amps_(std::move(v)) {}
    ComplexVector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix.
///
/// `from_matrix` runs the full O(n^3) validation (Hermiticity, trace,
/// eigenvalues >= -tol, finiteness); `trusted` skips the spectral check and
/// is meant for outputs that are positive by construction (twirls, partial
/// traces of valid states).
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(const ComplexMatrix& m,
                                     double tol = kDefaultTol);
    static DensityMatrix trusted(ComplexMatrix m);
    static DensityMatrix pure(const Ket& k);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& matrix() const { return mat_; }

  private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// Kronecker product with the left operand as the most significant factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// Partial trace over the factors NOT listed in `keep`; the result is
/// ordered as in `keep`. Throws std::invalid_argument on an inconsistent
/// shape or bad keep list.
ComplexMatrix partial_trace(const ComplexMatrix& m, const FactorShape& shape,
                            const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const FactorShape& shape,
                            const std::vector<int>& keep);

/// (1/2) * sum of |eigenvalues| of the Hermitian difference a - b; in [0,1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// -sum lambda log2 lambda, with eigenvalues in [-1e-10, 0) clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// <psi| rho |psi>.
double fidelity_pure(const Ket& psi, const DensityMatrix& rho);

struct GramReport {
    double max_offdiag = 0.0;      // max_{i != j} |<i|j>|
    double max_norm_defect = 0.0;  // max_i | <i|i> - 1 |
    double worst() const { return std::max(max_offdiag, max_norm_defect); }
};
GramReport gram_orthonormality(const std::vector<Ket>& states);

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
/// first to shed roundoff asymmetry.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace rftwirl
