#include "rftwirl/schurweyl.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_label(const IrrepLabel& label) {
    require(label.n_qubits >= 1, "IrrepLabel: n_qubits must be positive");
    require(label.two_j >= 0 && label.two_j <= label.n_qubits,
            "IrrepLabel: 2j out of range");
    require((label.two_j & 1) == (label.n_qubits & 1),
            "IrrepLabel: 2j must have the parity of n_qubits");
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long b = 1;
    for (int i = 1; i <= k; ++i) {
        b = b * static_cast<unsigned long long>(n - k + i) /
            static_cast<unsigned long long>(i);
    }
    return b;
}

}  // namespace

int dim_R(const IrrepLabel& label) {
    check_label(label);
    return label.two_j + 1;
}

long dim_P(const IrrepLabel& label) {
    check_label(label);
    const int n = label.n_qubits;
    const int k = (n - label.two_j) / 2;           // N/2 - j
    const long long den = (n + label.two_j + 2) / 2;  // N/2 + j + 1
    const long long num =
        static_cast<long long>(binomial(n, k)) * (label.two_j + 1);
    require(num % den == 0, "dim_P: non-integer multiplicity");
    return static_cast<long>(num / den);
}

// ---------------------------------------------------------------------------
// Rotation

namespace {

Eigen::Matrix2cd su2_from_quaternion(double q0, double q1, double q2,
                                     double q3) {
    Eigen::Matrix2cd u;
    const Complex i(0.0, 1.0);
    u(0, 0) = q0 - i * q3;
    u(0, 1) = -q2 - i * q1;
    u(1, 0) = q2 - i * q1;
    u(1, 1) = q0 + i * q3;
    return u;
}

}  // namespace

Rotation::Rotation(Eigen::Matrix2cd u) : u_(std::move(u)) {
    const double unit_defect =
        (u_ * u_.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    const Complex det = u_(0, 0) * u_(1, 1) - u_(0, 1) * u_(1, 0);
    require(unit_defect <= 1e-12 && std::abs(det - 1.0) <= 1e-12,
            "Rotation: matrix is not special unitary");
}

Rotation Rotation::identity() {
    return Rotation(Eigen::Matrix2cd::Identity());
}

Rotation Rotation::from_quaternion(double q0, double q1, double q2,
                                   double q3) {
    const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    require(std::abs(n - 1.0) <= 1e-12, "Rotation: quaternion is not unit");
    return Rotation(su2_from_quaternion(q0, q1, q2, q3));
}

Rotation Rotation::from_axis_angle(double nx, double ny, double nz,
                                   double angle) {
    const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
    require(n > 1e-14, "Rotation: axis must be nonzero");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return Rotation(
        su2_from_quaternion(c, s * nx / n, s * ny / n, s * nz / n));
}

Rotation Rotation::from_euler_zyz(double alpha, double beta, double gamma) {
    const auto rz = [](double a) {
        return su2_from_quaternion(std::cos(a / 2), 0, 0, std::sin(a / 2));
    };
    const auto ry = [](double a) {
        return su2_from_quaternion(std::cos(a / 2), 0, std::sin(a / 2), 0);
    };
    return Rotation(rz(alpha) * ry(beta) * rz(gamma));
}

Rotation Rotation::haar_random(SplitMix64& rng) {
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : q) {
            c = rng.gaussian();
            norm2 += c * c;
        }
    } while (norm2 < 1e-24);
    const double n = std::sqrt(norm2);
    return Rotation(su2_from_quaternion(q[0] / n, q[1] / n, q[2] / n, q[3] / n));
}

std::array<double, 4> Rotation::quaternion() const {
    // No sign normalization: U and -U are distinct SU(2) elements and act
    // differently in half-integer-spin representations.
    std::array<double, 4> q{};
    q[0] = 0.5 * (u_(0, 0) + u_(1, 1)).real();
    q[3] = 0.5 * (u_(1, 1) - u_(0, 0)).imag();
    q[1] = -0.5 * (u_(0, 1) + u_(1, 0)).imag();
    q[2] = 0.5 * (u_(1, 0) - u_(0, 1)).real();
    return q;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
    require(n >= 1, "Permutation: size must be positive");
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    require(n >= 1, "Permutation: size must be positive");
    std::vector<bool> seen(n, false);
    for (int v : images) {
        require(v >= 0 && v < n && !seen[v], "Permutation: not a bijection");
        seen[v] = true;
    }
    Permutation p;
    p.images = std::move(images);
    return p;
}

Permutation Permutation::uniform_random(int n, SplitMix64& rng) {
    Permutation p = identity(n);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(i + 1));
        std::swap(p.images[i], p.images[j]);
    }
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    require(size() == other.size(), "Permutation: size mismatch");
    Permutation out;
    out.images.resize(size());
    for (int i = 0; i < size(); ++i) out.images[i] = images[other.images[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images.resize(size());
    for (int i = 0; i < size(); ++i) out.images[images[i]] = i;
    return out;
}

// ---------------------------------------------------------------------------
// Schur transform construction

namespace {

// One (j, path) family at an intermediate coupling level: an orthonormal
// set {|j, m, path>, m = j..-j} expressed over the computational basis.
struct Family {
    int two_j;
    std::vector<int> path;            // intermediate 2j after each qubit
    std::vector<ComplexVector> vecs;  // descending m
};

// Couples one more spin-1/2 (the next less-significant qubit) onto every
// family, Condon-Shortley phases. |0> of the new qubit is m2 = +1/2.
std::vector<Family> couple_step(const std::vector<Family>& level) {
    std::vector<Family> next;
    for (const Family& f : level) {
        const int dim = static_cast<int>(f.vecs[0].size());
        const double two_j = f.two_j;

        // index of m in f.vecs given 2m (descending order: m = j first)
        const auto parent = [&](int two_m) -> const ComplexVector* {
            if (two_m > f.two_j || two_m < -f.two_j) return nullptr;
            return &f.vecs[(f.two_j - two_m) / 2];
        };
        const auto with_new_qubit = [&](const ComplexVector* v, int bit) {
            ComplexVector out = ComplexVector::Zero(2 * dim);
            if (v != nullptr)
                for (int x = 0; x < dim; ++x) out(2 * x + bit) = (*v)(x);
            return out;
        };

        // j + 1/2 child
        {
            Family child;
            child.two_j = f.two_j + 1;
            child.path = f.path;
            child.path.push_back(child.two_j);
            for (int two_m = child.two_j; two_m >= -child.two_j; two_m -= 2) {
                const double m = two_m / 2.0;
                const double cu = std::sqrt((two_j / 2.0 + m + 0.5) / (two_j + 1));
                const double cd = std::sqrt((two_j / 2.0 - m + 0.5) / (two_j + 1));
                child.vecs.push_back(
                    cu * with_new_qubit(parent(two_m - 1), 0) +
                    cd * with_new_qubit(parent(two_m + 1), 1));
            }
            next.push_back(std::move(child));
        }
        // j - 1/2 child
        if (f.two_j >= 1) {
            Family child;
            child.two_j = f.two_j - 1;
            child.path = f.path;
            child.path.push_back(child.two_j);
            for (int two_m = child.two_j; two_m >= -child.two_j; two_m -= 2) {
                const double m = two_m / 2.0;
                const double cu = std::sqrt((two_j / 2.0 - m + 0.5) / (two_j + 1));
                const double cd = std::sqrt((two_j / 2.0 + m + 0.5) / (two_j + 1));
                child.vecs.push_back(
                    -cu * with_new_qubit(parent(two_m - 1), 0) +
                    cd * with_new_qubit(parent(two_m + 1), 1));
            }
            next.push_back(std::move(child));
        }
    }
    return next;
}

}  // namespace

SchurTransform build_schur_transform(int n_qubits, int max_qubits) {
    require(n_qubits >= 1, "build_schur_transform: n_qubits must be positive");
    if (n_qubits > max_qubits)
        throw std::domain_error(
            "build_schur_transform: n_qubits exceeds the configured maximum (" +
            std::to_string(max_qubits) + ")");

    // Level 1: single qubit, j = 1/2, basis already in descending m.
    std::vector<Family> level(1);
    level[0].two_j = 1;
    level[0].path = {1};
    level[0].vecs = {ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)};
    for (int k = 1; k < n_qubits; ++k) level = couple_step(level);

    // Group families by j (descending), paths in lexicographic order.
    std::stable_sort(level.begin(), level.end(),
                     [](const Family& a, const Family& b) {
                         if (a.two_j != b.two_j) return a.two_j > b.two_j;
                         return a.path < b.path;
                     });

    const int dim = 1 << n_qubits;
    ComplexMatrix unitary(dim, dim);
    std::vector<IrrepBlock> blocks;
    std::vector<std::vector<std::vector<int>>> path_labels;

    int offset = 0;
    size_t idx = 0;
    while (idx < level.size()) {
        const int two_j = level[idx].two_j;
        size_t end = idx;
        while (end < level.size() && level[end].two_j == two_j) ++end;

        IrrepBlock block;
        block.label = IrrepLabel{two_j, n_qubits};
        block.d_R = dim_R(block.label);
        block.d_P = static_cast<int>(end - idx);
        block.offset = offset;
        require(block.d_P == dim_P(block.label),
                "build_schur_transform: path count disagrees with dim_P");

        std::vector<std::vector<int>> paths;
        for (size_t f = idx; f < end; ++f) paths.push_back(level[f].path);

        for (int mi = 0; mi < block.d_R; ++mi)
            for (int pi = 0; pi < block.d_P; ++pi)
                unitary.col(offset + mi * block.d_P + pi) =
                    level[idx + pi].vecs[mi];

        offset += block.dim();
        blocks.push_back(block);
        path_labels.push_back(std::move(paths));
        idx = end;
    }
    require(offset == dim, "build_schur_transform: blocks do not fill 2^N");

    return SchurTransform(n_qubits, std::move(unitary), std::move(blocks),
                          std::move(path_labels));
}

SchurTransform::SchurTransform(
    int n_qubits, ComplexMatrix unitary, std::vector<IrrepBlock> blocks,
    std::vector<std::vector<std::vector<int>>> path_labels)
    : n_qubits_(n_qubits),
      unitary_(std::move(unitary)),
      blocks_(std::move(blocks)),
      path_labels_(std::move(path_labels)) {
    require(unitary_.rows() == unitary_.cols() &&
                unitary_.rows() == (1LL << n_qubits_),
            "SchurTransform: unitary must be 2^N x 2^N");
    const double defect =
        (unitary_.adjoint() * unitary_ -
         ComplexMatrix::Identity(unitary_.rows(), unitary_.cols()))
            .cwiseAbs()
            .maxCoeff();
    require(defect <= kDefaultTol, "SchurTransform: matrix is not unitary");
}

const IrrepBlock& SchurTransform::block_for_two_j(int two_j) const {
    for (const IrrepBlock& b : blocks_)
        if (b.label.two_j == two_j) return b;
    throw std::invalid_argument("SchurTransform: no block with 2j = " +
                                std::to_string(two_j));
}

ComplexMatrix SchurTransform::to_schur(const ComplexMatrix& m) const {
    require(m.rows() == dim() && m.cols() == dim(),
            "to_schur: dimension mismatch");
    return unitary_.adjoint() * m * unitary_;
}

DensityMatrix SchurTransform::to_schur(const DensityMatrix& rho) const {
    return DensityMatrix::trusted(to_schur(rho.matrix()));
}

ComplexMatrix SchurTransform::from_schur(const ComplexMatrix& m) const {
    require(m.rows() == dim() && m.cols() == dim(),
            "from_schur: dimension mismatch");
    return unitary_ * m * unitary_.adjoint();
}

DensityMatrix SchurTransform::from_schur(const DensityMatrix& rho) const {
    return DensityMatrix::trusted(from_schur(rho.matrix()));
}

ComplexVector SchurTransform::from_schur(const ComplexVector& v) const {
    require(v.size() == dim(), "from_schur: dimension mismatch");
    return unitary_ * v;
}

std::pair<ComplexMatrix, double> SchurTransform::block_project(
    const ComplexMatrix& rho_schur, const IrrepBlock& block) const {
    require(rho_schur.rows() == dim() && rho_schur.cols() == dim(),
            "block_project: dimension mismatch");
    ComplexMatrix sub =
        rho_schur.block(block.offset, block.offset, block.dim(), block.dim());
    const double weight = sub.trace().real();
    return {std::move(sub), weight};
}

// ---------------------------------------------------------------------------
// Operators

ComplexMatrix collective_rotation(const Rotation& rot, int n_qubits) {
    require(n_qubits >= 1, "collective_rotation: n_qubits must be positive");
    ComplexMatrix out = rot.matrix();
    for (int k = 1; k < n_qubits; ++k) out = tensor(out, rot.matrix());
    return out;
}

ComplexMatrix permutation_operator(const Permutation& p) {
    const int n = p.size();
    const int dim = 1 << n;
    // Basis state |b_0 ... b_{N-1}> (qubit 0 most significant) is sent to
    // |c_0 ... c_{N-1}> with c_{p(i)} = b_i.
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) {
        int y = 0;
        for (int i = 0; i < n; ++i) {
            const int bit = (x >> (n - 1 - i)) & 1;
            y |= bit << (n - 1 - p.images[i]);
        }
        out(y, x) = 1.0;
    }
    return out;
}

ComplexMatrix wigner_d(int two_j, const Rotation& rot) {
    require(two_j >= 0, "wigner_d: 2j must be nonnegative");
    const int d = two_j + 1;
    const double j = two_j / 2.0;
    const auto q = rot.quaternion();
    const double sin_half = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (sin_half < 1e-15) {
        // U = +-I; -I acts as (-1)^{2j}.
        const double sign = (q[0] >= 0.0 || two_j % 2 == 0) ? 1.0 : -1.0;
        return sign * ComplexMatrix::Identity(d, d);
    }
    const double theta = 2.0 * std::atan2(sin_half, q[0]);
    const double nx = q[1] / sin_half, ny = q[2] / sin_half,
                 nz = q[3] / sin_half;

    // n . J in the descending-m basis (row a has m = j - a).
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        const double m = j - a;
        h(a, a) = nz * m;
        if (a > 0) {
            // <j, m+1| J_+ |j, m>
            const double c = std::sqrt(j * (j + 1) - m * (m + 1));
            h(a - 1, a) += Complex(nx / 2.0, -ny / 2.0) * c;
            h(a, a - 1) += Complex(nx / 2.0, ny / 2.0) * c;
        }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    ComplexVector phases(d);
    for (int a = 0; a < d; ++a)
        phases(a) = std::exp(Complex(0.0, -theta * es.eigenvalues()(a)));
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
}

}  // namespace rftwirl
