#include "rftwirl/matcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

}  // namespace

int FactorShape::total() const {
    int t = 1;
    for (int d : dims) {
        require(d >= 1, "FactorShape: dimensions must be positive");
        t *= d;
    }
    return t;
}

std::vector<int> FactorShape::strides() const {
    std::vector<int> s(dims.size(), 1);
    for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f)
        s[f] = s[f + 1] * dims[f + 1];
    return s;
}

Ket Ket::from_vector(ComplexVector v, double tol) {
    require(v.size() >= 1, "Ket: empty vector");
    require(v.allFinite(), "Ket: non-finite amplitude");
    require(std::abs(v.norm() - 1.0) <= tol, "Ket: vector is not unit norm");
    return Ket(std::move(v));
}

Ket Ket::normalized(ComplexVector v) {
    require(v.size() >= 1, "Ket: empty vector");
    require(v.allFinite(), "Ket: non-finite amplitude");
    const double n = v.norm();
    require(n > 1e-14, "Ket: cannot normalize a near-zero vector");
    v /= n;
    return Ket(std::move(v));
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
    require(m.rows() == m.cols(), "DensityMatrix: matrix must be square");
    require(all_finite(m), "DensityMatrix: non-finite entry");
    require((m - m.adjoint()).cwiseAbs().maxCoeff() <= tol,
            "DensityMatrix: not Hermitian");
    require(std::abs(m.trace().real() - 1.0) <= tol &&
                std::abs(m.trace().imag()) <= tol,
            "DensityMatrix: trace is not 1");
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h,
                                                    Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -tol,
            "DensityMatrix: negative eigenvalue beyond tolerance");
    return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    require(m.rows() == m.cols(), "DensityMatrix: matrix must be square");
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Ket& k) {
    return DensityMatrix(k.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    require(dim >= 1, "DensityMatrix: dimension must be positive");
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) /
                         static_cast<double>(dim));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const FactorShape& shape,
                            const std::vector<int>& keep) {
    require(m.rows() == m.cols(), "partial_trace: matrix must be square");
    const int n_factors = static_cast<int>(shape.dims.size());
    require(shape.total() == m.rows(),
            "partial_trace: shape does not match matrix dimension");

    std::vector<bool> kept(n_factors, false);
    for (int k : keep) {
        require(k >= 0 && k < n_factors, "partial_trace: keep index out of range");
        require(!kept[k], "partial_trace: duplicate keep index");
        kept[k] = true;
    }
    std::vector<int> traced;
    for (int f = 0; f < n_factors; ++f)
        if (!kept[f]) traced.push_back(f);

    const std::vector<int> strides = shape.strides();
    int out_dim = 1;
    for (int k : keep) out_dim *= shape.dims[k];
    int traced_dim = 1;
    for (int t : traced) traced_dim *= shape.dims[t];

    // Row-major enumeration of the kept (in keep order) and traced factors.
    auto expand = [&](int composite, const std::vector<int>& factors) {
        // Maps a composite index over `factors` to a full-space offset.
        int offset = 0;
        for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
            const int d = shape.dims[factors[f]];
            offset += (composite % d) * strides[factors[f]];
            composite /= d;
        }
        return offset;
    };

    ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
    for (int r = 0; r < out_dim; ++r) {
        const int row_base = expand(r, keep);
        for (int c = 0; c < out_dim; ++c) {
            const int col_base = expand(c, keep);
            Complex acc = 0.0;
            for (int t = 0; t < traced_dim; ++t) {
                const int off = expand(t, traced);
                acc += m(row_base + off, col_base + off);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const FactorShape& shape,
                            const std::vector<int>& keep) {
    return DensityMatrix::trusted(partial_trace(rho.matrix(), shape, keep));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    require(a.dim() == b.dim(), "trace_distance: dimension mismatch");
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(a.matrix() - b.matrix()))
        sum += std::abs(lambda);
    return 0.5 * sum;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix())) {
        if (lambda < 0.0) {
            require(lambda >= -kDefaultTol,
                    "von_neumann_entropy: eigenvalue below -1e-10");
            continue;  // clamp numerical noise to 0, and 0 log 0 = 0
        }
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

double fidelity_pure(const Ket& psi, const DensityMatrix& rho) {
    require(psi.dim() == rho.dim(), "fidelity_pure: dimension mismatch");
    const Complex v =
        (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0);
    return v.real();
}

GramReport gram_orthonormality(const std::vector<Ket>& states) {
    GramReport rep;
    for (size_t i = 0; i < states.size(); ++i) {
        require(states[i].dim() == states[0].dim(),
                "gram_orthonormality: dimension mismatch");
        const double norm_defect =
            std::abs(states[i].amplitudes().squaredNorm() - 1.0);
        rep.max_norm_defect = std::max(rep.max_norm_defect, norm_defect);
        for (size_t j = i + 1; j < states.size(); ++j) {
            const Complex ov =
                (states[i].amplitudes().adjoint() * states[j].amplitudes())(0);
            rep.max_offdiag = std::max(rep.max_offdiag, std::abs(ov));
        }
    }
    return rep;
}

}  // namespace rftwirl
