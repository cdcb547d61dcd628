#include "rftwirl/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

nlohmann::json CertReport::to_json() const {
    return {{"scheme_id", scheme_id},
            {"kind", kind},
            {"scheme_size", scheme_size},
            {"orthogonality_defect", orthogonality_defect},
            {"privacy_defect", privacy_defect},
            {"rho0_residual", rho0_residual},
            {"holevo_bits", holevo_bits},
            {"decode_defect", decode_defect},
            {"bound_used", bound_used},
            {"passed", passed},
            {"tolerances", {{"tol", tol}, {"tol_holevo", tol_holevo}}}};
}

double holevo(const std::vector<std::pair<double, DensityMatrix>>& ensemble) {
    require(!ensemble.empty(), "holevo: empty ensemble");
    double prob_sum = 0.0;
    ComplexMatrix mean = ComplexMatrix::Zero(ensemble.front().second.dim(),
                                             ensemble.front().second.dim());
    double mixed_entropy = 0.0;
    for (const auto& [p, rho] : ensemble) {
        require(p >= 0.0, "holevo: negative probability");
        require(rho.dim() == mean.rows(), "holevo: dimension mismatch");
        prob_sum += p;
        mean += p * rho.matrix();
        mixed_entropy += p * von_neumann_entropy(rho);
    }
    require(std::abs(prob_sum - 1.0) <= 1e-9,
            "holevo: probabilities must sum to 1");
    const double chi =
        von_neumann_entropy(DensityMatrix::trusted(std::move(mean))) -
        mixed_entropy;
    return std::max(chi, 0.0);
}

double helstrom_guess(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 + 0.5 * trace_distance(a, b);
}

CertReport certify_classical(const ClassicalScheme& scheme,
                             const SchurTransform& st,
                             const CertOptions& opts) {
    require(!scheme.states.empty(), "certify_classical: empty scheme");
    require(st.n_qubits() == scheme.n_qubits,
            "certify_classical: transform mismatch");

    CertReport rep;
    rep.scheme_id = scheme_id(scheme);
    rep.kind = "classical";
    rep.scheme_size = scheme.size();
    rep.tol = opts.tol;
    rep.tol_holevo = opts.tol_holevo;
    rep.bound_used = theorem2_bound(scheme.n_qubits, scheme.srf);

    rep.orthogonality_defect = gram_orthonormality(scheme.states).worst();

    std::vector<DensityMatrix> images;
    for (const Ket& k : scheme.states)
        images.push_back(twirl_exact(scheme.srf, DensityMatrix::pure(k), st));

    for (size_t i = 0; i < images.size(); ++i) {
        rep.rho0_residual = std::max(
            rep.rho0_residual, trace_distance(images[i], scheme.claimed_rho0));
        for (size_t j = i + 1; j < images.size(); ++j)
            rep.privacy_defect = std::max(
                rep.privacy_defect, trace_distance(images[i], images[j]));
    }

    std::vector<std::pair<double, DensityMatrix>> ensemble;
    for (const auto& img : images)
        ensemble.emplace_back(1.0 / images.size(), img);
    rep.holevo_bits = holevo(ensemble);

    rep.passed = rep.orthogonality_defect <= opts.tol &&
                 rep.privacy_defect <= opts.tol &&
                 rep.rho0_residual <= opts.tol &&
                 rep.holevo_bits <= opts.tol_holevo &&
                 rep.scheme_size <= rep.bound_used;
    return rep;
}

CertReport certify_quantum(const QuantumScheme& scheme,
                           const SchurTransform& st, const CertOptions& opts) {
    require(scheme.logical_dim >= 1, "certify_quantum: empty logical space");
    require(st.n_qubits() == scheme.n_qubits,
            "certify_quantum: transform mismatch");

    CertReport rep;
    rep.scheme_id = scheme_id(scheme);
    rep.kind = "quantum";
    rep.scheme_size = scheme.logical_dim;
    rep.tol = opts.tol;
    rep.tol_holevo = opts.tol_holevo;
    rep.bound_used = theorem2_bound(scheme.n_qubits, scheme.srf);

    rep.orthogonality_defect = max_abs(
        scheme.encode_isometry.adjoint() * scheme.encode_isometry -
        ComplexMatrix::Identity(scheme.logical_dim, scheme.logical_dim));

    std::vector<DensityMatrix> images;
    for (int i = 0; i < opts.n_random; ++i) {
        SplitMix64 rng(derive_stream(opts.seed, i));
        const Ket logical = random_ket(scheme.logical_dim, rng);
        const DensityMatrix encoded = DensityMatrix::trusted(
            scheme.encode_isometry * logical.projector() *
            scheme.encode_isometry.adjoint());

        const DensityMatrix decoded = quantum_decode(scheme, encoded);
        rep.decode_defect =
            std::max(rep.decode_defect,
                     std::abs(1.0 - fidelity_pure(logical, decoded)));

        images.push_back(twirl_exact(scheme.srf, encoded, st));
    }

    for (size_t i = 0; i < images.size(); ++i) {
        rep.rho0_residual = std::max(
            rep.rho0_residual, trace_distance(images[i], scheme.claimed_rho0));
        if (i > 0)
            rep.privacy_defect = std::max(
                rep.privacy_defect, trace_distance(images[i], images[0]));
    }

    std::vector<std::pair<double, DensityMatrix>> ensemble;
    for (const auto& img : images)
        ensemble.emplace_back(1.0 / images.size(), img);
    rep.holevo_bits = holevo(ensemble);

    rep.passed = rep.orthogonality_defect <= opts.tol &&
                 rep.privacy_defect <= opts.tol &&
                 rep.rho0_residual <= opts.tol &&
                 rep.decode_defect <= opts.tol &&
                 rep.holevo_bits <= opts.tol_holevo;
    return rep;
}

DfullResult certify_dfull(const IrrepBlock& block, SrfKind kind,
                          const SchurTransform& st, int n_random,
                          std::uint64_t seed, double tol) {
    require(n_random >= 1, "certify_dfull: n_random must be positive");
    // Factor layout within the block, (full, free) dimensions.
    const int d_full = (kind == SrfKind::Su2)    ? block.d_R
                       : (kind == SrfKind::Perm) ? block.d_P
                                                 : block.dim();
    const int d_free = block.dim() / d_full;

    const auto embed_and_twirl = [&](const ComplexMatrix& block_state) {
        ComplexMatrix full = ComplexMatrix::Zero(st.dim(), st.dim());
        full.block(block.offset, block.offset, block.dim(), block.dim()) =
            block_state;
        const DensityMatrix out = twirl_exact(
            kind, DensityMatrix::trusted(st.from_schur(full)), st);
        return st.block_project(st.to_schur(out).matrix(), block).first;
    };

    // Block coordinates are R-major: product states must be laid out to
    // match the side the twirl depolarizes.
    const auto compose = [&](const ComplexMatrix& full_part,
                             const ComplexMatrix& free_part) {
        switch (kind) {
            case SrfKind::Su2: return tensor(full_part, free_part);
            case SrfKind::Perm: return tensor(free_part, full_part);
            case SrfKind::Both: return full_part;  // free side is trivial
        }
        throw std::logic_error("unreachable");
    };

    const ComplexMatrix mixed_full =
        ComplexMatrix::Identity(d_full, d_full) / double(d_full);

    double defect = 0.0;
    const auto check_pair = [&](const ComplexMatrix& rho_full,
                                const ComplexMatrix& rho_free) {
        const ComplexMatrix image =
            embed_and_twirl(compose(rho_full, rho_free));
        const ComplexMatrix expect = compose(mixed_full, rho_free);
        defect = std::max(defect, max_abs(image - expect));
    };

    // Basis sweep.
    for (int a = 0; a < d_full; ++a) {
        ComplexMatrix pa = ComplexMatrix::Zero(d_full, d_full);
        pa(a, a) = 1.0;
        for (int b = 0; b < d_free; ++b) {
            ComplexMatrix pb = ComplexMatrix::Zero(d_free, d_free);
            pb(b, b) = 1.0;
            check_pair(pa, pb);
        }
    }
    // Random product states.
    for (int i = 0; i < n_random; ++i) {
        SplitMix64 rng(derive_stream(seed, i));
        const Ket a = random_ket(d_full, rng);
        const Ket b = random_ket(d_free, rng);
        check_pair(a.projector(), b.projector());
    }

    return {defect <= tol, defect};
}

}  // namespace rftwirl
