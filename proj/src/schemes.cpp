#include "rftwirl/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Complex unit_phase(double angle) {
    return Complex(std::cos(angle), std::sin(angle));
}

/// Reindex a vector on A (x) B as a vector on B (x) A.
ComplexVector swap_factors(const ComplexVector& v, int d_a, int d_b) {
    ComplexVector out(v.size());
    for (int a = 0; a < d_a; ++a)
        for (int b = 0; b < d_b; ++b) out(b * d_a + a) = v(a * d_b + b);
    return out;
}

/// Embed a Schur-block vector into the full space and return it in the
/// computational basis.
Ket embed_block_vector(const SchurTransform& st, const IrrepBlock& block,
                       const ComplexVector& block_vec) {
    ComplexVector full = ComplexVector::Zero(st.dim());
    full.segment(block.offset, block.dim()) = block_vec;
    return Ket::from_vector(st.from_schur(full));
}

/// Projector onto a block, in the computational basis.
ComplexMatrix block_projector(const SchurTransform& st,
                              const IrrepBlock& block) {
    const auto cols = st.unitary().middleCols(block.offset, block.dim());
    return cols * cols.adjoint();
}

/// Common twirl image of lemma1_states(d_A, d_B) on the bipartite space:
/// I_A/d_A (x) sigma_B, where sigma_B is I_B/d_B when d_A >= d_B and the
/// uniform mixture over the first d_A basis states of B otherwise.
ComplexMatrix lemma1_common_image(int d_a, int d_b) {
    ComplexMatrix sigma_b = ComplexMatrix::Zero(d_b, d_b);
    const int support = std::min(d_a, d_b);
    for (int k = 0; k < support; ++k) sigma_b(k, k) = 1.0 / support;
    return tensor(ComplexMatrix::Identity(d_a, d_a) / double(d_a), sigma_b);
}

/// Orthonormal signal basis of one block for permutation-style schemes:
/// maximally entangled across (P, R) when the multiplicity side is at
/// least as large as the spin side, the canonical block basis otherwise.
/// Returned in block coordinates (R major, P minor).
std::vector<ComplexVector> block_signal_basis(const IrrepBlock& b) {
    std::vector<ComplexVector> out;
    if (b.d_P >= b.d_R) {
        for (const Ket& k : lemma1_states(b.d_P, b.d_R))
            out.push_back(swap_factors(k.amplitudes(), b.d_P, b.d_R));
    } else {
        for (int i = 0; i < b.dim(); ++i)
            out.push_back(ComplexVector::Unit(b.dim(), i));
    }
    return out;
}

/// Largest block under `score`, ties broken toward smaller j.
template <typename Score>
const IrrepBlock& argmax_block(const SchurTransform& st, Score score) {
    const IrrepBlock* best = &st.blocks().front();
    for (const IrrepBlock& b : st.blocks())
        if (score(b) >= score(*best)) best = &b;  // blocks run j high to low
    return *best;
}

}  // namespace

std::string scheme_id(const ClassicalScheme& s) {
    std::ostringstream os;
    os << s.construction << "(n=" << s.n_qubits << "," << to_string(s.srf);
    for (const auto& [key, value] : s.params.items())
        os << "," << key << "=" << value.dump();
    os << ")";
    return os.str();
}

std::string scheme_id(const QuantumScheme& s) {
    std::ostringstream os;
    os << s.construction << "(n=" << s.n_qubits << "," << to_string(s.srf)
       << ",logical_dim=" << s.logical_dim << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Two-qubit tetrahedron scheme

ClassicalScheme tetrahedron_states() {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const double dirs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};

    // Doubled spin-coherent states |n>|n>, |n> the +1/2 eigenvector of n.J.
    std::vector<ComplexVector> doubled;
    for (const auto& d : dirs) {
        const double nx = d[0] * inv_sqrt3, ny = d[1] * inv_sqrt3,
                     nz = d[2] * inv_sqrt3;
        ComplexVector n(2);
        n(0) = std::sqrt((1.0 + nz) / 2.0);
        n(1) = Complex(nx, ny) / std::sqrt(2.0 * (1.0 + nz));
        doubled.push_back(tensor(n, n));
    }

    // Phases: fix alpha_0 = 0, pin the others against state 0, then verify
    // that every phased pair overlap equals -1/3.
    double alpha[4] = {0, 0, 0, 0};
    for (int i = 1; i < 4; ++i) {
        const Complex ov = (doubled[0].adjoint() * doubled[i])(0);
        alpha[i] = M_PI - std::arg(ov);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const Complex ov = (doubled[i].adjoint() * doubled[j])(0);
            const Complex phased = unit_phase(alpha[j] - alpha[i]) * ov;
            if (std::abs(phased + 1.0 / 3.0) > 1e-10)
                throw std::runtime_error(
                    "tetrahedron_states: phase solution failed");
        }

    ComplexVector singlet = ComplexVector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);

    ClassicalScheme scheme;
    scheme.n_qubits = 2;
    scheme.srf = SrfKind::Su2;
    scheme.construction = "tetrahedron";
    for (int i = 0; i < 4; ++i) {
        const ComplexVector v =
            0.5 * singlet +
            (std::sqrt(3.0) / 2.0) * unit_phase(alpha[i]) * doubled[i];
        scheme.states.push_back(Ket::from_vector(v));
    }
    scheme.claimed_rho0 = DensityMatrix::maximally_mixed(4);
    return scheme;
}

// ---------------------------------------------------------------------------
// Three-qubit octet

ClassicalScheme three_qubit_octet() {
    const SchurTransform st = build_schur_transform(3);
    const IrrepBlock& top = st.block_for_two_j(3);   // j = 3/2, dim 4
    const IrrepBlock& half = st.block_for_two_j(1);  // j = 1/2, 2 x 2

    // Four maximally entangled states on the (R, P) factors of the j=1/2
    // block, indexed mu = 2l + m.
    std::vector<ComplexVector> ent;
    for (const Ket& k : lemma1_states(2, 2)) ent.push_back(k.amplitudes());

    ClassicalScheme scheme;
    scheme.n_qubits = 3;
    scheme.srf = SrfKind::Su2;
    scheme.construction = "octet";
    for (int b = 0; b < 2; ++b) {
        for (int mu = 0; mu < 4; ++mu) {
            ComplexVector schur_vec = ComplexVector::Zero(8);
            schur_vec(top.offset + mu) = 1.0 / std::sqrt(2.0);
            const double sign = (b == 0) ? 1.0 : -1.0;
            schur_vec.segment(half.offset, half.dim()) =
                (sign / std::sqrt(2.0)) * ent[mu];
            scheme.states.push_back(
                Ket::from_vector(st.from_schur(schur_vec)));
        }
    }
    scheme.claimed_rho0 = DensityMatrix::maximally_mixed(8);
    return scheme;
}

// ---------------------------------------------------------------------------
// Quantum schemes

QuantumScheme quantum_scheme(int n_qubits, SrfKind srf,
                             const SchurTransform& st) {
    require(st.n_qubits() == n_qubits, "quantum_scheme: transform mismatch");

    QuantumScheme scheme;
    scheme.n_qubits = n_qubits;
    scheme.srf = srf;

    switch (srf) {
        case SrfKind::Su2: {
            // Top block: multiplicity 1, fully depolarized by the twirl.
            const IrrepBlock& top = st.block_for_two_j(n_qubits);
            scheme.construction = "quantum-su2";
            scheme.target_block = top;
            scheme.logical_dim = top.d_R;
            scheme.encode_isometry =
                st.unitary().middleCols(top.offset, top.d_R);
            scheme.claimed_rho0 = DensityMatrix::trusted(
                block_projector(st, top) / double(top.dim()));
            break;
        }
        case SrfKind::Perm: {
            // Widest multiplicity factor; spin factor pinned to its first
            // basis state.
            const IrrepBlock& b = argmax_block(
                st, [](const IrrepBlock& x) { return x.d_P; });
            scheme.construction = "quantum-perm";
            scheme.target_block = b;
            scheme.logical_dim = b.d_P;
            scheme.ancilla_m_index = 0;
            scheme.encode_isometry = st.unitary().middleCols(b.offset, b.d_P);

            ComplexMatrix fixed_r = ComplexMatrix::Zero(b.d_R, b.d_R);
            fixed_r(0, 0) = 1.0;
            ComplexMatrix image = ComplexMatrix::Zero(st.dim(), st.dim());
            image.block(b.offset, b.offset, b.dim(), b.dim()) =
                tensor(fixed_r, ComplexMatrix::Identity(b.d_P, b.d_P) /
                                    double(b.d_P));
            scheme.claimed_rho0 =
                DensityMatrix::trusted(st.from_schur(image));
            break;
        }
        case SrfKind::Both: {
            const IrrepBlock& b = argmax_block(
                st, [](const IrrepBlock& x) { return x.dim(); });
            scheme.construction = "quantum-both";
            scheme.target_block = b;
            scheme.logical_dim = b.dim();
            scheme.encode_isometry =
                st.unitary().middleCols(b.offset, b.dim());
            scheme.claimed_rho0 = DensityMatrix::trusted(
                block_projector(st, b) / double(b.dim()));
            break;
        }
    }
    return scheme;
}

DensityMatrix quantum_decode(const QuantumScheme& scheme,
                             const DensityMatrix& received) {
    require(received.dim() == scheme.encode_isometry.rows(),
            "quantum_decode: dimension mismatch");
    ComplexMatrix logical = scheme.encode_isometry.adjoint() *
                            received.matrix() * scheme.encode_isometry;
    const double tr = logical.trace().real();
    if (tr < 1e-12)
        throw std::runtime_error(
            "quantum_decode: received state has no support on the code");
    return DensityMatrix::trusted(logical / tr);
}

// ---------------------------------------------------------------------------
// Classical constructions

std::vector<Ket> lemma1_states(int d_a, int d_b) {
    require(d_a >= 1 && d_b >= 1,
            "lemma1_states: dimensions must be positive");
    std::vector<Ket> states;
    // Cyclic shift l on A against the first `width` basis states of B;
    // the phase index m runs over the summed range.
    const int width = std::min(d_a, d_b);
    for (int l = 0; l < d_a; ++l)
        for (int m = 0; m < width; ++m) {
            ComplexVector v =
                ComplexVector::Zero(static_cast<Eigen::Index>(d_a) * d_b);
            for (int k = 0; k < width; ++k)
                v(((k + l) % d_a) * d_b + k) =
                    unit_phase(2.0 * M_PI * k * m / width) /
                    std::sqrt(double(width));
            states.push_back(Ket::from_vector(v));
        }
    return states;
}

ClassicalScheme su2_classical_scheme(int n_qubits, int two_j_min,
                                     const SchurTransform& st) {
    require(st.n_qubits() == n_qubits,
            "su2_classical_scheme: transform mismatch");
    require(two_j_min >= 0 && two_j_min < n_qubits,
            "su2_classical_scheme: two_j_min out of range");
    require((two_j_min & 1) == (n_qubits & 1),
            "su2_classical_scheme: two_j_min must have the parity of N");

    const int d = two_j_min + 1;                    // entanglement width
    const int n_sectors = (n_qubits - two_j_min) / 2;  // sectors used

    // Per sector, d^2 entangled states: phase index against the spin
    // factor, cyclic shift on the multiplicity factor, both truncated to
    // their first d basis states (always available below the top sector).
    std::vector<std::vector<ComplexVector>> per_sector(n_sectors);
    std::vector<const IrrepBlock*> sector_blocks(n_sectors);
    for (int a = 0; a < n_sectors; ++a) {
        const IrrepBlock& b = st.block_for_two_j(two_j_min + 2 * a);
        sector_blocks[a] = &b;
        require(b.d_R >= d && b.d_P >= d,
                "su2_classical_scheme: sector too small");
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                ComplexVector v = ComplexVector::Zero(b.dim());
                for (int s = 0; s < d; ++s)
                    v(s * b.d_P + (s + l) % d) =
                        unit_phase(2.0 * M_PI * s * k / d) /
                        std::sqrt(double(d));
                per_sector[a].push_back(std::move(v));
            }
    }

    ClassicalScheme scheme;
    scheme.n_qubits = n_qubits;
    scheme.srf = SrfKind::Su2;
    scheme.construction = "su2-classical";
    scheme.params["two_j_min"] = two_j_min;

    for (int mu = 0; mu < n_sectors; ++mu)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                ComplexVector full = ComplexVector::Zero(st.dim());
                for (int a = 0; a < n_sectors; ++a) {
                    const IrrepBlock& b = *sector_blocks[a];
                    full.segment(b.offset, b.dim()) +=
                        unit_phase(2.0 * M_PI * mu * a / n_sectors) /
                        std::sqrt(double(n_sectors)) *
                        per_sector[a][k * d + l];
                }
                scheme.states.push_back(
                    Ket::from_vector(st.from_schur(full)));
            }

    // Fixed image: per sector, maximally mixed spin factor and the uniform
    // mixture over the d multiplicity states used.
    ComplexMatrix rho0 = ComplexMatrix::Zero(st.dim(), st.dim());
    for (int a = 0; a < n_sectors; ++a) {
        const IrrepBlock& b = *sector_blocks[a];
        ComplexMatrix sigma_p = ComplexMatrix::Zero(b.d_P, b.d_P);
        for (int p = 0; p < d; ++p) sigma_p(p, p) = 1.0 / d;
        rho0.block(b.offset, b.offset, b.dim(), b.dim()) =
            tensor(ComplexMatrix::Identity(b.d_R, b.d_R) / double(b.d_R),
                   sigma_p) /
            double(n_sectors);
    }
    scheme.claimed_rho0 = DensityMatrix::trusted(st.from_schur(rho0));
    return scheme;
}

ClassicalScheme perm_classical_scheme(
    int n_qubits, const SchurTransform& st,
    std::optional<std::vector<int>> irrep_two_js) {
    require(st.n_qubits() == n_qubits,
            "perm_classical_scheme: transform mismatch");

    std::vector<const IrrepBlock*> chosen;
    if (irrep_two_js.has_value()) {
        require(!irrep_two_js->empty(),
                "perm_classical_scheme: empty irrep set");
        std::vector<int> sorted = *irrep_two_js;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        require(std::adjacent_find(sorted.begin(), sorted.end()) ==
                    sorted.end(),
                "perm_classical_scheme: duplicate irrep");
        for (int two_j : sorted) chosen.push_back(&st.block_for_two_j(two_j));
    } else {
        for (const IrrepBlock& b : st.blocks())
            if (b.d_P >= b.d_R) chosen.push_back(&b);
        require(!chosen.empty(),
                "perm_classical_scheme: no sector has multiplicity >= spin "
                "dimension at this N");
    }

    // Equal per-sector supply, capped by the smallest chosen sector.
    long m = std::numeric_limits<long>::max();
    for (const IrrepBlock* b : chosen)
        m = std::min(m, long(b->d_P) * std::min(b->d_P, b->d_R));

    const int n_sectors = static_cast<int>(chosen.size());
    std::vector<std::vector<ComplexVector>> per_sector(n_sectors);
    for (int a = 0; a < n_sectors; ++a) {
        const IrrepBlock& b = *chosen[a];
        const auto kets = lemma1_states(b.d_P, b.d_R);  // A = P, B = R
        for (long t = 0; t < m; ++t)
            per_sector[a].push_back(
                swap_factors(kets[t].amplitudes(), b.d_P, b.d_R));
    }

    ClassicalScheme scheme;
    scheme.n_qubits = n_qubits;
    scheme.srf = SrfKind::Perm;
    scheme.construction = "perm-classical";
    {
        std::vector<int> two_js;
        for (const IrrepBlock* b : chosen) two_js.push_back(b->label.two_j);
        scheme.params["irrep_two_js"] = two_js;
    }

    for (int mu = 0; mu < n_sectors; ++mu)
        for (long t = 0; t < m; ++t) {
            ComplexVector full = ComplexVector::Zero(st.dim());
            for (int a = 0; a < n_sectors; ++a) {
                const IrrepBlock& b = *chosen[a];
                full.segment(b.offset, b.dim()) +=
                    unit_phase(2.0 * M_PI * mu * a / n_sectors) /
                    std::sqrt(double(n_sectors)) * per_sector[a][t];
            }
            scheme.states.push_back(Ket::from_vector(st.from_schur(full)));
        }

    ComplexMatrix rho0 = ComplexMatrix::Zero(st.dim(), st.dim());
    for (const IrrepBlock* b : chosen) {
        // Depolarized P factor, fixed reduced state on R; swap the
        // (P, R) image into block coordinates (R major).
        const ComplexMatrix img_pr = lemma1_common_image(b->d_P, b->d_R);
        ComplexMatrix img_rp(b->dim(), b->dim());
        for (int r = 0; r < b->d_R; ++r)
            for (int p = 0; p < b->d_P; ++p)
                for (int r2 = 0; r2 < b->d_R; ++r2)
                    for (int p2 = 0; p2 < b->d_P; ++p2)
                        img_rp(r * b->d_P + p, r2 * b->d_P + p2) =
                            img_pr(p * b->d_R + r, p2 * b->d_R + r2);
        rho0.block(b->offset, b->offset, b->dim(), b->dim()) =
            img_rp / double(n_sectors);
    }
    scheme.claimed_rho0 = DensityMatrix::trusted(st.from_schur(rho0));
    return scheme;
}

ClassicalScheme both_private_classical_scheme(int n_qubits,
                                              const SchurTransform& st) {
    require(st.n_qubits() == n_qubits,
            "both_private_classical_scheme: transform mismatch");

    // Candidate (a): full signal basis of the largest block.
    const IrrepBlock& best =
        argmax_block(st, [](const IrrepBlock& x) { return x.dim(); });
    const long count_a = best.dim();

    // Candidate (b): Fourier across all blocks with equal per-block counts.
    long min_dim = std::numeric_limits<long>::max();
    for (const IrrepBlock& b : st.blocks())
        min_dim = std::min(min_dim, long(b.dim()));
    const long n_blocks = static_cast<long>(st.blocks().size());
    const long count_b = n_blocks * min_dim;

    ClassicalScheme scheme;
    scheme.n_qubits = n_qubits;
    scheme.srf = SrfKind::Both;
    scheme.construction = "both-classical";

    if (count_a >= count_b) {
        scheme.params["variant"] = "single-block";
        scheme.params["two_j"] = best.label.two_j;
        for (const ComplexVector& v : block_signal_basis(best))
            scheme.states.push_back(embed_block_vector(st, best, v));
        scheme.claimed_rho0 = DensityMatrix::trusted(
            block_projector(st, best) / double(best.dim()));
    } else {
        scheme.params["variant"] = "multi-block";
        std::vector<std::vector<ComplexVector>> per_block;
        for (const IrrepBlock& b : st.blocks()) {
            auto basis = block_signal_basis(b);
            basis.resize(min_dim);  // equal per-block count
            per_block.push_back(std::move(basis));
        }
        for (long mu = 0; mu < n_blocks; ++mu)
            for (long t = 0; t < min_dim; ++t) {
                ComplexVector full = ComplexVector::Zero(st.dim());
                for (long a = 0; a < n_blocks; ++a) {
                    const IrrepBlock& b = st.blocks()[a];
                    full.segment(b.offset, b.dim()) +=
                        unit_phase(2.0 * M_PI * mu * a / n_blocks) /
                        std::sqrt(double(n_blocks)) * per_block[a][t];
                }
                scheme.states.push_back(
                    Ket::from_vector(st.from_schur(full)));
            }
        ComplexMatrix rho0 = ComplexMatrix::Zero(st.dim(), st.dim());
        for (const IrrepBlock& b : st.blocks())
            rho0.block(b.offset, b.offset, b.dim(), b.dim()) =
                ComplexMatrix::Identity(b.dim(), b.dim()) /
                double(b.dim() * n_blocks);
        scheme.claimed_rho0 = DensityMatrix::trusted(st.from_schur(rho0));
    }
    return scheme;
}

ClassicalScheme broken_basis_scheme(int n_qubits, SrfKind srf) {
    require(n_qubits >= 2, "broken_basis_scheme: needs at least two qubits");
    const int dim = 1 << n_qubits;
    ClassicalScheme scheme;
    scheme.n_qubits = n_qubits;
    scheme.srf = srf;
    scheme.construction = "broken-basis";
    const int count = std::min(dim, 4);
    for (int i = 0; i < count; ++i)
        scheme.states.push_back(Ket::from_vector(ComplexVector::Unit(dim, i)));
    scheme.claimed_rho0 = DensityMatrix::maximally_mixed(dim);
    return scheme;
}

// ---------------------------------------------------------------------------
// Bounds and capacities

long theorem2_bound(int n_qubits, SrfKind srf) {
    require(n_qubits >= 1, "theorem2_bound: n_qubits must be positive");
    if (srf == SrfKind::Both) return 1L << n_qubits;
    long total = 0;
    for (int two_j = n_qubits % 2; two_j <= n_qubits; two_j += 2) {
        const long d_r = dim_R({two_j, n_qubits});
        const long d_p = dim_P({two_j, n_qubits});
        const long d_full = (srf == SrfKind::Su2) ? d_r : d_p;
        const long d_free = (srf == SrfKind::Su2) ? d_p : d_r;
        total += d_full * std::min(d_full, d_free);
    }
    return total;
}

std::vector<CapacityRow> capacity_table(int n_min, int n_max,
                                        int max_qubits) {
    require(1 <= n_min && n_min <= n_max, "capacity_table: bad range");
    require(n_max <= max_qubits,
            "capacity_table: range exceeds the qubit cap");

    std::vector<CapacityRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<long> block_dr, block_dp;
        for (int two_j = n % 2; two_j <= n; two_j += 2) {
            block_dr.push_back(dim_R({two_j, n}));
            block_dp.push_back(dim_P({two_j, n}));
        }
        const long n_blocks = static_cast<long>(block_dr.size());

        for (SrfKind srf : {SrfKind::Su2, SrfKind::Perm, SrfKind::Both}) {
            CapacityRow row;
            row.n_qubits = n;
            row.srf = srf;
            row.bound = theorem2_bound(n, srf);

            switch (srf) {
                case SrfKind::Su2: {
                    row.quantum_dim = n + 1;
                    // Best of: sector-spanning entangled construction over
                    // every starting sector, the worked small-N schemes,
                    // and the quantum code used classically.
                    long best = n + 1;
                    for (int two_j_min = n % 2; two_j_min < n;
                         two_j_min += 2) {
                        const long k = (n - two_j_min) / 2;
                        const long d = two_j_min + 1;
                        best = std::max(best, k * d * d);
                    }
                    if (n == 2) best = std::max(best, 4L);
                    if (n == 3) best = std::max(best, 8L);
                    row.classical_count = best;
                    break;
                }
                case SrfKind::Perm: {
                    row.quantum_dim =
                        *std::max_element(block_dp.begin(), block_dp.end());
                    // Best |S| * (smallest per-sector supply) over sector
                    // subsets: sort supplies, scan prefixes.
                    std::vector<long> avail;
                    for (long bi = 0; bi < n_blocks; ++bi)
                        avail.push_back(block_dp[bi] *
                                        std::min(block_dp[bi], block_dr[bi]));
                    std::sort(avail.rbegin(), avail.rend());
                    long best = 0;
                    for (long k = 1; k <= n_blocks; ++k)
                        best = std::max(best, k * avail[k - 1]);
                    row.classical_count = best;
                    break;
                }
                case SrfKind::Both: {
                    long max_dim = 0;
                    long min_dim = std::numeric_limits<long>::max();
                    for (long bi = 0; bi < n_blocks; ++bi) {
                        const long dim = block_dr[bi] * block_dp[bi];
                        max_dim = std::max(max_dim, dim);
                        min_dim = std::min(min_dim, dim);
                    }
                    row.quantum_dim = max_dim;
                    row.classical_count =
                        std::max(max_dim, n_blocks * min_dim);
                    break;
                }
            }
            row.quantum_qubits = std::log2(double(row.quantum_dim));
            row.classical_cbits = std::log2(double(row.classical_count));
            switch (srf) {
                case SrfKind::Su2:
                    row.asym_quantum_qubits = std::log2(double(n));
                    row.asym_classical_cbits = 3.0 * std::log2(double(n));
                    break;
                case SrfKind::Perm:
                    row.asym_quantum_qubits = n - std::log2(double(n));
                    row.asym_classical_cbits = n;
                    break;
                case SrfKind::Both:
                    row.asym_quantum_qubits = n - 0.5 * std::log2(double(n));
                    row.asym_classical_cbits = n;
                    break;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace rftwirl
