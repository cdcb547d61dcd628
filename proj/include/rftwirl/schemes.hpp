// Private communication schemes over N qubits for an eavesdropper who
// lacks the rotation frame, the qubit ordering, or both: signal-state
// constructions for classical messages, encoding isometries for quantum
// messages, the counting bound on classical scheme sizes, and the
// finite-N capacity table.
#pragma once

#include "rftwirl/twirl.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rftwirl {

/// Orthogonal signal states that share one fixed image under the twirl.
struct ClassicalScheme {
    int n_qubits = 0;
    SrfKind srf = SrfKind::Su2;
    std::string construction;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Ket> states;
    DensityMatrix claimed_rho0 = DensityMatrix::maximally_mixed(1);

    int size() const { return static_cast<int>(states.size()); }
};

/// Isometric encoding of a logical space into one Schur block (or one of
/// its tensor factors, with a fixed ancilla state on the other factor).
struct QuantumScheme {
    int n_qubits = 0;
    SrfKind srf = SrfKind::Su2;
    std::string construction;
    int logical_dim = 0;
    ComplexMatrix encode_isometry;  // 2^N x logical_dim
    IrrepBlock target_block;
    int ancilla_m_index = -1;  // fixed R-factor basis index, -1 if unused
    DensityMatrix claimed_rho0 = DensityMatrix::maximally_mixed(1);
};

struct CapacityRow {
    int n_qubits = 0;
    SrfKind srf = SrfKind::Su2;
    double quantum_qubits = 0.0;
    double classical_cbits = 0.0;
    long quantum_dim = 0;
    long classical_count = 0;
    long bound = 0;  // counting bound on classical scheme size
    // Large-N rates for this SRF kind, evaluated at this N; finite-N values
    // sitting below them are flagged in the emitted table.
    double asym_quantum_qubits = 0.0;
    double asym_classical_cbits = 0.0;

    bool below_asym_quantum() const {
        return quantum_qubits < asym_quantum_qubits - 1e-9;
    }
    bool below_asym_classical() const {
        return classical_cbits < asym_classical_cbits - 1e-9;
    }
};

std::string scheme_id(const ClassicalScheme& s);
std::string scheme_id(const QuantumScheme& s);

/// Four orthogonal two-qubit states, each an equal-phase mix of the singlet
/// with a doubled spin-coherent state along one tetrahedron direction; the
/// rotation twirl sends every one of them to I/4.
ClassicalScheme tetrahedron_states();

/// Eight orthogonal three-qubit states pairing a j=3/2 basis with four
/// maximally entangled states of the j=1/2 block; the rotation twirl sends
/// every one of them to I/8.
ClassicalScheme three_qubit_octet();

/// Encoding into the largest subsystem that the chosen twirl fully
/// depolarizes: the top block for Su2, the widest multiplicity factor for
/// Perm, the largest whole block for Both.
QuantumScheme quantum_scheme(int n_qubits, SrfKind srf,
                             const SchurTransform& st);

/// V^dag rho V, renormalized. Throws when the received state has no
/// support on the code.
DensityMatrix quantum_decode(const QuantumScheme& scheme,
                             const DensityMatrix& received);

/// Orthogonal maximally-entangled signal states on a d_A x d_B bipartite
/// space (A most significant). If d_A >= d_B there are d_A*d_B of them and
/// depolarizing A sends all to I_A/d_A (x) I_B/d_B; otherwise there are
/// d_A^2, all sent to I_A/d_A (x) (uniform over the first d_A B-states).
std::vector<Ket> lemma1_states(int d_A, int d_B);

/// Entangled states within each spin sector j >= j_min (below the top),
/// Fourier-combined across sectors with equal weight. Yields
/// (N/2 - j_min) * (2 j_min + 1)^2 states, all with one rotation-twirl
/// image. two_j_min must have the parity of n_qubits.
ClassicalScheme su2_classical_scheme(int n_qubits, int two_j_min,
                                     const SchurTransform& st);

/// Per chosen sector, maximally entangled states across the multiplicity
/// and spin factors (capped to the smallest sector's supply m), Fourier
/// across sectors: |set| * m states with one permutation-twirl image.
/// Default sectors: every j whose multiplicity is at least 2j+1.
ClassicalScheme perm_classical_scheme(
    int n_qubits, const SchurTransform& st,
    std::optional<std::vector<int>> irrep_two_js = std::nullopt);

/// Orthogonal states with identical images under the composed twirl.
/// Picks the better of (a) a full basis of the largest block and (b) a
/// Fourier combination across all blocks with equal per-block counts.
ClassicalScheme both_private_classical_scheme(int n_qubits,
                                              const SchurTransform& st);

/// Negative control: computational-basis signal states, which leak the
/// total-spin weights to the eavesdropper. Must fail certification.
ClassicalScheme broken_basis_scheme(int n_qubits, SrfKind srf);

/// Counting bound on the number of private classical messages:
/// sum over sectors of d_full * min(d_full, d_free) for the given kind
/// (whole blocks count as the depolarized side when both frames are
/// private, so the bound is 2^N).
long theorem2_bound(int n_qubits, SrfKind srf);

/// Finite-N capacities: per N and SRF kind, the quantum logical dimension
/// and the largest classical scheme this module can construct, with the
/// counting bound alongside.
std::vector<CapacityRow> capacity_table(int n_min, int n_max,
                                        int max_qubits = kDefaultMaxQubits);

}  // namespace rftwirl
