// Quantitative verification of schemes: orthogonality/isometry defects,
// privacy defects (spread of the eavesdropper's images), the information
// ceiling of the image ensemble, and depolarized-subsystem checks.
#pragma once

#include "rftwirl/schemes.hpp"

#include <json.hpp>

namespace rftwirl {

struct CertOptions {
    double tol = 1e-10;        // orthogonality / privacy / fixed-point
    double tol_holevo = 1e-9;  // image-ensemble information
    int n_random = 64;
    std::uint64_t seed = 0x52465457u;  // "RFTW"
};

struct CertReport {
    std::string scheme_id;
    std::string kind;  // "classical" or "quantum"
    long scheme_size = 0;
    double orthogonality_defect = 0.0;  // isometry defect for quantum schemes
    double privacy_defect = 0.0;  // max pairwise distance of twirl images
    double rho0_residual = 0.0;   // max distance to the claimed fixed point
    double holevo_bits = 0.0;     // of the uniform image ensemble
    double decode_defect = 0.0;   // quantum only: worst 1 - fidelity
    long bound_used = 0;
    bool passed = false;
    double tol = 0.0;
    double tol_holevo = 0.0;

    nlohmann::json to_json() const;
};

/// Holevo quantity S(mean) - sum p_i S(rho_i) of an ensemble, in bits.
double holevo(const std::vector<std::pair<double, DensityMatrix>>& ensemble);

/// Optimal success probability for discriminating two equiprobable states:
/// 1/2 + trace_distance / 2.
double helstrom_guess(const DensityMatrix& a, const DensityMatrix& b);

/// Checks that every state of each signal set maps to one fixed image
/// under the scheme's twirl, and that the states are orthonormal.
CertReport certify_classical(const ClassicalScheme& scheme,
                             const SchurTransform& st,
                             const CertOptions& opts = {});

/// Checks the isometry, perfect decode of random logical states, and a
/// single twirl image across random encoded states.
CertReport certify_quantum(const QuantumScheme& scheme,
                           const SchurTransform& st,
                           const CertOptions& opts = {});

struct DfullResult {
    bool passed = false;
    double defect = 0.0;
};

/// Verifies that the twirl fully depolarizes one tensor factor of the given
/// block while acting trivially on the other: random product states and a
/// basis sweep must map to I/d_full (x) (unchanged partner state). For the
/// composed twirl the whole block is the depolarized side.
DfullResult certify_dfull(const IrrepBlock& block, SrfKind kind,
                          const SchurTransform& st, int n_random,
                          std::uint64_t seed, double tol);

}  // namespace rftwirl
