// Monte-Carlo rendering of the sender -> channel -> receiver protocol with
// an intercepting eavesdropper whose frame relation is drawn fresh each
// trial. The receiver shares the frame and decodes perfectly; the
// eavesdropper measures her misaligned view of the transmitted state.
#pragma once

#include "rftwirl/certify.hpp"

#include <json.hpp>

namespace rftwirl {

enum class EveStrategy { HelstromPairwise, FixedMeasurement };

struct ProtocolOptions {
    long n_trials = 10000;
    std::uint64_t seed = 1;
    EveStrategy strategy = EveStrategy::HelstromPairwise;
    int pair_a = 0;  // designated message pair for the binary strategy
    int pair_b = 1;
    bool require_certified = true;  // refuse schemes that fail certification
};

struct TrialRecord {
    long trial = 0;
    int sent = 0;
    int bob = 0;
    int eve = -1;  // -1 when the strategy makes no guess on this trial
};

struct ProtocolRun {
    std::string scheme_id;
    long n_trials = 0;
    std::uint64_t seed = 0;
    EveStrategy strategy = EveStrategy::HelstromPairwise;
    int pair_a = 0;
    int pair_b = 1;
    std::vector<TrialRecord> trials;

    double bob_success_rate = 0.0;
    long pair_trials = 0;          // trials whose message was in the pair
    double eve_pair_guess_rate = 0.0;

    nlohmann::json summary_json() const;
};

/// Runs n_trials independent transmissions. Each trial draws its own
/// misalignment (rotation, permutation, or both, per the scheme's SRF
/// kind) from (seed, trial), so transcripts are reproducible bit-exactly.
/// Throws std::runtime_error when the scheme fails certification, unless
/// require_certified is cleared.
ProtocolRun run_protocol(const ClassicalScheme& scheme,
                         const SchurTransform& st,
                         const ProtocolOptions& opts = {});

/// Plug-in mutual information (bits) between the sent message and the
/// eavesdropper's guess, over the trials where she guessed.
double eve_mutual_information_estimate(const ProtocolRun& run);

struct ReuseDemoResult {
    long n_trials = 0;
    double eve_guess_rate = 0.0;  // distinguishing (m,m) from (m,m')
    double advantage = 0.0;       // guess rate - 1/2
    double sigma = 0.0;           // binomial standard error

    nlohmann::json to_json() const;
};

/// Frame-reuse demonstration: two messages are sent under one rotation
/// misalignment, and the eavesdropper measures the pair jointly. Her
/// advantage over 1/2 shows that reusing a private frame leaks relational
/// information. Rotation-frame schemes only.
ReuseDemoResult run_reuse_demo(const ClassicalScheme& scheme, long n_trials,
                               std::uint64_t seed,
                               int max_qubits = kDefaultMaxQubits);

}  // namespace rftwirl
