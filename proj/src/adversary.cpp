#include "rftwirl/adversary.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rftwirl {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Projector onto the positive eigenspace of a Hermitian matrix: the
/// optimal binary measurement for (a - b).
ComplexMatrix positive_part_projector(const ComplexMatrix& hermitian) {
    const ComplexMatrix h = (hermitian + hermitian.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    ComplexMatrix proj = ComplexMatrix::Zero(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        if (es.eigenvalues()(i) > 0.0)
            proj += es.eigenvectors().col(i) *
                    es.eigenvectors().col(i).adjoint();
    return proj;
}

/// The eavesdropper's misaligned view of a transmitted pure state.
ComplexVector misalign(const Ket& state, SrfKind srf, int n_qubits,
                       SplitMix64& rng) {
    ComplexVector v = state.amplitudes();
    if (srf == SrfKind::Perm || srf == SrfKind::Both) {
        const Permutation p = Permutation::uniform_random(n_qubits, rng);
        v = permutation_operator(p) * v;
    }
    if (srf == SrfKind::Su2 || srf == SrfKind::Both) {
        const Rotation omega = Rotation::haar_random(rng);
        v = collective_rotation(omega, n_qubits) * v;
    }
    return v;
}

}  // namespace

nlohmann::json ProtocolRun::summary_json() const {
    const double sigma =
        pair_trials > 0 ? 0.5 / std::sqrt(double(pair_trials)) : 0.0;
    return {{"scheme_id", scheme_id},
            {"n_trials", n_trials},
            {"seed", seed},
            {"strategy", strategy == EveStrategy::HelstromPairwise
                             ? "helstrom_pairwise"
                             : "fixed_measurement"},
            {"designated_pair", {pair_a, pair_b}},
            {"bob_success_rate", bob_success_rate},
            {"pair_trials", pair_trials},
            {"eve_pair_guess_rate", eve_pair_guess_rate},
            {"eve_pair_guess_sigma", sigma},
            {"eve_mutual_information_bits",
             eve_mutual_information_estimate(*this)}};
}

ProtocolRun run_protocol(const ClassicalScheme& scheme,
                         const SchurTransform& st,
                         const ProtocolOptions& opts) {
    require(opts.n_trials >= 1, "run_protocol: n_trials must be positive");
    const int n_messages = scheme.size();
    require(n_messages >= 2, "run_protocol: need at least two messages");
    require(opts.pair_a != opts.pair_b && opts.pair_a >= 0 &&
                opts.pair_b >= 0 && opts.pair_a < n_messages &&
                opts.pair_b < n_messages,
            "run_protocol: bad designated pair");

    if (opts.require_certified) {
        const CertReport rep = certify_classical(scheme, st);
        if (!rep.passed)
            throw std::runtime_error(
                "run_protocol: scheme failed certification (" +
                rep.scheme_id + ")");
    }

    // Eve's reference observables are built from the averaged views, the
    // only states she can reason about without the frame.
    std::vector<DensityMatrix> averaged;
    for (const Ket& k : scheme.states)
        averaged.push_back(
            twirl_exact(scheme.srf, DensityMatrix::pure(k), st));

    // Binary strategy: measure the sign subspace of the averaged
    // difference for the designated pair.
    const ComplexMatrix helstrom_proj = positive_part_projector(
        averaged[opts.pair_a].matrix() - averaged[opts.pair_b].matrix());

    // Fixed complete measurement: computational basis, maximum-likelihood
    // guess from the averaged views.
    std::vector<std::vector<double>> likelihood;  // [outcome][message]
    if (opts.strategy == EveStrategy::FixedMeasurement) {
        likelihood.resize(st.dim(), std::vector<double>(n_messages, 0.0));
        for (int i = 0; i < n_messages; ++i)
            for (int x = 0; x < st.dim(); ++x)
                likelihood[x][i] = averaged[i].matrix()(x, x).real();
    }

    ProtocolRun run;
    run.scheme_id = scheme_id(scheme);
    run.n_trials = opts.n_trials;
    run.seed = opts.seed;
    run.strategy = opts.strategy;
    run.pair_a = opts.pair_a;
    run.pair_b = opts.pair_b;
    run.trials.reserve(opts.n_trials);

    long bob_correct = 0, pair_trials = 0, eve_correct = 0;
    for (long t = 0; t < opts.n_trials; ++t) {
        SplitMix64 rng(derive_stream(opts.seed, t));
        TrialRecord rec;
        rec.trial = t;
        rec.sent = static_cast<int>(rng.below(n_messages));

        // Bob measures in the scheme basis within the shared frame:
        // the channel is noiseless, so he sees the prepared state.
        double best = -1.0;
        for (int i = 0; i < n_messages; ++i) {
            const double overlap =
                std::norm((scheme.states[i].amplitudes().adjoint() *
                           scheme.states[rec.sent].amplitudes())(0));
            if (overlap > best) {
                best = overlap;
                rec.bob = i;
            }
        }
        if (rec.bob == rec.sent) ++bob_correct;

        // Eve sees the state through her misaligned frame.
        const ComplexVector view =
            misalign(scheme.states[rec.sent], scheme.srf, scheme.n_qubits,
                     rng);

        if (opts.strategy == EveStrategy::HelstromPairwise) {
            if (rec.sent == opts.pair_a || rec.sent == opts.pair_b) {
                ++pair_trials;
                const double p_plus =
                    (view.adjoint() * helstrom_proj * view)(0).real();
                const bool plus = rng.uniform01() < std::clamp(p_plus, 0.0, 1.0);
                rec.eve = plus ? opts.pair_a : opts.pair_b;
                if (rec.eve == rec.sent) ++eve_correct;
            }
        } else {
            // Sample a computational-basis outcome, then guess by maximum
            // likelihood under the averaged views.
            double u = rng.uniform01();
            int outcome = 0;
            for (int x = 0; x < st.dim(); ++x) {
                u -= std::norm(view(x));
                if (u <= 0.0) {
                    outcome = x;
                    break;
                }
            }
            int guess = 0;
            for (int i = 1; i < n_messages; ++i)
                if (likelihood[outcome][i] > likelihood[outcome][guess])
                    guess = i;
            rec.eve = guess;
            if (rec.sent == opts.pair_a || rec.sent == opts.pair_b) {
                ++pair_trials;
                if (rec.eve == rec.sent) ++eve_correct;
            }
        }
        run.trials.push_back(rec);
    }

    run.bob_success_rate = double(bob_correct) / double(opts.n_trials);
    run.pair_trials = pair_trials;
    run.eve_pair_guess_rate =
        pair_trials > 0 ? double(eve_correct) / double(pair_trials) : 0.0;
    return run;
}

double eve_mutual_information_estimate(const ProtocolRun& run) {
    // Joint counts over trials with a guess.
    std::map<std::pair<int, int>, long> joint;
    std::map<int, long> sent_counts, guess_counts;
    long total = 0;
    for (const TrialRecord& rec : run.trials) {
        if (rec.eve < 0) continue;
        ++joint[{rec.sent, rec.eve}];
        ++sent_counts[rec.sent];
        ++guess_counts[rec.eve];
        ++total;
    }
    if (total == 0) return 0.0;
    double mi = 0.0;
    for (const auto& [key, count] : joint) {
        const double p_joint = double(count) / total;
        const double p_sent = double(sent_counts[key.first]) / total;
        const double p_guess = double(guess_counts[key.second]) / total;
        mi += p_joint * std::log2(p_joint / (p_sent * p_guess));
    }
    return std::max(mi, 0.0);
}

nlohmann::json ReuseDemoResult::to_json() const {
    return {{"n_trials", n_trials},
            {"eve_guess_rate", eve_guess_rate},
            {"advantage", advantage},
            {"sigma", sigma}};
}

ReuseDemoResult run_reuse_demo(const ClassicalScheme& scheme, long n_trials,
                               std::uint64_t seed, int max_qubits) {
    require(scheme.srf == SrfKind::Su2,
            "run_reuse_demo: rotation-frame schemes only");
    require(n_trials >= 1, "run_reuse_demo: n_trials must be positive");
    const int n = scheme.n_qubits;
    const SchurTransform joint_st = build_schur_transform(2 * n, max_qubits);

    // Two transmissions under ONE misalignment: Eve's averaged views of
    // the pairs (0,0) and (0,1) differ, unlike the single-shot views.
    const Ket& s0 = scheme.states[0];
    const Ket& s1 = scheme.states[1];
    const DensityMatrix avg_same =
        twirl_su2_exact(DensityMatrix::trusted(tensor(
                            s0.projector(), s0.projector())),
                        joint_st);
    const DensityMatrix avg_diff =
        twirl_su2_exact(DensityMatrix::trusted(tensor(
                            s0.projector(), s1.projector())),
                        joint_st);
    const ComplexMatrix proj =
        positive_part_projector(avg_same.matrix() - avg_diff.matrix());

    long correct = 0;
    for (long t = 0; t < n_trials; ++t) {
        SplitMix64 rng(derive_stream(seed, t));
        const bool same = rng.uniform01() < 0.5;
        const Rotation omega = Rotation::haar_random(rng);
        const ComplexMatrix r = collective_rotation(omega, n);
        const ComplexVector joint_view =
            tensor(ComplexVector(r * s0.amplitudes()),
                   ComplexVector(r * (same ? s0 : s1).amplitudes()));
        const double p_plus =
            (joint_view.adjoint() * proj * joint_view)(0).real();
        const bool guessed_same =
            rng.uniform01() < std::clamp(p_plus, 0.0, 1.0);
        if (guessed_same == same) ++correct;
    }

    ReuseDemoResult res;
    res.n_trials = n_trials;
    res.eve_guess_rate = double(correct) / double(n_trials);
    res.advantage = res.eve_guess_rate - 0.5;
    res.sigma = 0.5 / std::sqrt(double(n_trials));
    return res;
}

}  // namespace rftwirl
