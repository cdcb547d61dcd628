// Command-line front end: build Schur transforms, generate and certify
// schemes, emit capacity tables, and run protocol simulations.
//
// Exit codes: 0 success / certification pass, 2 certification failure,
// 3 malformed input or usage error.

#include "rftwirl/adversary.hpp"
#include "rftwirl/certify.hpp"
#include "rftwirl/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace rftwirl;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCertFail = 2;
constexpr int kExitUsage = 3;

int qubit_cap() {
    if (const char* env = std::getenv("RFTWIRL_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw std::invalid_argument("RFTWIRL_MAX_N must be a positive integer");
        return static_cast<int>(v);
    }
    return kDefaultMaxQubits;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void stamp(json& j, bool no_timestamp) {
    if (!no_timestamp) j["generated_at"] = iso8601_now();
}

std::string spin_label(int two_j) {
    if (two_j % 2 == 0) return std::to_string(two_j / 2);
    return std::to_string(two_j) + "/2";
}

// ---------------------------------------------------------------------------
// schur

int cmd_schur(int n, const std::string& out, const std::string& format) {
    const SchurTransform st = build_schur_transform(n, qubit_cap());

    const std::string prefix = out.empty() ? "schur_" + std::to_string(n) : out;
    write_schur_transform(st, prefix);

    if (format == "json") {
        std::cout << schur_header_json(st, prefix + ".rftw").dump(2) << "\n";
    } else {
        std::cout << "n = " << n << ", dim = " << st.dim() << "\n";
        std::cout << "  j      d_R  d_P  offset\n";
        for (const IrrepBlock& b : st.blocks()) {
            std::ostringstream row;
            row << "  " << spin_label(b.label.two_j);
            std::cout << row.str() << std::string(7 - row.str().size() + 2, ' ')
                      << b.d_R << "    " << b.d_P << "    " << b.offset << "\n";
        }
        std::cout << "wrote " << prefix << ".json and " << prefix << ".rftw\n";
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// scheme generate / certify

json generate_scheme_json(const std::string& construction, int n,
                          double jmin, const std::string& srf_name) {
    const int cap = qubit_cap();
    if (construction == "tetrahedron") return classical_scheme_to_json(tetrahedron_states());
    if (construction == "octet") return classical_scheme_to_json(three_qubit_octet());
    if (construction == "su2-classical") {
        const int two_j_min = static_cast<int>(std::lround(2.0 * jmin));
        const SchurTransform st = build_schur_transform(n, cap);
        return classical_scheme_to_json(su2_classical_scheme(n, two_j_min, st));
    }
    if (construction == "perm-classical") {
        const SchurTransform st = build_schur_transform(n, cap);
        return classical_scheme_to_json(perm_classical_scheme(n, st));
    }
    if (construction == "both-classical") {
        const SchurTransform st = build_schur_transform(n, cap);
        return classical_scheme_to_json(both_private_classical_scheme(n, st));
    }
    if (construction == "quantum-su2" || construction == "quantum-perm" ||
        construction == "quantum-both") {
        const SrfKind srf = srf_kind_from_string(construction.substr(8));
        const SchurTransform st = build_schur_transform(n, cap);
        return quantum_scheme_to_json(quantum_scheme(n, srf, st));
    }
    if (construction == "broken-basis")
        return classical_scheme_to_json(
            broken_basis_scheme(n, srf_kind_from_string(srf_name)));
    throw std::invalid_argument("unknown construction: " + construction);
}

int cmd_scheme_generate(const std::string& construction, int n, double jmin,
                        const std::string& srf_name, const std::string& out,
                        bool no_timestamp) {
    json j = generate_scheme_json(construction, n, jmin, srf_name);
    stamp(j, no_timestamp);
    const std::string text = j.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else {
        write_text_file(out, text);
        std::cout << "wrote " << out << " (" << j.value("type", "classical")
                  << ", " << j.at("construction").get<std::string>() << ")\n";
    }
    return kExitPass;
}

int cmd_scheme_certify(const std::string& in, double tol, std::uint64_t seed,
                       const std::string& out, const std::string& format,
                       bool no_timestamp) {
    const json j = read_json_file(in);
    CertOptions opts;
    opts.tol = tol;
    opts.tol_holevo = 10.0 * tol;
    opts.seed = seed;

    CertReport rep;
    if (scheme_file_type(j) == "quantum") {
        const QuantumScheme s = quantum_scheme_from_json(j);
        const SchurTransform st = build_schur_transform(s.n_qubits, qubit_cap());
        rep = certify_quantum(s, st, opts);
    } else {
        const ClassicalScheme s = classical_scheme_from_json(j);
        const SchurTransform st = build_schur_transform(s.n_qubits, qubit_cap());
        rep = certify_classical(s, st, opts);
    }

    json rj = rep.to_json();
    stamp(rj, no_timestamp);
    if (!out.empty()) write_text_file(out, rj.dump(2) + "\n");
    if (format == "json") {
        std::cout << rj.dump(2) << "\n";
    } else {
        std::cout << rep.scheme_id << ": " << (rep.passed ? "PASS" : "FAIL")
                  << "  orth=" << rep.orthogonality_defect
                  << "  privacy=" << rep.privacy_defect
                  << "  rho0=" << rep.rho0_residual
                  << "  holevo=" << rep.holevo_bits
                  << "  size=" << rep.scheme_size << "/" << rep.bound_used
                  << "\n";
    }
    return rep.passed ? kExitPass : kExitCertFail;
}

// ---------------------------------------------------------------------------
// capacity

int cmd_capacity(int n_min, int n_max, const std::string& out,
                 const std::string& format, bool no_timestamp) {
    const auto rows = capacity_table(n_min, n_max, qubit_cap());
    json j;
    j["rows"] = capacity_rows_to_json(rows);
    stamp(j, no_timestamp);
    if (!out.empty()) write_text_file(out, j.dump(2) + "\n");

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return kExitPass;
    }
    // One row per N: quantum/classical per SRF kind, then the classical
    // counting bounds. '*' marks finite-N values below the large-N rate.
    std::cout << "N    su2-q     su2-c     perm-q    perm-c    both-q    "
                 "both-c    bound(su2/perm/both)\n";
    for (size_t i = 0; i < rows.size(); i += 3) {
        const CapacityRow &su2 = rows[i], &perm = rows[i + 1],
                          &both = rows[i + 2];
        const auto cell = [](double v, bool below) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%.3f%s", v, below ? "*" : " ");
            return std::string(buf) + std::string(10 - std::min<size_t>(
                                                           10, strlen(buf)),
                                                  ' ');
        };
        std::cout << su2.n_qubits << (su2.n_qubits < 10 ? "    " : "   ")
                  << cell(su2.quantum_qubits, su2.below_asym_quantum())
                  << cell(su2.classical_cbits, su2.below_asym_classical())
                  << cell(perm.quantum_qubits, perm.below_asym_quantum())
                  << cell(perm.classical_cbits, perm.below_asym_classical())
                  << cell(both.quantum_qubits, both.below_asym_quantum())
                  << cell(both.classical_cbits, both.below_asym_classical())
                  << su2.bound << "/" << perm.bound << "/" << both.bound
                  << "\n";
    }
    std::cout << "(* below the large-N rate for this SRF kind)\n";
    return kExitPass;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const std::string& in, long trials, std::uint64_t seed,
                 const std::string& strategy, int pair_a, int pair_b,
                 int reuse_frame, bool allow_uncertified,
                 const std::string& out, bool no_timestamp) {
    const json j = read_json_file(in);
    if (scheme_file_type(j) != "classical")
        throw std::invalid_argument("simulate expects a classical scheme file");
    const ClassicalScheme scheme = classical_scheme_from_json(j);
    const SchurTransform st = build_schur_transform(scheme.n_qubits, qubit_cap());

    const CertReport cert = certify_classical(scheme, st);
    if (!cert.passed && !allow_uncertified) {
        std::cerr << "scheme failed certification: " << cert.scheme_id
                  << " (privacy defect " << cert.privacy_defect << ")\n"
                  << "pass --allow-uncertified to simulate it anyway\n";
        return kExitCertFail;
    }

    const std::string prefix = out.empty() ? "simulation" : out;

    if (reuse_frame == 2) {
        const ReuseDemoResult res = run_reuse_demo(scheme, trials, seed, qubit_cap());
        json summary;
        summary["scheme_id"] = scheme_id(scheme);
        summary["mode"] = "reuse-frame";
        summary["reuse"] = res.to_json();
        summary["certified"] = cert.passed;
        stamp(summary, no_timestamp);
        write_text_file(prefix + ".summary.json", summary.dump(2) + "\n");
        std::cout << "frame reuse: eve guess rate "  << res.eve_guess_rate
                  << " (advantage " << res.advantage << ", sigma "
                  << res.sigma << ") over " << res.n_trials << " trials\n"
                  << "wrote " << prefix << ".summary.json\n";
        return kExitPass;
    }

    ProtocolOptions opts;
    opts.n_trials = trials;
    opts.seed = seed;
    opts.strategy = (strategy == "fixed") ? EveStrategy::FixedMeasurement
                                          : EveStrategy::HelstromPairwise;
    opts.pair_a = pair_a;
    opts.pair_b = pair_b;
    opts.require_certified = false;  // already checked above
    const ProtocolRun run = run_protocol(scheme, st, opts);

    std::ostringstream transcript;
    for (const TrialRecord& rec : run.trials) {
        json line = {{"trial", rec.trial},
                     {"sent", rec.sent},
                     {"bob", rec.bob},
                     {"eve", rec.eve}};
        transcript << line.dump() << "\n";
    }
    write_text_file(prefix + ".transcript.jsonl", transcript.str());

    json summary = run.summary_json();
    summary["certified"] = cert.passed;
    stamp(summary, no_timestamp);
    write_text_file(prefix + ".summary.json", summary.dump(2) + "\n");

    std::cout << "bob success rate: " << run.bob_success_rate << "\n"
              << "eve pair guess rate: " << run.eve_pair_guess_rate << " over "
              << run.pair_trials << " pair trials\n"
              << "wrote " << prefix << ".transcript.jsonl and " << prefix
              << ".summary.json\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-structure twirls and private communication schemes "
                 "over N qubits"};
    app.require_subcommand(1);

    // schur
    auto* schur = app.add_subcommand("schur", "build and export a Schur transform");
    int schur_n = 2;
    std::string schur_out, schur_format = "text";
    schur->add_option("--n", schur_n, "number of qubits")->required();
    schur->add_option("--out", schur_out, "output prefix");
    schur->add_option("--format", schur_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));

    // scheme generate | certify
    auto* scheme = app.add_subcommand("scheme", "generate or certify schemes");
    scheme->require_subcommand(1);

    auto* gen = scheme->add_subcommand("generate", "construct a scheme file");
    std::string gen_construction, gen_srf = "su2", gen_out;
    int gen_n = 2;
    double gen_jmin = 0.0;
    bool gen_no_ts = false;
    gen->add_option("--construction", gen_construction,
                    "tetrahedron | octet | su2-classical | perm-classical | "
                    "both-classical | quantum-su2 | quantum-perm | "
                    "quantum-both | broken-basis")
        ->required();
    gen->add_option("--n", gen_n, "number of qubits");
    gen->add_option("--jmin", gen_jmin, "lowest spin sector (su2-classical)");
    gen->add_option("--srf", gen_srf, "SRF kind for broken-basis")
        ->check(CLI::IsMember({"su2", "perm", "both"}));
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");
    gen->add_flag("--no-timestamp", gen_no_ts, "omit the timestamp field");

    auto* cert = scheme->add_subcommand("certify", "certify a scheme file");
    std::string cert_in, cert_out, cert_format = "text";
    double cert_tol = 1e-10;
    std::uint64_t cert_seed = 0x52465457u;
    bool cert_no_ts = false;
    cert->add_option("--in", cert_in, "scheme file")->required();
    cert->add_option("--tol", cert_tol, "certification tolerance");
    cert->add_option("--seed", cert_seed, "seed for random probe states");
    cert->add_option("--out", cert_out, "report file");
    cert->add_option("--format", cert_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    cert->add_flag("--no-timestamp", cert_no_ts, "omit the timestamp field");

    // capacity
    auto* cap = app.add_subcommand("capacity", "emit the finite-N capacity table");
    int cap_min = 1, cap_max = 8;
    std::string cap_out, cap_format = "text";
    bool cap_no_ts = false;
    cap->add_option("--n-min", cap_min, "smallest N");
    cap->add_option("--n-max", cap_max, "largest N");
    cap->add_option("--out", cap_out, "JSON output file");
    cap->add_option("--format", cap_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    cap->add_flag("--no-timestamp", cap_no_ts, "omit the timestamp field");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the protocol simulation");
    std::string sim_in, sim_out, sim_strategy = "helstrom";
    long sim_trials = 10000;
    std::uint64_t sim_seed = 1;
    int sim_pair_a = 0, sim_pair_b = 1, sim_reuse = 1;
    bool sim_allow = false, sim_no_ts = false;
    sim->add_option("--in", sim_in, "classical scheme file")->required();
    sim->add_option("--trials", sim_trials, "number of trials");
    sim->add_option("--seed", sim_seed, "simulation seed");
    sim->add_option("--strategy", sim_strategy, "eavesdropper strategy")
        ->check(CLI::IsMember({"helstrom", "fixed"}));
    sim->add_option("--pair-a", sim_pair_a, "designated message a");
    sim->add_option("--pair-b", sim_pair_b, "designated message b");
    sim->add_option("--reuse-frame", sim_reuse,
                    "2 = send two messages under one frame (demo)")
        ->check(CLI::IsMember({1, 2}));
    sim->add_flag("--allow-uncertified", sim_allow,
                  "simulate even if certification fails");
    sim->add_option("--out", sim_out, "output prefix");
    sim->add_flag("--no-timestamp", sim_no_ts, "omit the timestamp field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (schur->parsed()) return cmd_schur(schur_n, schur_out, schur_format);
        if (gen->parsed())
            return cmd_scheme_generate(gen_construction, gen_n, gen_jmin,
                                       gen_srf, gen_out, gen_no_ts);
        if (cert->parsed())
            return cmd_scheme_certify(cert_in, cert_tol, cert_seed, cert_out,
                                      cert_format, cert_no_ts);
        if (cap->parsed())
            return cmd_capacity(cap_min, cap_max, cap_out, cap_format,
                                cap_no_ts);
        if (sim->parsed())
            return cmd_simulate(sim_in, sim_trials, sim_seed, sim_strategy,
                                sim_pair_a, sim_pair_b, sim_reuse, sim_allow,
                                sim_out, sim_no_ts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
