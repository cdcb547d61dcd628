#include "rftwirl/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "binary matrix format assumes a little-endian host");

namespace rftwirl {

namespace {

constexpr char kMagic[4] = {'R', 'F', 'T', 'W'};
constexpr std::uint8_t kVersion = 1;

void fail(const std::string& msg) { throw std::runtime_error(msg); }

template <typename T>
void write_raw(std::ostream& os, const T& value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::istream& is) {
    T value{};
    is.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!is) fail("matrix file truncated");
    return value;
}

}  // namespace

void write_matrix_bin(const ComplexMatrix& m, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail("cannot open for writing: " + path);
    os.write(kMagic, 4);
    write_raw(os, kVersion);
    write_raw(os, static_cast<std::uint32_t>(m.rows()));
    write_raw(os, static_cast<std::uint32_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            write_raw(os, m(r, c).real());
            write_raw(os, m(r, c).imag());
        }
    if (!os) fail("write failed: " + path);
}

ComplexMatrix read_matrix_bin(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail("cannot open for reading: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        fail("bad magic in matrix file: " + path);
    if (read_raw<std::uint8_t>(is) != kVersion)
        fail("unsupported matrix file version: " + path);
    const auto rows = read_raw<std::uint32_t>(is);
    const auto cols = read_raw<std::uint32_t>(is);
    ComplexMatrix m(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            const double re = read_raw<double>(is);
            const double im = read_raw<double>(is);
            m(r, c) = Complex(re, im);
        }
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    std::vector<double> re, im;
    re.reserve(m.size());
    im.reserve(m.size());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (rows < 0 || cols < 0 ||
        re.size() != static_cast<size_t>(rows * cols) || im.size() != re.size())
        fail("matrix JSON: entry count does not match rows x cols");
    ComplexMatrix m(rows, cols);
    size_t idx = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c, ++idx)
            m(r, c) = Complex(re[idx], im[idx]);
    return m;
}

nlohmann::json ket_to_json(const Ket& k) {
    std::vector<double> re, im;
    for (Eigen::Index i = 0; i < k.dim(); ++i) {
        re.push_back(k.amplitudes()(i).real());
        im.push_back(k.amplitudes()(i).imag());
    }
    return {{"re", re}, {"im", im}};
}

Ket ket_from_json(const nlohmann::json& j) {
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size() || re.empty())
        fail("ket JSON: re/im length mismatch");
    ComplexVector v(re.size());
    for (size_t i = 0; i < re.size(); ++i) v(i) = Complex(re[i], im[i]);
    return Ket::from_vector(std::move(v));
}

nlohmann::json classical_scheme_to_json(const ClassicalScheme& s) {
    nlohmann::json states = nlohmann::json::array();
    for (const Ket& k : s.states) states.push_back(ket_to_json(k));
    return {{"type", "classical"},
            {"n", s.n_qubits},
            {"superop", to_string(s.srf)},
            {"construction", s.construction},
            {"params", s.params},
            {"states", states},
            {"rho0", matrix_to_json(s.claimed_rho0.matrix())}};
}

ClassicalScheme classical_scheme_from_json(const nlohmann::json& j) {
    ClassicalScheme s;
    s.n_qubits = j.at("n").get<int>();
    if (s.n_qubits < 1) fail("scheme JSON: n must be positive");
    s.srf = srf_kind_from_string(j.at("superop").get<std::string>());
    s.construction = j.value("construction", std::string("unnamed"));
    s.params = j.value("params", nlohmann::json::object());
    for (const auto& kj : j.at("states")) s.states.push_back(ket_from_json(kj));
    if (s.states.empty()) fail("scheme JSON: no states");
    const int dim = 1 << s.n_qubits;
    for (const Ket& k : s.states)
        if (k.dim() != dim) fail("scheme JSON: state dimension != 2^n");
    s.claimed_rho0 =
        DensityMatrix::from_matrix(matrix_from_json(j.at("rho0")));
    return s;
}

nlohmann::json quantum_scheme_to_json(const QuantumScheme& s) {
    return {{"type", "quantum"},
            {"n", s.n_qubits},
            {"superop", to_string(s.srf)},
            {"construction", s.construction},
            {"logical_dim", s.logical_dim},
            {"isometry", matrix_to_json(s.encode_isometry)},
            {"target_block",
             {{"two_j", s.target_block.label.two_j},
              {"d_R", s.target_block.d_R},
              {"d_P", s.target_block.d_P},
              {"offset", s.target_block.offset}}},
            {"ancilla_m_index", s.ancilla_m_index},
            {"rho0", matrix_to_json(s.claimed_rho0.matrix())}};
}

QuantumScheme quantum_scheme_from_json(const nlohmann::json& j) {
    QuantumScheme s;
    s.n_qubits = j.at("n").get<int>();
    if (s.n_qubits < 1) fail("scheme JSON: n must be positive");
    s.srf = srf_kind_from_string(j.at("superop").get<std::string>());
    s.construction = j.value("construction", std::string("unnamed"));
    s.logical_dim = j.at("logical_dim").get<int>();
    s.encode_isometry = matrix_from_json(j.at("isometry"));
    if (s.encode_isometry.rows() != (1 << s.n_qubits) ||
        s.encode_isometry.cols() != s.logical_dim)
        fail("scheme JSON: isometry shape mismatch");
    const auto& tb = j.at("target_block");
    s.target_block.label =
        IrrepLabel{tb.at("two_j").get<int>(), s.n_qubits};
    s.target_block.d_R = tb.at("d_R").get<int>();
    s.target_block.d_P = tb.at("d_P").get<int>();
    s.target_block.offset = tb.at("offset").get<int>();
    s.ancilla_m_index = j.value("ancilla_m_index", -1);
    s.claimed_rho0 =
        DensityMatrix::from_matrix(matrix_from_json(j.at("rho0")));
    return s;
}

std::string scheme_file_type(const nlohmann::json& j) {
    return j.value("type", std::string("classical"));
}

nlohmann::json schur_header_json(const SchurTransform& st,
                                 const std::string& unitary_file) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const IrrepBlock& b : st.blocks())
        blocks.push_back({{"two_j", b.label.two_j},
                          {"d_R", b.d_R},
                          {"d_P", b.d_P},
                          {"offset", b.offset}});
    return {{"n_qubits", st.n_qubits()},
            {"blocks", blocks},
            {"path_labels", st.path_labels()},
            {"unitary_file", unitary_file}};
}

void write_schur_transform(const SchurTransform& st,
                           const std::string& prefix) {
    const std::string bin = prefix + ".rftw";
    write_matrix_bin(st.unitary(), bin);
    std::string base = bin;
    const auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    write_text_file(prefix + ".json",
                    schur_header_json(st, base).dump(2) + "\n");
}

nlohmann::json capacity_rows_to_json(const std::vector<CapacityRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const CapacityRow& r : rows)
        out.push_back({{"n", r.n_qubits},
                       {"srf", to_string(r.srf)},
                       {"quantum_qubits", r.quantum_qubits},
                       {"classical_cbits", r.classical_cbits},
                       {"quantum_dim", r.quantum_dim},
                       {"classical_count", r.classical_count},
                       {"bound", r.bound},
                       {"asym_quantum_qubits", r.asym_quantum_qubits},
                       {"asym_classical_cbits", r.asym_classical_cbits},
                       {"below_asymptotic",
                        {{"quantum", r.below_asym_quantum()},
                         {"classical", r.below_asym_classical()}}}});
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) fail("cannot open for writing: " + path);
    os << content;
    if (!os) fail("write failed: " + path);
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) fail("cannot open for reading: " + path);
    nlohmann::json j;
    is >> j;
    return j;
}

}  // namespace rftwirl
