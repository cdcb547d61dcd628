// File formats. Matrices travel either in a small binary format (magic
// "RFTW", version 1, little-endian u32 rows/cols, row-major f64 re/im
// pairs) or as the JSON mirror {"rows":r,"cols":c,"re":[...],"im":[...]}.
// Scheme files are JSON and round-trip bit-exactly.
#pragma once

#include "rftwirl/schemes.hpp"

#include <json.hpp>

#include <string>

namespace rftwirl {

void write_matrix_bin(const ComplexMatrix& m, const std::string& path);
ComplexMatrix read_matrix_bin(const std::string& path);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json ket_to_json(const Ket& k);  // {"re":[...],"im":[...]}
Ket ket_from_json(const nlohmann::json& j);

nlohmann::json classical_scheme_to_json(const ClassicalScheme& s);
ClassicalScheme classical_scheme_from_json(const nlohmann::json& j);

nlohmann::json quantum_scheme_to_json(const QuantumScheme& s);
QuantumScheme quantum_scheme_from_json(const nlohmann::json& j);

/// "classical" or "quantum"; schemes without a type field are classical.
std::string scheme_file_type(const nlohmann::json& j);

/// Header {n_qubits, blocks, path_labels, unitary_file}; the unitary goes
/// to <prefix>.rftw in the binary format.
nlohmann::json schur_header_json(const SchurTransform& st,
                                 const std::string& unitary_file);
void write_schur_transform(const SchurTransform& st,
                           const std::string& prefix);

nlohmann::json capacity_rows_to_json(const std::vector<CapacityRow>& rows);

void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);

}  // namespace rftwirl
