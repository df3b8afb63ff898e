#pragma once

#include <string>

#include "pirlrc/pir_general.hpp"

namespace pirlrc {

/// Field from its order: q = p^m with p prime; extension fields must be in
/// the modulus table.
Field field_from_order(std::uint32_t q);

/// Normative matrix text format: line 1 "q rows cols", then `rows` lines of
/// `cols` space-separated integer-encoded elements.
std::string serialize_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text);

/// "code n k q" header followed by generator and parity-check blocks.
std::string serialize_code(const LinearCode& c);
LinearCode parse_code(const std::string& text);

/// "gcode n q count" + one codeword per line + one repair line per
/// coordinate: "i | group | lookup outputs in packed-key order" with "-"
/// marking keys that never occur on the code.
std::string serialize_general(const GeneralLrc& lrc);
GeneralLrc parse_general(const std::string& text);

/// Permutation as K space-separated 1-based images, or the literal "const".
std::string serialize_query(const PirQuery& q);
PirQuery parse_query(const std::string& text, std::size_t K);

std::string serialize_answer(const PirAnswer& a);
PirAnswer parse_answer(const std::string& text, const Field& field);

/// Database file: line 1 "q K", line 2 K space-separated values.
std::string serialize_database(const Field& field, const Vec& x);
std::pair<Field, Vec> parse_database(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pirlrc
