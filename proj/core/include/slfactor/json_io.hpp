#pragma once

#include <string>

#include "slfactor/linalg.hpp"

namespace slf {

/// Matrix files: {"format_version": 1, "field": "q"|"gf:<p>", "n": int,
/// "vars": [names], "entries": [[poly-string, ...], ...]}.
/// Factorization files: {"format_version": 1, "field": ..., "n": int,
/// "vars": [names], "factors": [{"i": int, "j": int, "a": poly-string}, ...]},
/// product taken left to right. The "field" and "vars" keys are written
/// always; on input, a missing "field" defaults to the caller's field.
std::string matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const std::string& text, const Field& default_field);

std::string factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const std::string& text, const Field& default_field);

} // namespace slf
