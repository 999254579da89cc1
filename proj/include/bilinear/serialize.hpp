#pragma once

#include <string>
#include <string_view>

#include "bilinear/structures.hpp"
#include "bilinear/tensor_lab.hpp"

namespace bilinear {

/*!
 * JSON formats.
 *
 * Matrix: {"kind", "n", "data": [[re, im], ...]} plus "f" (f_circulant),
 * "omega": [[i, j], ...] (sparse) or "levels": [{"kind", "n", ...}, ...]
 * (multilevel). Vector: {"n", "data"}. Decomposition: {"dims": [d1, d2, d3],
 * "terms": [{"lambda", "u", "v", "w"}]}.
 *
 * Parsed data are Variables. Errors are SchemaError with the byte offset of a
 * syntax error or the JSON pointer of the offending value.
 */

StructuredMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(StructuredMatrix const& m);

TrackedVector parse_vector(std::string_view text);
std::string serialize_vector(TrackedSpan v);

TensorDecomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(TensorDecomposition const& d);

}  // namespace bilinear
