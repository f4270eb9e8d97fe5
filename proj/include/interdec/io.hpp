#pragma once

// JSON documents for posets, projector families, measures and split functors.
//
// Rationals are strings ("p/q" or "p"); integers are accepted on input.
// Matrices are row-major lists of rows. Output uses ordered objects so that the
// same value always serializes to the same bytes.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "interdec/factor_spaces.hpp"
#include "interdec/linalg.hpp"
#include "interdec/poset.hpp"
#include "interdec/projectors.hpp"
#include "interdec/split_functors.hpp"

namespace interdec {

using Json = nlohmann::ordered_json;

/// Parses text, throwing ParseError with the parser's position on failure.
Json parse_json(const std::string& text);
Json load_json_file(const std::filesystem::path& path);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const RatMatrix& m);
/// Checks the shape against rows x cols.
RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// {"elements": [...], "leq": [[lo, hi], ...]}; output lists covering pairs.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

/// {"poset": ..., "dim": n, "projectors": {name: matrix}}.
Json family_to_json(const ProjectorFamily& f);
ProjectorFamily family_from_json(const Json& j);

/// {"factors": {name: size}, "weights": {"v1,v2,...": rat}}; missing keys weigh 0.
Json measure_to_json(const Measure& m);
Measure measure_from_json(const Json& j);

/// {"poset": ..., "dims": {name: n}, "G": {"b<=a": M}, "F": {"a=>b": M}} with
/// covering generators only.
Json split_to_json(const SplitFunctor& sf);
SplitFunctor split_from_json(const Json& j);

}  // namespace interdec
