// JSON encodings of the library's values.
#pragma once

#include "kmw/characters.hpp"
#include "kmw/hull.hpp"
#include "kmw/weight_sets.hpp"

#include <json.hpp>

#include <string>

namespace kmw {

using Json = nlohmann::ordered_json;

/// {"name": optional string, "matrix": [[int]]}
GeneralizedCartanMatrix gcm_from_json(const Json& doc);
Json gcm_to_json(const GeneralizedCartanMatrix& gcm);

/// One {"root", "mult", "real"} object per line, sorted by (height, lex).
std::string roots_to_jsonl(const RootDatum& roots);

/// {"c": ["p/q", ...], "m": ["p/q", ...]}
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& doc);

Json word_to_json(const WeylWord& w);
Json rationals_to_json(const QVec& v);
Json index_set_to_json(const IndexSet& s);

/// {"basepoint": [...], "cutoff": N, "offsets": [[int]]}
Json weight_set_to_json(const WeightSet& s);
WeightSet weight_set_from_json(const Json& doc);

/// [{"offset": [int], "coeff": int}, ...]
Json series_to_json(const FormalSeries& s);

/// {"vertices": [[int]], "rays": [[int]], "truncated": bool}
Json hull_to_json(const HullPresentation& h);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace kmw
