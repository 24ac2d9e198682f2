#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cliffrad/clifford.hpp"
#include "cliffrad/mvpoly.hpp"

namespace cliffrad {

using json = nlohmann::ordered_json;

/// {"m": int, "terms": [{"blade": [..], "re": x, "im": y}]}
json to_json(const Multivector& a);
Multivector multivector_from_json(const json& j);

/// {"m": int, "terms": [{"exp": [..], "mv": {...}}]}. An "nvars" key is written
/// for multi-block polynomials; on input it defaults to the exponent length.
json to_json(const MVPolynomial& p);
MVPolynomial polynomial_from_json(const json& j);

/// {"t": [..], "s": [..]}
json to_json(const NullFrame& f);
NullFrame frame_from_json(const json& j);

struct ResultMetadata {
  std::string mode;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double stderr_max = 0.0;
};

json to_json(const ResultMetadata& meta);

/// Parses `text` as JSON, or reads and parses the file it names when it does
/// not start with '{' or '['.
json load_json_argument(const std::string& text);

}  // namespace cliffrad
