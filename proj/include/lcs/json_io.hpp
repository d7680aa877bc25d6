#ifndef LCS_JSON_IO_HPP
#define LCS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "lcs/surface.hpp"
#include "lcs/system.hpp"

namespace lcs {

using Json = nlohmann::json;

// Scalars serialize as "p/q" when rational and as a term list
// [{"coeff": "p/q", "radicand": k}, ...] otherwise. Parsing also accepts
// plain JSON integers.
Json to_json(const ExactScalar& x);
ExactScalar exact_scalar_from_json(const Json& j);

Json to_json(const Rational& q);

// {"labels": [...], "gram": [[entry, ...], ...]}
Json to_json(const VectorSystem& s);
VectorSystem system_from_json(const Json& j);

// Terse text form: first line n, then the lower triangle row by row.
VectorSystem system_from_text(const std::string& text);
std::string system_to_text(const VectorSystem& s);

// {"self_intersections": [...], "meets": [[i, j, mult], ...]} (1-based pairs)
ResolutionGraph graph_from_json(const Json& j);

// Reads a whole file or stdin when path is "-".
std::string read_input(const std::string& path);

}  // namespace lcs

#endif
