#include "lcs/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lcs {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ExactScalar& x) {
  if (auto q = x.rational_value()) return to_string(*q);
  Json terms = Json::array();
  for (const auto& [k, q] : x.terms())
    terms.push_back({{"coeff", to_string(q)}, {"radicand", k}});
  return terms;
}

ExactScalar exact_scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return ExactScalar(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) {
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw input_error("scalar: cannot parse '" + j.get<std::string>() + "' as p/q");
    return ExactScalar(*q);
  }
  if (j.is_array()) {
    ExactScalar x;
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("radicand"))
        throw input_error("scalar: term must be {\"coeff\": \"p/q\", \"radicand\": k}");
      auto q = t["coeff"].is_string() ? parse_rational(t["coeff"].get<std::string>())
                                      : std::optional<Rational>(Rational(t["coeff"].get<long long>()));
      if (!q) throw input_error("scalar: bad coefficient in term list");
      long long k = t["radicand"].get<long long>();
      if (k < 0) throw input_error("scalar: negative radicand");
      x += ExactScalar::sqrt_of(k, *q);
    }
    return x;
  }
  throw input_error("scalar: expected integer, \"p/q\" string, or term list");
}

Json to_json(const VectorSystem& s) {
  Json gram = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(to_json(s.entry(i, j)));
    gram.push_back(row);
  }
  return Json{{"labels", s.labels()}, {"gram", gram}};
}

VectorSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw input_error("system: missing \"gram\"");
  const Json& gram = j["gram"];
  if (!gram.is_array()) throw input_error("system: \"gram\" must be an array of rows");
  Mat<ExactScalar> m;
  for (const auto& row : gram) {
    if (!row.is_array()) throw input_error("system: Gram rows must be arrays");
    Vec<ExactScalar> r;
    for (const auto& e : row) r.push_back(exact_scalar_from_json(e));
    m.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  return VectorSystem(std::move(m), std::move(labels));
}

VectorSystem system_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n < 0) throw input_error("system text: expected size on the first line");
  Mat<ExactScalar> m(n, Vec<ExactScalar>(n, ExactScalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      std::string tok;
      if (!(in >> tok)) throw input_error("system text: too few entries");
      auto q = parse_rational(tok);
      if (!q) throw input_error("system text: cannot parse entry '" + tok + "'");
      m[i][j] = ExactScalar(*q);
      m[j][i] = m[i][j];
    }
  return VectorSystem(std::move(m));
}

std::string system_to_text(const VectorSystem& s) {
  std::ostringstream out;
  out << s.size() << "\n";
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j <= i; ++j) {
      auto q = s.entry(i, j).rational_value();
      if (!q) throw domain_error("system text: radical entries have no text form, use JSON");
      out << to_string(*q) << (j == i ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

ResolutionGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("self_intersections"))
    throw input_error("graph: missing \"self_intersections\"");
  ResolutionGraph g;
  for (const auto& v : j["self_intersections"]) g.self_intersections.push_back(v.get<long long>());
  const int n = g.size();
  g.meets.assign(n, std::vector<long long>(n, 0));
  if (j.contains("meets")) {
    for (const auto& m : j["meets"]) {
      if (!m.is_array() || m.size() != 3) throw input_error("graph: meets entries are [i, j, mult]");
      long long a = m[0].get<long long>(), b = m[1].get<long long>(), mult = m[2].get<long long>();
      if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw input_error("graph: meets indices are 1-based component numbers");
      g.meets[a - 1][b - 1] = mult;
      g.meets[b - 1][a - 1] = mult;
    }
  }
  return g;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace lcs
