#include "lcs/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "lcs/log_canonical.hpp"

namespace lcs {

// ---------------------------------------------------------------------------
// Expression evaluation
// ---------------------------------------------------------------------------

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;
  const std::map<std::string, long long>& vars;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw input_error("expression '" + text + "': " + why);
  }

  ExactScalar parse_expr() {
    ExactScalar v = parse_term();
    while (true) {
      if (eat('+')) v += parse_term();
      else if (eat('-')) v -= parse_term();
      else return v;
    }
  }

  ExactScalar parse_term() {
    ExactScalar v = parse_factor();
    while (true) {
      if (eat('*')) v *= parse_factor();
      else if (eat('/')) {
        ExactScalar d = parse_factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  ExactScalar parse_factor() {
    skip_ws();
    if (eat('-')) return -parse_factor();
    if (eat('(')) {
      ExactScalar v = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos >= text.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      long long n = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        n = n * 10 + (text[pos++] - '0');
      return ExactScalar(n);
    }
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        name += text[pos++];
      if (name == "sqrt") {
        if (!eat('(')) fail("sqrt needs '('");
        ExactScalar arg = parse_expr();
        if (!eat(')')) fail("missing ')' after sqrt");
        auto q = arg.rational_value();
        if (!q || !is_integer(*q) || *q < 0) fail("sqrt needs a nonnegative integer argument");
        return ExactScalar::sqrt_of(numerator(*q).convert_to<long long>());
      }
      auto it = vars.find(name);
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      return ExactScalar(it->second);
    }
    fail(std::string("unexpected character '") + text[pos] + "'");
  }
};

}  // namespace

ExactScalar eval_expr(const std::string& text, const std::map<std::string, long long>& vars) {
  ExprParser p{text, 0, vars};
  ExactScalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

bool eval_predicate(const std::string& text, const std::map<std::string, long long>& vars) {
  static const char* ops[] = {"<=", ">=", "==", "!=", "<", ">"};
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth != 0) continue;
    for (const char* op : ops) {
      std::size_t len = std::strlen(op);
      if (text.compare(i, len, op) == 0) {
        ExactScalar lhs = eval_expr(text.substr(0, i), vars);
        ExactScalar rhs = eval_expr(text.substr(i + len), vars);
        int s = (lhs - rhs).sign();
        std::string o(op);
        if (o == "<=") return s <= 0;
        if (o == ">=") return s >= 0;
        if (o == "==") return s == 0;
        if (o == "!=") return s != 0;
        if (o == "<") return s < 0;
        return s > 0;
      }
    }
  }
  throw input_error("predicate '" + text + "': no comparison operator");
}

// ---------------------------------------------------------------------------
// Catalog loading
// ---------------------------------------------------------------------------

Catalog Catalog::from_json(const nlohmann::json& j) {
  Catalog cat;
  if (!j.is_object() || !j.contains("families"))
    throw input_error("catalog: missing \"families\"");
  for (const auto& f : j["families"]) {
    CatalogFamily fam;
    fam.id = f.at("id").get<std::string>();
    fam.kind = f.at("kind").get<std::string>();
    if (f.contains("notes")) fam.notes = f["notes"].get<std::string>();
    if (f.contains("ambiguous")) fam.ambiguous = f["ambiguous"].get<bool>();
    if (f.contains("params")) {
      for (const auto& p : f["params"]) {
        ParamSpec spec;
        spec.name = p.at("name").get<std::string>();
        std::string type = p.value("type", "int");
        spec.type = type == "weights" ? ParamSpec::Type::Weights : ParamSpec::Type::Int;
        spec.min = p.value("min", 1LL);
        if (p.contains("max")) spec.max = p["max"].get<long long>();
        if (p.contains("length")) spec.length = p["length"].get<std::string>();
        fam.params.push_back(std::move(spec));
      }
    }
    if (f.contains("tuple_params")) {
      for (const auto& n : f["tuple_params"]) fam.tuple_params.push_back(n.get<std::string>());
      for (const auto& row : f.at("tuples")) {
        std::vector<long long> t;
        for (const auto& v : row) t.push_back(v.get<long long>());
        if (t.size() != fam.tuple_params.size())
          throw input_error("catalog " + fam.id + ": tuple arity mismatch");
        fam.tuples.push_back(std::move(t));
      }
    }
    if (f.contains("constraints"))
      for (const auto& c : f["constraints"]) fam.constraints.push_back(c.get<std::string>());
    if (f.contains("side_conditions"))
      for (const auto& c : f["side_conditions"]) fam.side_conditions.push_back(c.get<std::string>());
    fam.tmpl = f.at("template");
    const auto& cl = f.at("claimed");
    if (cl.contains("exclusion") && cl["exclusion"].get<bool>())
      fam.claimed.non_minimal_when_log_canonical = true;
    if (cl.contains("class")) {
      std::string c = cl["class"].get<std::string>();
      if (c == "elliptic") fam.claimed.cls = SystemClassKind::Elliptic;
      else if (c == "connected_parabolic") fam.claimed.cls = SystemClassKind::ConnectedParabolic;
      else if (c == "hyperbolic") fam.claimed.cls = SystemClassKind::Hyperbolic;
      else throw input_error("catalog " + fam.id + ": unknown class '" + c + "'");
    }
    if (cl.contains("lanner")) fam.claimed.lanner = cl["lanner"].get<bool>();
    if (cl.contains("log_canonical")) fam.claimed.log_canonical = cl["log_canonical"].get<bool>();
    if (cl.contains("minimal")) fam.claimed.minimal = cl["minimal"].get<bool>();
    cat.families_.push_back(std::move(fam));
  }
  return cat;
}

const CatalogFamily* Catalog::find(const std::string& id) const {
  for (const auto& f : families_)
    if (f.id == id) return &f;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Instantiation
// ---------------------------------------------------------------------------

namespace {

long long eval_int(const std::string& expr, const std::map<std::string, long long>& vars) {
  auto v = eval_expr(expr, vars).rational_value();
  if (!v || !is_integer(*v)) throw input_error("expression '" + expr + "' is not an integer");
  return numerator(*v).convert_to<long long>();
}

struct ResolvedParams {
  std::map<std::string, long long> ints;
  std::map<std::string, std::vector<long long>> weight_lists;
};

ResolvedParams resolve_params(const CatalogFamily& fam, const ParamAssignment& a) {
  ResolvedParams out;
  for (const auto& spec : fam.params) {
    auto it = a.find(spec.name);
    if (it == a.end())
      throw input_error("parameter '" + spec.name + "' missing for family " + fam.id);
    if (spec.type == ParamSpec::Type::Int) {
      const long long* v = std::get_if<long long>(&it->second);
      if (!v) throw input_error("parameter '" + spec.name + "' must be an integer");
      if (*v < spec.min || (spec.max && *v > *spec.max))
        throw input_error("parameter violated: " + spec.name + " out of range in family " + fam.id);
      out.ints[spec.name] = *v;
    }
  }
  for (const auto& spec : fam.params) {
    if (spec.type != ParamSpec::Type::Weights) continue;
    auto it = a.find(spec.name);
    if (it == a.end())
      throw input_error("parameter '" + spec.name + "' missing for family " + fam.id);
    const auto* v = std::get_if<std::vector<long long>>(&it->second);
    if (!v) throw input_error("parameter '" + spec.name + "' must be a weight list");
    long long len = eval_int(spec.length, out.ints);
    if (static_cast<long long>(v->size()) != len)
      throw input_error("parameter violated: " + spec.name + " must have length " +
                        std::to_string(len) + " in family " + fam.id);
    for (long long w : *v)
      if (w < spec.min)
        throw input_error("parameter violated: entries of " + spec.name + " must be >= " +
                          std::to_string(spec.min) + " in family " + fam.id);
    out.weight_lists[spec.name] = *v;
  }
  if (!fam.tuple_params.empty()) {
    std::vector<long long> combo;
    for (const auto& name : fam.tuple_params) combo.push_back(out.ints.at(name));
    if (std::find(fam.tuples.begin(), fam.tuples.end(), combo) == fam.tuples.end())
      throw input_error("parameter violated: tuple not in the admissible list of family " + fam.id);
  }
  return out;
}

struct GraphBuild {
  std::vector<ExactScalar> weights;
  std::vector<std::array<long long, 3>> edges;  // a, b, multiplicity

  void edge(long long a, long long b, long long m) { edges.push_back({a, b, m}); }

  VectorSystem finish() const {
    const int n = static_cast<int>(weights.size());
    Mat<ExactScalar> gram(n, Vec<ExactScalar>(n, ExactScalar(0)));
    for (int i = 0; i < n; ++i) gram[i][i] = -weights[i];
    for (const auto& e : edges) {
      gram[e[0]][e[1]] = ExactScalar(e[2]);
      gram[e[1]][e[0]] = ExactScalar(e[2]);
    }
    return VectorSystem(std::move(gram));
  }
};

std::vector<long long> weight_list_of(const ResolvedParams& rp, const nlohmann::json& tmpl) {
  if (tmpl.contains("weights")) {
    return rp.weight_lists.at(tmpl["weights"].get<std::string>());
  }
  long long count = eval_int(tmpl.at("count").get<std::string>(), rp.ints);
  long long w = tmpl.at("weight_const").get<long long>();
  return std::vector<long long>(count, w);
}

VectorSystem build_template(const CatalogFamily& fam, const ResolvedParams& rp) {
  const nlohmann::json& t = fam.tmpl;
  std::string type = t.at("type").get<std::string>();
  GraphBuild g;

  auto push_weights = [&](const std::vector<long long>& ws) {
    for (long long w : ws) g.weights.push_back(ExactScalar(w));
  };

  if (type == "matrix") {
    Mat<ExactScalar> m;
    for (const auto& row : t.at("entries")) {
      Vec<ExactScalar> r;
      for (const auto& e : row) r.push_back(eval_expr(e.get<std::string>(), rp.ints));
      m.push_back(std::move(r));
    }
    return VectorSystem(std::move(m));
  }
  if (type == "explicit") {
    for (const auto& w : t.at("weights")) {
      ExactScalar v = eval_expr(w.get<std::string>(), rp.ints);
      g.weights.push_back(v);
    }
    for (const auto& e : t.at("edges"))
      g.edge(e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>());
    return g.finish();
  }
  if (type == "chain") {
    push_weights(weight_list_of(rp, t));
    for (std::size_t i = 0; i + 1 < g.weights.size(); ++i) g.edge(i, i + 1, 1);
    return g.finish();
  }
  if (type == "cycle") {
    push_weights(weight_list_of(rp, t));
    const long long n = static_cast<long long>(g.weights.size());
    if (n < 3) throw input_error("cycle template needs at least 3 vertices");
    for (long long i = 0; i < n; ++i) g.edge(i, (i + 1) % n, 1);
    return g.finish();
  }
  if (type == "tstar") {
    auto ws = rp.weight_lists.at(t.at("weights").get<std::string>());
    std::vector<long long> arms;
    for (const auto& a : t.at("arms")) arms.push_back(rp.ints.at(a.get<std::string>()));
    push_weights(ws);
    long long idx = 1;
    for (long long arm : arms) {
      long long prev = 0;
      for (long long k = 0; k < arm; ++k) {
        g.edge(prev, idx, 1);
        prev = idx++;
      }
    }
    return g.finish();
  }
  if (type == "star") {
    long long rays = t.at("rays").get<long long>();
    g.weights.push_back(eval_expr(t.at("center").get<std::string>(), rp.ints));
    for (long long i = 0; i < rays; ++i) {
      g.weights.push_back(eval_expr(t.at("leaf").get<std::string>(), rp.ints));
      g.edge(0, i + 1, 1);
    }
    return g.finish();
  }
  if (type == "forkfork" || type == "forkfork_tail") {
    // "count" names the number of middle vertices; the two junctions are
    // always present on top of it
    std::vector<long long> inner;
    if (t.contains("weights")) {
      inner = rp.weight_lists.at(t["weights"].get<std::string>());
    } else {
      long long mids = eval_int(t.at("count").get<std::string>(), rp.ints);
      long long cw = t.value("weight_const", 2LL);
      inner.assign(mids + 2, cw);
    }
    if (inner.size() < 2) throw input_error("forked chain needs two junction vertices");
    const long long mids = static_cast<long long>(inner.size()) - 2;
    // order: leafA1, leafA2, juncA, mids..., juncB, leafB1, leafB2 (+ tail)
    g.weights.push_back(ExactScalar(2));
    g.weights.push_back(ExactScalar(2));
    for (long long w : inner) g.weights.push_back(ExactScalar(w));
    g.weights.push_back(ExactScalar(2));
    g.weights.push_back(ExactScalar(2));
    const long long juncA = 2, juncB = 2 + mids + 1;
    g.edge(0, juncA, 1);
    g.edge(1, juncA, 1);
    for (long long i = juncA; i < juncB; ++i) g.edge(i, i + 1, 1);
    g.edge(juncB, juncB + 1, 1);
    g.edge(juncB, juncB + 2, 1);
    if (type == "forkfork_tail") {
      g.weights.push_back(ExactScalar(2));
      g.edge(juncB + 1, juncB + 3, 1);
    }
    return g.finish();
  }
  if (type == "cycle_pendant") {
    long long n = eval_int(t.at("count").get<std::string>(), rp.ints);
    if (n < 3) throw input_error("cycle_pendant needs a cycle of at least 3");
    long long cw = t.at("weight_const").get<long long>();
    for (long long i = 0; i < n; ++i) g.weights.push_back(ExactScalar(cw));
    for (long long i = 0; i < n; ++i) g.edge(i, (i + 1) % n, 1);
    g.weights.push_back(eval_expr(t.at("pendant").get<std::string>(), rp.ints));
    g.edge(0, n, 1);
    return g.finish();
  }
  throw input_error("catalog " + fam.id + ": unknown template type '" + type + "'");
}

}  // namespace

VectorSystem instantiate(const CatalogFamily& fam, const ParamAssignment& params) {
  ResolvedParams rp = resolve_params(fam, params);
  for (const auto& c : fam.constraints)
    if (!eval_predicate(c, rp.ints))
      throw input_error("constraint violated: " + c + " in family " + fam.id);
  VectorSystem s = build_template(fam, rp);
  for (const auto& cond : fam.side_conditions) {
    if (cond == "negative_definite") {
      if (!is_negative_definite(s.gram()))
        throw input_error("side condition violated: negative_definite in family " + fam.id);
    } else if (cond == "log_canonical") {
      // The arm inequality bounds the shape only; the admissible weightings
      // are pinned down by log-canonicity itself.
      if (!is_log_canonical(s).log_canonical)
        throw input_error("side condition violated: log_canonical in family " + fam.id);
    } else {
      throw input_error("catalog " + fam.id + ": unknown side condition '" + cond + "'");
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> find_isomorphism(const VectorSystem& a, const VectorSystem& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (a.entry(i, i) != b.entry(v, v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (a.entry(i, j) != b.entry(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      if (place(i + 1)) return true;
      used[v] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (place(0)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Identification
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<long long>> integer_weights(const VectorSystem& s) {
  std::vector<long long> ws;
  for (int i = 0; i < s.size(); ++i) {
    auto w = s.weight(i);
    if (!w) return std::nullopt;
    ws.push_back(w->convert_to<long long>());
  }
  return ws;
}

bool simple_edges_only(const VectorSystem& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) {
      const ExactScalar& e = s.entry(i, j);
      if (!e.is_zero() && e != ExactScalar(1)) return false;
    }
  return true;
}

// Path recognition: returns vertex order along the path (n >= 1).
std::optional<std::vector<int>> recognize_path(const VectorSystem& s) {
  const int n = s.size();
  if (n == 0 || !simple_edges_only(s) || !is_connected(s)) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  int start = -1;
  for (int i = 0; i < n; ++i) {
    int d = s.degree(i);
    if (d > 2) return std::nullopt;
    if (d == 1 && start < 0) start = i;
  }
  if (start < 0) return std::nullopt;  // cycle
  std::vector<int> order{start};
  std::vector<char> seen(n, 0);
  seen[start] = 1;
  while (static_cast<int>(order.size()) < n) {
    int cur = order.back(), next = -1;
    for (int j = 0; j < n; ++j)
      if (!seen[j] && s.has_edge(cur, j)) next = j;
    if (next < 0) return std::nullopt;
    seen[next] = 1;
    order.push_back(next);
  }
  return order;
}

std::optional<std::vector<int>> recognize_cycle_order(const VectorSystem& s) {
  const int n = s.size();
  if (n < 3 || !simple_edges_only(s) || !is_connected(s)) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (s.degree(i) != 2) return std::nullopt;
  std::vector<int> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (static_cast<int>(order.size()) < n) {
    int cur = order.back(), next = -1;
    for (int j = 0; j < n; ++j)
      if (!seen[j] && s.has_edge(cur, j)) {
        next = j;
        break;
      }
    if (next < 0) return std::nullopt;
    seen[next] = 1;
    order.push_back(next);
  }
  return order;
}

ParamAssignment weights_assignment(const std::string& count_name, const std::string& list_name,
                                   const std::vector<long long>& ws) {
  ParamAssignment a;
  a[count_name] = static_cast<long long>(ws.size());
  a[list_name] = ws;
  return a;
}

// Vertex count of the instantiated family when the template fixes it.
std::optional<int> fixed_size(const CatalogFamily& fam) {
  const std::string type = fam.tmpl.at("type").get<std::string>();
  if (type == "explicit") return static_cast<int>(fam.tmpl.at("weights").size());
  if (type == "matrix") return static_cast<int>(fam.tmpl.at("entries").size());
  if (type == "star") return static_cast<int>(fam.tmpl.at("rays").get<long long>()) + 1;
  return std::nullopt;
}

// Candidate parameter assignments for one family given the query system.
std::vector<ParamAssignment> candidate_assignments(const CatalogFamily& fam,
                                                   const VectorSystem& s) {
  std::vector<ParamAssignment> out;
  if (auto n = fixed_size(fam); n && *n != s.size()) return out;
  auto ws = integer_weights(s);
  if (!ws) {
    // Radical diagonals never occur in catalog instances.
    return out;
  }
  long long maxv = 1;
  for (long long w : *ws) maxv = std::max(maxv, w);
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) {
      auto q = s.entry(i, j).rational_value();
      if (q && is_integer(*q)) maxv = std::max(maxv, numerator(*q).convert_to<long long>());
    }
  const long long upper = std::max<long long>(maxv, s.size());

  const std::string type = fam.tmpl.at("type").get<std::string>();

  // Weight-list families are matched structurally.
  bool has_weight_list = false;
  for (const auto& p : fam.params)
    if (p.type == ParamSpec::Type::Weights) has_weight_list = true;
  if (has_weight_list) {
    if (type == "chain") {
      if (auto order = recognize_path(s)) {
        std::vector<long long> w1, w2;
        for (int v : *order) w1.push_back((*ws)[v]);
        w2.assign(w1.rbegin(), w1.rend());
        out.push_back(weights_assignment("n", "w", std::min(w1, w2)));
      }
    } else if (type == "cycle") {
      if (auto order = recognize_cycle_order(s)) {
        std::vector<long long> cyc;
        for (int v : *order) cyc.push_back((*ws)[v]);
        std::vector<long long> best;
        const int n = static_cast<int>(cyc.size());
        for (int dir = 0; dir < 2; ++dir) {
          for (int shift = 0; shift < n; ++shift) {
            std::vector<long long> rot;
            for (int k = 0; k < n; ++k) rot.push_back(cyc[(shift + k) % n]);
            if (best.empty() || rot < best) best = rot;
          }
          std::reverse(cyc.begin(), cyc.end());
        }
        out.push_back(weights_assignment("n", "w", best));
      }
    } else if (type == "tstar") {
      // one degree-3 vertex on a simple-edge tree, three chains hanging off
      if (simple_edges_only(s) && graph_is_tree(s)) {
        int center = -1;
        bool shape_ok = true;
        for (int i = 0; i < s.size(); ++i) {
          int d = s.degree(i);
          if (d > 3) shape_ok = false;
          if (d == 3) {
            if (center >= 0) shape_ok = false;
            center = i;
          }
        }
        if (shape_ok && center >= 0) {
          std::vector<std::vector<int>> arms;
          for (int j = 0; j < s.size(); ++j) {
            if (!s.has_edge(center, j)) continue;
            std::vector<int> arm{j};
            int prev = center, cur = j;
            while (true) {
              int next = -1;
              for (int k = 0; k < s.size(); ++k)
                if (k != prev && s.has_edge(cur, k)) next = k;
              if (next < 0) break;
              arm.push_back(next);
              prev = cur;
              cur = next;
            }
            arms.push_back(arm);
          }
          if (arms.size() == 3) {
            // order arms canonically: by (length, weight sequence)
            std::vector<std::vector<long long>> aw(3);
            for (int k = 0; k < 3; ++k)
              for (int v : arms[k]) aw[k].push_back((*ws)[v]);
            std::vector<int> idx{0, 1, 2};
            std::sort(idx.begin(), idx.end(), [&](int x, int y) {
              return std::make_pair(aw[x].size(), aw[x]) < std::make_pair(aw[y].size(), aw[y]);
            });
            ParamAssignment a;
            a["p"] = static_cast<long long>(arms[idx[0]].size());
            a["q"] = static_cast<long long>(arms[idx[1]].size());
            a["r"] = static_cast<long long>(arms[idx[2]].size());
            std::vector<long long> w{(*ws)[center]};
            for (int k : idx)
              for (int v : arms[k]) w.push_back((*ws)[v]);
            a["w"] = w;
            out.push_back(std::move(a));
          }
        }
      }
    } else if (type == "forkfork") {
      if (simple_edges_only(s) && graph_is_tree(s) && s.size() >= 6) {
        std::vector<int> junctions, leaves;
        bool shape_ok = true;
        for (int i = 0; i < s.size(); ++i) {
          int d = s.degree(i);
          if (d == 3) junctions.push_back(i);
          else if (d == 1) leaves.push_back(i);
          else if (d != 2) shape_ok = false;
        }
        if (shape_ok && junctions.size() == 2 && leaves.size() == 4) {
          bool leaves_ok = true;
          for (int lv : leaves) {
            if ((*ws)[lv] != 2) leaves_ok = false;
            if (!s.has_edge(lv, junctions[0]) && !s.has_edge(lv, junctions[1])) leaves_ok = false;
          }
          if (leaves_ok) {
            // walk the junction-to-junction path both ways, keep the smaller
            std::vector<long long> best;
            for (int dir = 0; dir < 2; ++dir) {
              int a = junctions[dir], b = junctions[1 - dir];
              std::vector<long long> inner{(*ws)[a]};
              int prev = -1, cur = a;
              while (cur != b) {
                int next = -1;
                for (int k = 0; k < s.size(); ++k)
                  if (k != prev && s.degree(k) >= 2 && s.has_edge(cur, k)) next = k;
                if (next < 0) break;
                inner.push_back((*ws)[next]);
                prev = cur;
                cur = next;
              }
              if (cur == b && (best.empty() || inner < best)) best = inner;
            }
            if (!best.empty()) {
              ParamAssignment a;
              a["n"] = static_cast<long long>(best.size()) - 2;
              a["w"] = best;
              out.push_back(std::move(a));
            }
          }
        }
      }
    }
    return out;
  }

  // Finite tuple lists enumerate directly; remaining integer parameters scan
  // [min, upper] (parameters always show up as weights or multiplicities, so
  // the query bounds them).
  std::vector<ParamAssignment> partial{{}};
  if (!fam.tuple_params.empty()) {
    std::vector<ParamAssignment> next;
    for (const auto& row : fam.tuples) {
      ParamAssignment a;
      for (std::size_t k = 0; k < fam.tuple_params.size(); ++k) a[fam.tuple_params[k]] = row[k];
      next.push_back(std::move(a));
    }
    partial = std::move(next);
  }
  for (const auto& spec : fam.params) {
    if (spec.type != ParamSpec::Type::Int) continue;
    if (std::find(fam.tuple_params.begin(), fam.tuple_params.end(), spec.name) !=
        fam.tuple_params.end())
      continue;
    long long hi = spec.max ? std::min(*spec.max, upper) : upper;
    std::vector<ParamAssignment> next;
    for (const auto& base : partial)
      for (long long v = spec.min; v <= hi; ++v) {
        ParamAssignment a = base;
        a[spec.name] = v;
        next.push_back(std::move(a));
      }
    partial = std::move(next);
    if (partial.size() > 200000)
      throw resource_error("identify: candidate space too large for family " + fam.id);
  }
  return partial;
}

}  // namespace

std::vector<CatalogMatch> identify(const Catalog& catalog, const VectorSystem& s) {
  if (s.size() > 16) throw resource_error("identify: systems up to 16 vectors supported");
  std::vector<CatalogMatch> matches;
  if (s.size() == 0) return matches;
  for (const auto& fam : catalog.families()) {
    if (fam.kind == "exclusion") continue;
    for (const auto& a : candidate_assignments(fam, s)) {
      VectorSystem instance;
      try {
        instance = instantiate(fam, a);
      } catch (const Error&) {
        continue;  // constraint or side condition rejected the candidate
      }
      if (instance.size() != s.size()) continue;
      if (auto perm = find_isomorphism(instance, s)) {
        matches.push_back(CatalogMatch{fam.id, a, *perm});
      }
    }
  }
  return matches;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

std::vector<ParamAssignment> sample_assignments(const CatalogFamily& fam,
                                                const ValidateOptions& opt,
                                                std::mt19937_64& rng) {
  std::vector<ParamAssignment> ints{{}};
  if (!fam.tuple_params.empty()) {
    ints.clear();
    for (const auto& row : fam.tuples) {
      ParamAssignment a;
      for (std::size_t k = 0; k < fam.tuple_params.size(); ++k) a[fam.tuple_params[k]] = row[k];
      ints.push_back(std::move(a));
    }
  }
  for (const auto& spec : fam.params) {
    if (spec.type != ParamSpec::Type::Int) continue;
    if (std::find(fam.tuple_params.begin(), fam.tuple_params.end(), spec.name) !=
        fam.tuple_params.end())
      continue;
    long long hi = spec.max ? *spec.max : std::max(spec.min, opt.param_cap);
    std::vector<long long> values;
    if (hi - spec.min <= 8) {
      for (long long v = spec.min; v <= hi; ++v) values.push_back(v);  // small ranges in full
    } else {
      values = {spec.min, spec.min + 1, hi};
      std::uniform_int_distribution<long long> dist(spec.min, hi);
      for (int k = 0; k < 3; ++k) values.push_back(dist(rng));
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    std::vector<ParamAssignment> next;
    for (const auto& base : ints)
      for (long long v : values) {
        ParamAssignment a = base;
        a[spec.name] = v;
        next.push_back(std::move(a));
      }
    ints = std::move(next);
  }

  // Attach weight lists: the all-min boundary plus random interiors.
  std::vector<ParamAssignment> result;
  for (const auto& base : ints) {
    std::map<std::string, long long> intvals;
    for (const auto& [k, v] : base)
      if (const long long* p = std::get_if<long long>(&v)) intvals[k] = *p;
    std::vector<ParamAssignment> variants{base};
    for (const auto& spec : fam.params) {
      if (spec.type != ParamSpec::Type::Weights) continue;
      long long len = 0;
      try {
        len = eval_int(spec.length, intvals);
      } catch (const Error&) {
        continue;
      }
      if (len < 0) continue;
      std::vector<ParamAssignment> next;
      for (const auto& v : variants) {
        ParamAssignment all_min = v;
        all_min[spec.name] = std::vector<long long>(len, spec.min);
        next.push_back(std::move(all_min));
        std::uniform_int_distribution<long long> dist(spec.min,
                                                      std::max(spec.min, opt.weight_cap));
        for (int k = 0; k < 2; ++k) {
          ParamAssignment rnd = v;
          std::vector<long long> wl(len);
          for (auto& x : wl) x = dist(rng);
          rnd[spec.name] = std::move(wl);
          next.push_back(std::move(rnd));
        }
      }
      variants = std::move(next);
    }
    for (auto& v : variants) result.push_back(std::move(v));
  }
  if (static_cast<int>(result.size()) > opt.budget_per_family)
    result.resize(opt.budget_per_family);
  return result;
}


FamilyReport validate_family(const CatalogFamily& fam, const ValidateOptions& opt) {
  FamilyReport rep;
  rep.id = fam.id;
  rep.ambiguous = fam.ambiguous;
  std::seed_seq seq{opt.seed, std::hash<std::string>{}(fam.id)};
  std::mt19937_64 rng(seq);

  for (const auto& a : sample_assignments(fam, opt, rng)) {
    VectorSystem s;
    try {
      s = instantiate(fam, a);
    } catch (const Error&) {
      ++rep.side_condition_rejects;
      continue;
    }
    ++rep.samples;
    auto issue = [&](const std::string& what) {
      rep.issues.push_back(CatalogIssue{fam.id, a, what});
    };
    ValidationReport val = validate(s, true);
    if (!val.valid(true)) {
      issue("instance fails system validation");
      continue;
    }
    if (fam.claimed.non_minimal_when_log_canonical) {
      if (is_log_canonical(s).log_canonical && is_minimal(s))
        issue("log canonical instance is minimal, exclusion pattern wrong");
      continue;
    }
    if (fam.claimed.cls) {
      SystemClassKind kind = classify_kind(s);
      if (kind != *fam.claimed.cls)
        issue(std::string("classified as ") + to_string(kind) + ", claimed " +
              to_string(*fam.claimed.cls));
      else if (fam.claimed.lanner && kind == SystemClassKind::Hyperbolic &&
               is_lanner(s) != *fam.claimed.lanner)
        issue("Lanner flag mismatch");
    }
    if (fam.claimed.log_canonical &&
        is_log_canonical(s).log_canonical != *fam.claimed.log_canonical)
      issue("log-canonicity mismatch");
    if (fam.claimed.minimal && is_minimal(s) != *fam.claimed.minimal) issue("minimality mismatch");
  }
  if (rep.samples == 0)
    rep.issues.push_back(CatalogIssue{fam.id, {}, "no valid samples produced"});
  return rep;
}

}  // namespace

CatalogReport validate_catalog(const Catalog& catalog, const ValidateOptions& opt) {
  CatalogReport report;
  const auto& fams = catalog.families();
  std::vector<FamilyReport> reports(fams.size());
  if (opt.jobs > 1) {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= fams.size()) break;
        reports[i] = validate_family(fams[i], opt);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < fams.size(); ++i) reports[i] = validate_family(fams[i], opt);
  }
  for (auto& r : reports) {
    report.total_samples += r.samples;
    if (r.ambiguous) report.flagged_issues += static_cast<int>(r.issues.size());
    else report.unflagged_issues += static_cast<int>(r.issues.size());
    report.families.push_back(std::move(r));
  }
  return report;
}

nlohmann::json to_json(const ParamAssignment& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : a) {
    if (const long long* p = std::get_if<long long>(&v)) j[k] = *p;
    else j[k] = std::get<std::vector<long long>>(v);
  }
  return j;
}

ParamAssignment assignment_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("parameters must be a JSON object");
  ParamAssignment a;
  for (const auto& [k, v] : j.items()) {
    if (v.is_number_integer()) {
      a[k] = v.get<long long>();
    } else if (v.is_array()) {
      std::vector<long long> list;
      for (const auto& x : v) list.push_back(x.get<long long>());
      a[k] = std::move(list);
    } else {
      throw input_error("parameter '" + k + "' must be an integer or an integer list");
    }
  }
  return a;
}

}  // namespace lcs
