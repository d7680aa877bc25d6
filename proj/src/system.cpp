#include "lcs/system.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace lcs {

const char* to_string(SystemClassKind kind) {
  switch (kind) {
    case SystemClassKind::Elliptic: return "elliptic";
    case SystemClassKind::ConnectedParabolic: return "connected_parabolic";
    case SystemClassKind::Hyperbolic: return "hyperbolic";
    case SystemClassKind::OtherNegativeSemidefinite: return "other_negative_semidefinite";
  }
  return "?";
}

VectorSystem::VectorSystem(Mat<ExactScalar> gram, std::vector<std::string> labels)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw input_error("system: Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw input_error("system: Gram matrix is not symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i + 1));
  }
  if (labels_.size() != n) throw input_error("system: label count does not match matrix size");
}

VectorSystem VectorSystem::from_integers(const std::vector<std::vector<long long>>& gram,
                                         std::vector<std::string> labels) {
  Mat<ExactScalar> m(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (long long v : gram[i]) m[i].push_back(ExactScalar(v));
  return VectorSystem(std::move(m), std::move(labels));
}

bool VectorSystem::integer_entries() const {
  for (const auto& row : gram_)
    for (const auto& x : row) {
      auto q = x.rational_value();
      if (!q || !is_integer(*q)) return false;
    }
  return true;
}

std::optional<Int> VectorSystem::weight(int i) const {
  auto q = gram_[i][i].rational_value();
  if (!q || !is_integer(*q)) return std::nullopt;
  return -numerator(*q);
}

bool VectorSystem::first_kind(int i) const { return gram_[i][i] == ExactScalar(-1); }

int VectorSystem::degree(int i) const {
  int d = 0;
  for (int j = 0; j < size(); ++j)
    if (has_edge(i, j)) ++d;
  return d;
}

namespace {

// Exact division assert keeps the integer Faddeev-LeVerrier honest: the
// characteristic polynomial of an integer matrix has integer coefficients.
Vec<Rational> char_poly_integer(const Mat<Int>& a) {
  const std::size_t n = a.size();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  Mat<Int> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat<Int> am(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    assert(tr % Int(k) == 0);
    c[n - k] = -tr / Int(k);
    m = std::move(am);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
  }
  Vec<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = Rational(c[i]);
  return out;
}

std::optional<Mat<Int>> integer_gram(const VectorSystem& s) {
  Mat<Int> a(s.size(), std::vector<Int>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      auto q = s.entry(i, j).rational_value();
      if (!q || !is_integer(*q)) return std::nullopt;
      a[i][j] = numerator(*q);
    }
  return a;
}

}  // namespace

Signature signature_of(const VectorSystem& s) {
  if (s.size() == 0) return Signature{};
  if (auto a = integer_gram(s)) {
    return signature_from_char_poly(char_poly_integer(*a));
  }
  // Radical entries: coefficients can be irrational (mixed sqrt and integer
  // pairings), but Descartes' rule only needs their certified signs.
  auto c = char_poly(s.gram());
  std::vector<int> signs;
  signs.reserve(c.size());
  for (const auto& x : c) signs.push_back(x.sign());
  return signature_from_sign_sequence(signs);
}

ValidationReport validate(const VectorSystem& s, bool allow_radical) {
  ValidationReport r;
  r.integer_entries = s.integer_entries();
  r.diagonal_ok = true;
  r.off_diagonal_ok = true;
  for (int i = 0; i < s.size(); ++i) {
    if (sign_of(s.entry(i, i) + ExactScalar(1)) > 0) {
      r.diagonal_ok = false;
      r.violations.push_back("diagonal entry of '" + s.label(i) + "' exceeds -1");
    }
    for (int j = i + 1; j < s.size(); ++j)
      if (sign_of(s.entry(i, j)) < 0) {
        r.off_diagonal_ok = false;
        r.violations.push_back("negative product of '" + s.label(i) + "' and '" + s.label(j) + "'");
      }
  }
  if (!allow_radical && !r.integer_entries)
    r.violations.push_back("non-integer Gram entries in an integer-only context");
  try {
    r.sig = signature_of(s);
    r.at_most_hyperbolic = r.sig.positive <= 1;
    if (!r.at_most_hyperbolic)
      r.violations.push_back("signature has more than one positive eigenvalue");
  } catch (const Error& e) {
    r.at_most_hyperbolic = false;
    r.violations.push_back(e.what());
  }
  return r;
}

SystemClassKind classify_kind(const VectorSystem& s) {
  Signature sig = signature_of(s);
  if (sig.positive > 1) throw domain_error("classify: system is not at most hyperbolic");
  if (sig.positive == 1) return SystemClassKind::Hyperbolic;
  if (sig.zero == 0) return SystemClassKind::Elliptic;
  return is_connected(s) ? SystemClassKind::ConnectedParabolic
                         : SystemClassKind::OtherNegativeSemidefinite;
}

SystemClass classify(const VectorSystem& s) {
  SystemClass c{classify_kind(s), false};
  if (c.kind == SystemClassKind::Hyperbolic) c.lanner = is_lanner(s);
  return c;
}

VectorSystem subsystem(const VectorSystem& s, const std::vector<int>& indices) {
  if (indices.empty()) throw domain_error("subsystem: empty index set");
  for (int i : indices)
    if (i < 0 || i >= s.size()) throw input_error("subsystem: index out of range");
  Mat<ExactScalar> m(indices.size(), Vec<ExactScalar>(indices.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    labels.push_back(s.label(indices[a]));
    for (std::size_t b = 0; b < indices.size(); ++b) m[a][b] = s.entry(indices[a], indices[b]);
  }
  return VectorSystem(std::move(m), std::move(labels));
}

bool is_lanner(const VectorSystem& s) {
  if (classify_kind(s) != SystemClassKind::Hyperbolic) return false;
  if (s.size() <= 1) return false;
  for (int drop = 0; drop < s.size(); ++drop) {
    std::vector<int> keep;
    for (int i = 0; i < s.size(); ++i)
      if (i != drop) keep.push_back(i);
    if (classify_kind(subsystem(s, keep)) == SystemClassKind::Hyperbolic) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const VectorSystem& s) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(s.size(), 0);
  for (int start = 0; start < s.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < s.size(); ++w)
        if (!seen[w] && s.has_edge(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const VectorSystem& s) { return connected_components(s).size() <= 1; }

std::vector<int> contraction_subset(const VectorSystem& s, int e) {
  std::vector<int> subset;
  for (int i = 0; i < s.size(); ++i)
    if (i != e && !s.entry(i, e).is_zero()) subset.push_back(i);
  return subset;
}

VectorSystem contract(const VectorSystem& s, int e) {
  if (e < 0 || e >= s.size()) throw input_error("contract: index out of range");
  if (!s.first_kind(e))
    throw domain_error("contract: '" + s.label(e) + "' does not have self-intersection -1");
  for (int i = 0; i < s.size(); ++i) {
    if (i == e) continue;
    const ExactScalar& c = s.entry(i, e);
    if (c.is_zero()) continue;
    if (c != ExactScalar(1))
      throw domain_error("contract: '" + s.label(i) + "' pairs " + c.to_string() + " with '" +
                         s.label(e) + "' (only 0 or 1 allowed)");
    if (sign_of(s.entry(i, i) + ExactScalar(2)) > 0)
      throw domain_error("contract: '" + s.label(i) + "' meets '" + s.label(e) +
                         "' but has self-intersection > -2");
  }
  std::vector<int> keep;
  for (int i = 0; i < s.size(); ++i)
    if (i != e) keep.push_back(i);
  Mat<ExactScalar> m(keep.size(), Vec<ExactScalar>(keep.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(s.label(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b)
      m[a][b] = s.entry(keep[a], keep[b]) + s.entry(keep[a], e) * s.entry(keep[b], e);
  }
  return VectorSystem(std::move(m), std::move(labels));
}

VectorSystem blow_up(const VectorSystem& s, const std::vector<int>& subset,
                     const std::string& new_label) {
  std::set<int> sel(subset.begin(), subset.end());
  if (sel.size() != subset.size()) throw input_error("blow_up: repeated index in subset");
  for (int i : subset)
    if (i < 0 || i >= s.size()) throw input_error("blow_up: index out of range");
  for (int i : subset)
    for (int j : subset)
      if (i < j && sign_of(s.entry(i, j) - ExactScalar(1)) < 0)
        throw domain_error("blow_up: '" + s.label(i) + "' and '" + s.label(j) +
                           "' pair less than 1, subset not blowable");
  const int n = s.size();
  Mat<ExactScalar> m(n + 1, Vec<ExactScalar>(n + 1, ExactScalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = s.entry(i, j);
      if (i != j && sel.count(i) && sel.count(j)) m[i][j] -= ExactScalar(1);
    }
  for (int i : subset) {
    m[i][i] -= ExactScalar(1);
    m[i][n] = ExactScalar(1);
    m[n][i] = ExactScalar(1);
  }
  m[n][n] = ExactScalar(-1);

  std::vector<std::string> labels = s.labels();
  std::string e = new_label;
  if (e.empty()) {
    int k = 0;
    do {
      e = "e" + std::to_string(++k);
    } while (std::find(labels.begin(), labels.end(), e) != labels.end());
  }
  labels.push_back(e);
  return VectorSystem(std::move(m), std::move(labels));
}

namespace {

// One round of neighbourhood color refinement; colors are compressed to
// small integers between rounds to keep the strings bounded.
std::vector<int> refine_colors(const VectorSystem& s) {
  const int n = s.size();
  std::vector<std::string> color(n);
  for (int i = 0; i < n; ++i) color[i] = s.entry(i, i).to_string();
  std::vector<int> ids(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::string> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> nb;
      for (int j = 0; j < n; ++j)
        if (s.has_edge(i, j)) nb.push_back(s.entry(i, j).to_string() + "@" + color[j]);
      std::sort(nb.begin(), nb.end());
      next[i] = color[i] + "#";
      for (auto& x : nb) next[i] += x + ";";
    }
    std::map<std::string, int> compress;
    for (const auto& c : next) compress.emplace(c, 0);
    int id = 0;
    for (auto& [k, v] : compress) v = id++;
    std::vector<int> new_ids(n);
    for (int i = 0; i < n; ++i) new_ids[i] = compress[next[i]];
    if (new_ids == ids) break;
    ids = new_ids;
    for (int i = 0; i < n; ++i) color[i] = std::to_string(ids[i]);
  }
  return ids;
}

// Minimal serialization of the Gram matrix over all permutations, found by
// branch and bound with prefix pruning. Token order for position k: the
// diagonal entry, then pairings with the already placed vertices.
struct CanonicalSearch {
  const VectorSystem& s;
  int n;
  std::vector<int> order;          // preferred try-order (by refined color)
  std::vector<ExactScalar> best;   // best token sequence found so far
  bool have_best = false;
  std::vector<int> perm;
  std::vector<char> used;
  std::vector<ExactScalar> tokens;

  explicit CanonicalSearch(const VectorSystem& sys) : s(sys), n(sys.size()) {
    auto colors = refine_colors(s);
    for (int i = 0; i < n; ++i) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (colors[a] != colors[b]) return colors[a] < colors[b];
      return a < b;
    });
    used.assign(n, 0);
  }

  // cmp state: 0 = prefix equals best so far, -1 = already strictly smaller
  void rec(int depth, int cmp) {
    if (depth == n) {
      if (!have_best || cmp < 0) {
        best = tokens;
        have_best = true;
      }
      return;
    }
    for (int cand : order) {
      if (used[cand]) continue;
      std::size_t base = tokens.size();
      int new_cmp = cmp;
      bool pruned = false;
      auto push = [&](const ExactScalar& t) {
        tokens.push_back(t);
        if (have_best && new_cmp == 0) {
          const ExactScalar& b = best[tokens.size() - 1];
          if (b < t) {
            pruned = true;
          } else if (t < b) {
            new_cmp = -1;
          }
        }
      };
      push(s.entry(cand, cand));
      for (int k = 0; k < depth && !pruned; ++k) push(s.entry(cand, perm[k]));
      if (!pruned) {
        perm.push_back(cand);
        used[cand] = 1;
        rec(depth + 1, new_cmp);
        used[cand] = 0;
        perm.pop_back();
      }
      tokens.resize(base);
    }
  }
};

}  // namespace

std::string canonical_key(const VectorSystem& s) {
  if (s.size() == 0) return "";
  CanonicalSearch search(s);
  search.rec(0, 0);
  std::string key;
  for (const auto& t : search.best) key += t.to_string() + "|";
  return key;
}

bool is_equivalent(const VectorSystem& a, const VectorSystem& b) {
  if (a.size() != b.size()) return false;
  auto sorted_entries = [](const VectorSystem& s) {
    std::vector<std::string> diag, off;
    for (int i = 0; i < s.size(); ++i) {
      diag.push_back(s.entry(i, i).to_string());
      for (int j = i + 1; j < s.size(); ++j) off.push_back(s.entry(i, j).to_string());
    }
    std::sort(diag.begin(), diag.end());
    std::sort(off.begin(), off.end());
    return std::make_pair(diag, off);
  };
  if (sorted_entries(a) != sorted_entries(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

WeightedGraph weighted_graph(const VectorSystem& s) {
  WeightedGraph g;
  for (int i = 0; i < s.size(); ++i) {
    g.vertex_weights.push_back(-s.entry(i, i));
    for (int j = i + 1; j < s.size(); ++j)
      if (s.has_edge(i, j)) g.edges.push_back({i, j, s.entry(i, j)});
  }
  return g;
}

VectorSystem from_weighted_graph(const WeightedGraph& g) {
  const int n = static_cast<int>(g.vertex_weights.size());
  Mat<ExactScalar> m(n, Vec<ExactScalar>(n, ExactScalar(0)));
  for (int i = 0; i < n; ++i) m[i][i] = -g.vertex_weights[i];
  for (const auto& e : g.edges) {
    m[e.a][e.b] = e.weight;
    m[e.b][e.a] = e.weight;
  }
  return VectorSystem(std::move(m));
}

void for_each_connected_subset(const VectorSystem& s, int max_size,
                               const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = s.size();
  if (max_size <= 0) return;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.has_edge(i, j)) adj[i].push_back(j);

  bool stop = false;
  std::vector<int> cur;
  std::vector<char> in_cur(n, 0);

  // Subsets are anchored at their minimum vertex; the excluded set makes
  // sibling branches disjoint so each subset appears exactly once.
  std::function<void(int, std::vector<int>, std::vector<char>)> rec =
      [&](int anchor, std::vector<int> ext, std::vector<char> excluded) {
        if (stop) return;
        std::vector<int> sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        if (!fn(sorted)) {
          stop = true;
          return;
        }
        if (static_cast<int>(cur.size()) == max_size) return;
        while (!ext.empty() && !stop) {
          int u = ext.back();
          ext.pop_back();
          std::vector<int> next_ext = ext;
          std::vector<char> in_next(n, 0);
          for (int w : next_ext) in_next[w] = 1;
          for (int w : adj[u])
            if (w > anchor && !in_cur[w] && !excluded[w] && !in_next[w] && w != u) {
              next_ext.push_back(w);
              in_next[w] = 1;
            }
          cur.push_back(u);
          in_cur[u] = 1;
          rec(anchor, std::move(next_ext), excluded);
          in_cur[u] = 0;
          cur.pop_back();
          excluded[u] = 1;
        }
      };

  for (int anchor = 0; anchor < n && !stop; ++anchor) {
    cur = {anchor};
    in_cur.assign(n, 0);
    in_cur[anchor] = 1;
    std::vector<int> ext;
    for (int w : adj[anchor])
      if (w > anchor) ext.push_back(w);
    rec(anchor, std::move(ext), std::vector<char>(n, 0));
  }
}

bool graph_has_multiple_edge(const VectorSystem& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (s.has_edge(i, j) && sign_of(s.entry(i, j) - ExactScalar(1)) > 0) return true;
  return false;
}

bool graph_is_tree(const VectorSystem& s) {
  if (s.size() == 0) return false;
  if (!is_connected(s)) return false;
  int edges = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (s.has_edge(i, j)) ++edges;
  return edges == s.size() - 1;
}

bool graph_is_cycle(const VectorSystem& s) {
  if (s.size() < 3) return false;
  if (!is_connected(s)) return false;
  for (int i = 0; i < s.size(); ++i)
    if (s.degree(i) != 2) return false;
  return true;
}

}  // namespace lcs
