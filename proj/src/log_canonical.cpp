#include "lcs/log_canonical.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace lcs {

Vec<ExactScalar> canonical_element_exact(const VectorSystem& s) {
  if (classify_kind(s) != SystemClassKind::Elliptic)
    throw domain_error("canonical_element: system is not elliptic");
  const int n = s.size();
  Vec<ExactScalar> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -s.entry(i, i) - ExactScalar(2);  // b_i - 2
  auto sol = solve_linear(s.gram(), rhs);
  if (!sol) throw domain_error("canonical_element: singular Gram matrix");  // unreachable: elliptic
  return *sol;
}

CanonicalElement canonical_element(const VectorSystem& s) {
  auto exact = canonical_element_exact(s);
  CanonicalElement out;
  for (const auto& x : exact) {
    auto q = x.rational_value();
    if (!q) throw domain_error("canonical_element: irrational coefficient");
    out.coefficients.push_back(*q);
  }
  return out;
}

namespace {

std::optional<Mat<Rational>> rational_gram(const VectorSystem& s) {
  Mat<Rational> r(s.size(), Vec<Rational>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      auto q = s.entry(i, j).rational_value();
      if (!q) return std::nullopt;
      r[i][j] = *q;
    }
  return r;
}

// Coefficient test on one connected elliptic candidate subset, rational
// arithmetic. Returns the offending position or -1.
int subset_violation(const Mat<Rational>& gram, const std::vector<int>& subset, bool strict,
                     Vec<Rational>* alpha_out) {
  const int k = static_cast<int>(subset.size());
  Mat<Rational> sub(k, Vec<Rational>(k));
  Vec<Rational> rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sub[i][j] = gram[subset[i]][subset[j]];
    rhs[i] = -gram[subset[i]][subset[i]] - 2;
  }
  if (!is_negative_definite(sub)) return -1;
  auto alpha = solve_linear(sub, rhs);
  for (int i = 0; i < k; ++i) {
    const Rational& a = (*alpha)[i];
    if (a < -1 || (a == -1 && strict)) {
      if (alpha_out) *alpha_out = *alpha;
      return i;
    }
  }
  return -1;
}

LogCanonicalResult lc_rational(const VectorSystem& s, const Mat<Rational>& gram) {
  LogCanonicalResult result;
  result.log_canonical = true;
  for_each_connected_subset(s, s.size(), [&](const std::vector<int>& subset) {
    bool strict = false;
    for (int i : subset)
      if (gram[i][i] == -1) strict = true;
    Vec<Rational> alpha;
    int bad = subset_violation(gram, subset, strict, &alpha);
    if (bad >= 0) {
      result.log_canonical = false;
      result.witness = LogCanonicalWitness{subset, bad, ExactScalar(alpha[bad]), strict};
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace

LogCanonicalResult is_log_canonical(const VectorSystem& s) {
  if (auto gram = rational_gram(s)) return lc_rational(s, *gram);

  LogCanonicalResult result;
  result.log_canonical = true;
  for_each_connected_subset(s, s.size(), [&](const std::vector<int>& subset) {
    VectorSystem sub = subsystem(s, subset);
    if (!is_negative_definite(sub.gram())) return true;
    bool strict = false;
    for (int i : subset)
      if (s.first_kind(i)) strict = true;
    Vec<ExactScalar> rhs(sub.size());
    for (int i = 0; i < sub.size(); ++i) rhs[i] = -sub.entry(i, i) - ExactScalar(2);
    auto alpha = solve_linear(sub.gram(), rhs);
    for (int i = 0; i < sub.size(); ++i) {
      int sg = sign_of((*alpha)[i] + ExactScalar(1));
      if (sg < 0 || (sg == 0 && strict)) {
        result.log_canonical = false;
        result.witness = LogCanonicalWitness{subset, i, (*alpha)[i], strict};
        return false;
      }
    }
    return true;
  });
  return result;
}

std::vector<int> contractible_elements(const VectorSystem& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (!s.first_kind(e)) continue;
    bool all_elliptic = true;
    for (int v = 0; v < s.size() && all_elliptic; ++v) {
      if (v == e) continue;
      Mat<ExactScalar> pair{{s.entry(v, v), s.entry(v, e)}, {s.entry(e, v), s.entry(e, e)}};
      if (!is_negative_definite(pair)) all_elliptic = false;
    }
    if (all_elliptic) out.push_back(e);
  }
  return out;
}

bool is_minimal(const VectorSystem& s) { return contractible_elements(s).empty(); }

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

using LLMat = std::vector<std::vector<long long>>;

// Multiplicities m admissible between weights b1, b2 inside a log canonical
// system: the pair {v1, v2} must not be an elliptic subsystem violating the
// coefficient conditions. Decided by the definition itself on the
// two-element system. For elliptic targets only elliptic pairs qualify.
class PairTable {
 public:
  // Fully precomputed so the enumeration workers can read it concurrently.
  PairTable(long long max_weight, bool elliptic_only) : w_(max_weight) {
    for (long long b1 = 1; b1 <= w_; ++b1)
      for (long long b2 = b1; b2 <= w_; ++b2) {
        std::vector<long long> ms;
        for (long long m = 0; m <= w_; ++m) {
          LLMat pair{{-b1, m}, {m, -b2}};
          bool neg_def = is_negative_definite_ll(pair);
          if (elliptic_only && m > 0 && !neg_def) continue;
          // at most hyperbolic is automatic for a 2x2 with negative diagonal
          if (is_log_canonical(VectorSystem::from_integers(pair)).log_canonical)
            ms.push_back(m);
        }
        cache_.emplace(std::make_pair(b1, b2), std::move(ms));
      }
  }

  const std::vector<long long>& allowed(long long b1, long long b2) const {
    return cache_.at(std::minmax(b1, b2));
  }

 private:
  long long w_;
  std::map<std::pair<long long, long long>, std::vector<long long>> cache_;
};

// Signature sign counts of a small integer symmetric matrix via
// Faddeev-LeVerrier over 128-bit intermediates; valid inside the
// enumeration guard (n <= 8, entries <= 12).
Signature signature_ll(const LLMat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<__int128> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<__int128>> am(n, std::vector<__int128>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) am[i][j] += static_cast<__int128>(a[i][l]) * m[l][j];
      }
    __int128 tr = 0;
    for (int i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / k;
    m = std::move(am);
    for (int i = 0; i < n; ++i) m[i][i] += c[n - k];
  }
  std::vector<int> signs(n + 1);
  for (int i = 0; i <= n; ++i) signs[i] = c[i] > 0 ? 1 : (c[i] < 0 ? -1 : 0);
  return signature_from_sign_sequence(signs);
}

bool connected_ll(const LLMat& gram, unsigned mask) {
  const int n = static_cast<int>(gram.size());
  unsigned start = mask & (~mask + 1);
  unsigned seen = start;
  while (true) {
    unsigned grow = seen;
    for (int i = 0; i < n; ++i) {
      if (!(seen & (1u << i))) continue;
      for (int j = 0; j < n; ++j)
        if ((mask & (1u << j)) && gram[i][j] != 0) grow |= 1u << j;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}

// Extension check: the parent (indices 0..n-2) is already log canonical, so
// only connected elliptic subsets through the new vertex need testing.
bool lc_extension_ok(const LLMat& gram) {
  const int n = static_cast<int>(gram.size());
  const unsigned nv = 1u << (n - 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & nv)) continue;
    if (!connected_ll(gram, mask)) continue;
    std::vector<int> subset;
    bool strict = false;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        subset.push_back(i);
        if (gram[i][i] == -1) strict = true;
      }
    const int k = static_cast<int>(subset.size());
    LLMat sub(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = gram[subset[i]][subset[j]];
    if (!is_negative_definite_ll(sub)) continue;
    Mat<Rational> rsub(k, Vec<Rational>(k));
    Vec<Rational> rhs(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) rsub[i][j] = Rational(sub[i][j]);
      rhs[i] = Rational(-sub[i][i] - 2);
    }
    auto alpha = solve_linear(rsub, rhs);
    for (int i = 0; i < k; ++i) {
      const Rational& x = (*alpha)[i];
      if (x < -1 || (x == -1 && strict)) return false;
    }
  }
  return true;
}

VectorSystem to_system(const LLMat& gram) { return VectorSystem::from_integers(gram); }

struct LevelSets {
  // canonical key -> Gram, for connected log canonical systems of one size
  std::map<std::string, LLMat> elliptic;
  std::map<std::string, LLMat> parabolic;
  std::map<std::string, LLMat> hyperbolic;

  bool contains(const std::string& key) const {
    return elliptic.count(key) || parabolic.count(key) || hyperbolic.count(key);
  }
};

}  // namespace

std::vector<VectorSystem> enumerate_minimal(const EnumerateOptions& opt) {
  if (opt.max_size > 8 || opt.max_weight > 12)
    throw resource_error("enumerate_minimal: limits exceeded (size <= 8, weight <= 12)");
  if (opt.max_size < 1 || opt.max_weight < 1)
    throw input_error("enumerate_minimal: limits must be positive");
  if (opt.cls == SystemClassKind::OtherNegativeSemidefinite) return {};  // never connected

  const long long w = opt.max_weight;
  const bool want_elliptic = opt.cls == SystemClassKind::Elliptic;
  const bool want_hyperbolic = opt.cls == SystemClassKind::Hyperbolic;
  // Non-Lanner hyperbolic systems may contain hyperbolic proper subsystems,
  // so only that search needs hyperbolic parents.
  const bool track_hyperbolic = want_hyperbolic && !(opt.lanner && *opt.lanner);

  PairTable pairs(w, want_elliptic);
  std::map<std::string, VectorSystem> out;

  auto consider_output = [&](const VectorSystem& s, const std::string& key,
                             SystemClassKind kind) {
    if (kind != opt.cls) return;
    if (want_hyperbolic && opt.lanner && is_lanner(s) != *opt.lanner) return;
    if (!is_minimal(s)) {
      bool lone_exception = opt.include_isolated_first_kind && s.size() == 1 && s.first_kind(0);
      if (!lone_exception) return;
    }
    out.emplace(key, s);
  };

  LevelSets level;
  for (long long b = 1; b <= w; ++b) {
    LLMat gram{{-b}};
    VectorSystem s = to_system(gram);
    std::string key = canonical_key(s);
    level.elliptic.emplace(key, gram);
    consider_output(s, key, SystemClassKind::Elliptic);
  }

  for (int size = 2; size <= opt.max_size; ++size) {
    LevelSets next;
    std::vector<const LLMat*> parents;
    for (const auto& [k, g] : level.elliptic) parents.push_back(&g);
    for (const auto& [k, g] : level.parabolic) parents.push_back(&g);
    if (track_hyperbolic)
      for (const auto& [k, g] : level.hyperbolic) parents.push_back(&g);

    for (const LLMat* parent : parents) {
      const int pn = static_cast<int>(parent->size());
      LLMat gram(size, std::vector<long long>(size, 0));
      for (int i = 0; i < pn; ++i)
        for (int j = 0; j < pn; ++j) gram[i][j] = (*parent)[i][j];

      std::vector<const std::vector<long long>*> allowed(pn);
      for (long long b = 1; b <= w; ++b) {
        gram[pn][pn] = -b;
        for (int i = 0; i < pn; ++i) allowed[i] = &pairs.allowed(-(*parent)[i][i], b);

        // Walk all admissible edge vectors (skipping the all-zero one:
        // extensions must stay connected).
        std::vector<std::size_t> pick(pn, 0);
        while (true) {
          bool all_zero = true;
          for (int i = 0; i < pn; ++i) {
            long long m = (*allowed[i])[pick[i]];
            gram[i][pn] = gram[pn][i] = m;
            if (m != 0) all_zero = false;
          }
          if (!all_zero) {
            bool neg_def = is_negative_definite_ll(gram);
            bool admissible = true;
            SystemClassKind kind = SystemClassKind::Elliptic;
            if (!neg_def) {
              if (want_elliptic) {
                admissible = false;
              } else {
                Signature sig = signature_ll(gram);
                if (sig.positive > 1) admissible = false;
                else kind = sig.positive == 1 ? SystemClassKind::Hyperbolic
                                              : SystemClassKind::ConnectedParabolic;
              }
            }
            if (admissible && lc_extension_ok(gram)) {
              VectorSystem cand = to_system(gram);
              std::string key = canonical_key(cand);
              if (!next.contains(key)) {
                // hyperbolic systems are stored for deduplication even when
                // they will not serve as parents
                switch (kind) {
                  case SystemClassKind::Elliptic: next.elliptic.emplace(key, gram); break;
                  case SystemClassKind::ConnectedParabolic: next.parabolic.emplace(key, gram); break;
                  default: next.hyperbolic.emplace(key, gram); break;
                }
                consider_output(cand, key, kind);
              }
            }
          }
          int pos = 0;
          while (pos < pn && ++pick[pos] == allowed[pos]->size()) pick[pos++] = 0;
          if (pos == pn) break;
        }
      }
    }
    level = std::move(next);
  }

  std::vector<VectorSystem> result;
  for (auto& [k, s] : out) result.push_back(std::move(s));
  std::stable_sort(result.begin(), result.end(),
                   [](const VectorSystem& a, const VectorSystem& b) { return a.size() < b.size(); });
  return result;
}

}  // namespace lcs
