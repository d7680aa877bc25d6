#include "lcs/surface.hpp"

#include <algorithm>

namespace lcs {

const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::LogTerminal: return "log_terminal";
    case SingularityClass::StrictlyLogCanonical: return "strictly_log_canonical";
    case SingularityClass::NotLogCanonical: return "not_log_canonical";
  }
  return "?";
}

VectorSystem to_system(const ResolutionGraph& g) {
  const int n = g.size();
  if (static_cast<int>(g.meets.size()) != n)
    throw input_error("resolution graph: intersection table size mismatch");
  std::vector<std::vector<long long>> gram(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (g.self_intersections[i] > -1)
      throw input_error("resolution graph: component self-intersection must be <= -1");
    gram[i][i] = g.self_intersections[i];
    if (static_cast<int>(g.meets[i].size()) != n)
      throw input_error("resolution graph: intersection table size mismatch");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.meets[i][j] < 0) throw input_error("resolution graph: negative intersection number");
      if (g.meets[i][j] != g.meets[j][i])
        throw input_error("resolution graph: intersection table is not symmetric");
      gram[i][j] = g.meets[i][j];
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("F" + std::to_string(i + 1));
  return VectorSystem::from_integers(gram, labels);
}

Codiscrepancy codiscrepancy(const ResolutionGraph& g) {
  VectorSystem s = to_system(g);
  if (!is_negative_definite(s.gram()))
    throw domain_error("codiscrepancy: intersection matrix is not negative definite, "
                       "the configuration does not contract to a singularity");
  const int n = s.size();
  Vec<Rational> rhs(n);
  Mat<Rational> a(n, Vec<Rational>(n));
  for (int i = 0; i < n; ++i) {
    // -K.F_i with K.F_i = -F_i^2 - 2
    rhs[i] = Rational(-(-g.self_intersections[i] - 2));
    for (int j = 0; j < n; ++j) a[i][j] = *s.entry(i, j).rational_value();
  }
  auto alpha = solve_linear(a, rhs);
  Codiscrepancy out;
  out.alpha = *alpha;
  out.cls = SingularityClass::LogTerminal;
  for (const auto& x : out.alpha) {
    if (x > 1) {
      out.cls = SingularityClass::NotLogCanonical;
      break;
    }
    if (x == 1) out.cls = SingularityClass::StrictlyLogCanonical;
  }
  return out;
}

ExactScalar alpha0_closed_form(long long m, const Vec<ExactScalar>& a,
                               const Vec<ExactScalar>& b) {
  if (a.size() != b.size()) throw input_error("alpha0: mismatched coefficient lists");
  ExactScalar num(m - 2);
  ExactScalar den(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    num -= a[i] * b[i];
    den -= a[i] * a[i];
  }
  if (den.is_zero()) throw domain_error("alpha0: degenerate configuration, m = sum a_i^2");
  return num / den;
}

Rational kx_squared(const ResolutionGraph& g, const Rational& ky_squared) {
  Codiscrepancy c = g.size() == 0 ? Codiscrepancy{{}, SingularityClass::LogTerminal}
                                  : codiscrepancy(g);
  Rational out = ky_squared;
  for (int i = 0; i < g.size(); ++i)
    out += c.alpha[i] * Rational(-g.self_intersections[i] - 2);  // K.F_i
  return out;
}

Rational noether_picard(const Rational& ky_squared) { return Rational(10) - ky_squared; }

LengthValue hirzebruch_length(long long n) {
  if (n < 2) throw domain_error("hirzebruch_length: invariant must be at least 2");
  ResolutionGraph g{{-n}, {{0}}};
  Rational alpha0 = codiscrepancy(g).alpha[0];
  return LengthValue{Rational(2) - alpha0, n};
}

LengthValue elliptic_ruled_length(long long e) {
  if (e < 2) throw domain_error("elliptic_ruled_length: degree parameter must be at least 2");
  // f*K = K_Y + B, and on the general fiber L: K_Y.L = -2, B.L = 1.
  Rational ky_dot_l(-2), b_dot_l(1);
  return LengthValue{-(ky_dot_l + b_dot_l), e};
}

LengthValue fibered_length(long long m, const Vec<ExactScalar>& a, const Vec<ExactScalar>& b,
                           const Rational& lambda) {
  if (lambda <= 0) throw domain_error("fibered_length: lambda must be positive");
  ExactScalar alpha0 = alpha0_closed_form(m, a, b);
  ExactScalar value = ExactScalar(lambda) * (ExactScalar(2) - alpha0);
  auto q = value.rational_value();
  if (!q) throw domain_error("fibered_length: irrational value, configuration not realizable");
  if (*q <= 0) throw domain_error("fibered_length: nonpositive value, configuration not realizable");
  return LengthValue{*q, m};
}

SequenceReport sequence_report(const std::vector<Rational>& values) {
  if (values.empty()) throw input_error("sequence_report: empty list");
  SequenceReport r;
  r.strictly_decreasing = true;
  r.strictly_increasing = true;
  r.constant = true;
  r.infimum = values[0];
  int run = 1;
  r.longest_increasing_run = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < r.infimum) r.infimum = values[i];
    if (values[i] >= values[i - 1]) r.strictly_decreasing = false;
    if (values[i] <= values[i - 1]) r.strictly_increasing = false;
    if (values[i] != values[i - 1]) r.constant = false;
    run = values[i] > values[i - 1] ? run + 1 : 1;
    r.longest_increasing_run = std::max(r.longest_increasing_run, run);
  }
  return r;
}

}  // namespace lcs
