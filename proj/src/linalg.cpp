#include "lcs/linalg.hpp"

namespace lcs {

Signature signature_from_sign_sequence(const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size()) - 1;
  Signature sig;
  while (sig.zero < n && signs[sig.zero] == 0) ++sig.zero;

  auto sign_changes = [&](bool flip_odd) {
    int changes = 0;
    int last = 0;
    for (int i = n; i >= 0; --i) {
      int s = signs[i];
      if (s == 0) continue;
      if (flip_odd && (i % 2)) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  sig.positive = sign_changes(false);
  sig.negative = sign_changes(true);
  return sig;
}

Signature signature_from_char_poly(const Vec<Rational>& coeffs) {
  std::vector<int> signs;
  signs.reserve(coeffs.size());
  for (const auto& c : coeffs) signs.push_back(c.sign());
  return signature_from_sign_sequence(signs);
}

bool is_negative_definite(const Mat<ExactScalar>& a) {
  const std::size_t n = a.size();
  // rational entries take the cheaper arithmetic
  Mat<Rational> r(n, Vec<Rational>(n));
  bool rational = true;
  for (std::size_t i = 0; i < n && rational; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto q = a[i][j].rational_value();
      if (!q) {
        rational = false;
        break;
      }
      r[i][j] = *q;
    }
  if (rational) return is_negative_definite(r);

  Mat<ExactScalar> m = a;
  for (std::size_t k = 0; k < n; ++k) {
    int s = m[k][k].sign();
    if (s >= 0) return false;
    ExactScalar inv_p = ExactScalar(1) / m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      ExactScalar f = m[i][k] * inv_p;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

bool is_negative_definite(const Mat<Rational>& a) {
  const std::size_t n = a.size();
  Mat<Rational> m = a;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

bool is_negative_definite_ll(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<long long>> m = a;
  long long prev = 1;
  // Bareiss: m[k][k] after step k equals the k-th leading principal minor;
  // negative definiteness is strict sign alternation.
  for (std::size_t k = 0; k < n; ++k) {
    long long minor = m[k][k];
    if ((k % 2 == 0 && minor >= 0) || (k % 2 == 1 && minor <= 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = minor;
  }
  return true;
}

}  // namespace lcs
