#ifndef LCS_LINALG_HPP
#define LCS_LINALG_HPP

#include <optional>
#include <vector>

#include "lcs/exact_scalar.hpp"
#include "lcs/rational.hpp"

namespace lcs {

template <class T>
using Mat = std::vector<std::vector<T>>;
template <class T>
using Vec = std::vector<T>;

inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const ExactScalar& x) { return x.is_zero(); }

// Monic characteristic polynomial det(lambda*I - A), coefficients c[0..n]
// with c[n] = 1, by Faddeev-LeVerrier (exact; only divides by integers).
template <class T>
Vec<T> char_poly(const Mat<T>& a) {
  const std::size_t n = a.size();
  Vec<T> c(n + 1);
  c[n] = T(1);
  Mat<T> m(n, Vec<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat<T> am(n, Vec<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) am[i][j] += a[i][l] * m[l][j];
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = tr / T(-static_cast<long long>(k));
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
  }
  return c;
}

// Exact solve of A x = b by Gaussian elimination with first-nonzero pivoting.
// Returns nullopt when A is singular.
template <class T>
std::optional<Vec<T>> solve_linear(Mat<T> a, Vec<T> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && scalar_is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    T inv_p = T(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv_p;
    b[col] = b[col] * inv_p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || scalar_is_zero(a[row][col])) continue;
      T f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

template <class T>
std::optional<Mat<T>> invert(const Mat<T>& a) {
  const std::size_t n = a.size();
  Mat<T> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<T> e(n, T(0));
    e[j] = T(1);
    auto x = solve_linear(a, e);
    if (!x) return std::nullopt;
    cols[j] = std::move(*x);
  }
  Mat<T> inv(n, Vec<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

template <class T>
T determinant(Mat<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && scalar_is_zero(a[piv][col])) ++piv;
    if (piv == n) return T(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    T inv_p = T(1) / a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (scalar_is_zero(a[row][col])) continue;
      T f = a[row][col] * inv_p;
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Root-sign counts of a real-rooted monic polynomial by Descartes' rule,
// which is exact when every root is real (symmetric matrices qualify).
Signature signature_from_char_poly(const Vec<Rational>& coeffs);

// Same rule from the coefficient signs alone (ascending degree order);
// serves matrices whose characteristic polynomial has irrational
// coefficients in the radical algebra.
Signature signature_from_sign_sequence(const std::vector<int>& signs);

// LDL-style negative definiteness test for a symmetric matrix: all leading
// pivots strictly negative. A zero pivot means some leading minor vanishes,
// so the form cannot be definite.
bool is_negative_definite(const Mat<ExactScalar>& a);
bool is_negative_definite(const Mat<Rational>& a);

// Fraction-free (Bareiss) leading-minor test over machine integers; sound
// for the enumeration domain (size <= 8, entries bounded by 12, where the
// Hadamard bound keeps intermediates far from overflow).
bool is_negative_definite_ll(const std::vector<std::vector<long long>>& a);

}  // namespace lcs

#endif
