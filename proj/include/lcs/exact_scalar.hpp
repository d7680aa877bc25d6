#ifndef LCS_EXACT_SCALAR_HPP
#define LCS_EXACT_SCALAR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

// An element of Q adjoined finitely many square roots, stored as a sparse
// sum sum_k q_k * sqrt(k) over squarefree radicands k (k = 1 is the rational
// part). Zero coefficients are never stored, so the zero element has an
// empty term map and equality is structural.
//
// The represented set is closed under +, -, * and, via conjugate products,
// under inversion, so it forms a field. All operations are exact.
class ExactScalar {
 public:
  using Radicand = std::int64_t;
  using Terms = std::map<Radicand, Rational>;

  ExactScalar() = default;
  ExactScalar(const Rational& q);  // NOLINT: implicit by design
  ExactScalar(long long n);        // NOLINT
  ExactScalar(int n) : ExactScalar(static_cast<long long>(n)) {}

  // q * sqrt(k) with k >= 0; k is reduced to squarefree form, so
  // sqrt_of(60) == 2*sqrt(15) and sqrt_of(9) == 3.
  static ExactScalar sqrt_of(long long k, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  // The rational value, if the support is contained in {1}.
  std::optional<Rational> rational_value() const;
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

  const Terms& terms() const { return terms_; }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);

  // Exact inverse; throws on zero. Computed by repeatedly multiplying with
  // the conjugate that flips one prime of the support, which strictly
  // shrinks the set of primes until the denominator is rational.
  ExactScalar inverse() const;
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExactScalar& o) const { return terms_ != o.terms_; }
  // Structural order (not the order of the real values); used for canonical
  // forms and map keys.
  bool operator<(const ExactScalar& o) const { return terms_ < o.terms_; }

  // Certified sign of the real value: -1, 0 or +1. Terminates on every
  // input: dyadic interval refinement with a stopping width derived from
  // the conjugate-product separation bound.
  int sign() const;

  // Product of all Galois conjugates (sign flips of the primes dividing the
  // support); always rational, and nonzero iff the element is nonzero.
  Rational conjugate_norm() const;

  // Floating approximation, for display only.
  double approx() const;

  std::string to_string() const;

 private:
  void add_term(Radicand k, const Rational& coeff);
  Terms terms_;
};

inline int sign_of(const ExactScalar& x) { return x.sign(); }

// Squarefree decomposition n = square * sf with sf squarefree (n >= 1).
struct SquarefreeParts {
  long long square_root;  // s with n = s^2 * squarefree
  long long squarefree;
};
SquarefreeParts squarefree_decompose(long long n);

std::vector<long long> prime_factors(long long n);

}  // namespace lcs

#endif
