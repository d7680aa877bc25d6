#include "lcs/exact_scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lcs {

namespace {

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

}  // namespace

SquarefreeParts squarefree_decompose(long long n) {
  if (n < 1) throw input_error("squarefree_decompose: argument must be positive");
  SquarefreeParts out{1, 1};
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) out.square_root *= p;
    if (e % 2) out.squarefree *= p;
  }
  out.squarefree *= n;  // leftover prime (or 1)
  return out;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

ExactScalar::ExactScalar(const Rational& q) {
  if (q != 0) terms_[1] = q;
}

ExactScalar::ExactScalar(long long n) {
  if (n != 0) terms_[1] = Rational(n);
}

ExactScalar ExactScalar::sqrt_of(long long k, const Rational& coeff) {
  if (k < 0) throw input_error("sqrt_of: negative radicand");
  ExactScalar x;
  if (k == 0 || coeff == 0) return x;
  auto parts = squarefree_decompose(k);
  x.add_term(parts.squarefree, coeff * Rational(parts.square_root));
  return x;
}

std::optional<Rational> ExactScalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

void ExactScalar::add_term(Radicand k, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out;
  for (const auto& [k, q] : terms_) out.terms_.emplace(k, -q);
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [k, q] : o.terms_) add_term(k, q);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [k, q] : o.terms_) add_term(k, -q);
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  // sqrt(j)*sqrt(k) = g*sqrt(j'k') with g = gcd(j,k); j'k' is squarefree
  // because j' and k' are coprime and squarefree themselves.
  ExactScalar out;
  for (const auto& [j, qj] : a.terms_) {
    for (const auto& [k, qk] : b.terms_) {
      long long g = std::gcd(j, k);
      long long rad = (j / g) * (k / g);
      out.add_term(rad, qj * qk * Rational(g));
    }
  }
  return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  *this = *this * o;
  return *this;
}

namespace {

// Flips the sign of every term whose radicand is divisible by p.
ExactScalar flip_prime(const ExactScalar& x, long long p) {
  ExactScalar out = x;
  ExactScalar delta;
  for (const auto& [k, q] : x.terms())
    if (k % p == 0) delta += ExactScalar::sqrt_of(k, -2 * q);
  out += delta;
  return out;
}

long long some_support_prime(const ExactScalar& x) {
  for (const auto& [k, q] : x.terms())
    if (k > 1) return prime_factors(k).front();
  return 0;
}

}  // namespace

Rational ExactScalar::conjugate_norm() const {
  ExactScalar x = *this;
  while (true) {
    if (auto q = x.rational_value()) return *q;
    long long p = some_support_prime(x);
    x = x * flip_prime(x, p);
  }
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw domain_error("ExactScalar: division by zero");
  if (auto q = rational_value()) return ExactScalar(Rational(1) / *q);
  long long p = some_support_prime(*this);
  ExactScalar conj = flip_prime(*this, p);
  return conj * (*this * conj).inverse();
}

namespace {

struct RationalInterval {
  Rational lo, hi;
};

// Encloses sqrt(k) in a dyadic interval of width 2^-prec.
RationalInterval sqrt_interval(long long k, unsigned prec) {
  Int scaled = Int(k) << (2 * prec);
  Int s = isqrt(scaled);
  Int denom = Int(1) << prec;
  return {Rational(s, denom), Rational(s + 1, denom)};
}

RationalInterval value_interval(const ExactScalar::Terms& terms, unsigned prec) {
  RationalInterval acc{0, 0};
  for (const auto& [k, q] : terms) {
    if (k == 1) {
      acc.lo += q;
      acc.hi += q;
      continue;
    }
    auto s = sqrt_interval(k, prec);
    if (q > 0) {
      acc.lo += q * s.lo;
      acc.hi += q * s.hi;
    } else {
      acc.lo += q * s.hi;
      acc.hi += q * s.lo;
    }
  }
  return acc;
}

}  // namespace

int ExactScalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second.sign();

  // Separation bound: |x| >= |N(x)| / V^(2^s - 1), where N is the product of
  // all 2^s prime-sign conjugates and V bounds every conjugate from above.
  std::optional<Rational> separation;
  for (unsigned prec = 16;; prec *= 2) {
    auto iv = value_interval(terms_, prec);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (!separation) {
      Rational bound = 0;
      int prime_count = 0;
      {
        std::vector<long long> primes;
        for (const auto& [k, q] : terms_) {
          if (k == 1) {
            bound += abs(q);
            continue;
          }
          for (long long p : prime_factors(k))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
          bound += abs(q) * sqrt_interval(k, 8).hi;
        }
        prime_count = static_cast<int>(primes.size());
      }
      if (bound < 1) bound = 1;
      Rational norm = abs(conjugate_norm());
      assert(norm != 0);
      Rational pow = 1;
      long long reps = (1LL << prime_count) - 1;
      for (long long i = 0; i < reps; ++i) pow *= bound;
      separation = norm / pow;
    }
    if (iv.hi - iv.lo < *separation) {
      // Width below the separation bound excludes zero; one side decided above
      // unless the value is zero, which the norm already ruled out.
      return iv.hi > 0 ? 1 : -1;
    }
  }
}

double ExactScalar::approx() const {
  double v = 0;
  for (const auto& [k, q] : terms_) v += to_double(q) * std::sqrt(static_cast<double>(k));
  return v;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    Rational a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 1) {
      os << lcs::to_string(a);
    } else {
      if (a != 1) os << lcs::to_string(a) << "*";
      os << "sqrt(" << k << ")";
    }
  }
  return os.str();
}

}  // namespace lcs
