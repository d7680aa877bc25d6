#ifndef LCS_RATIONAL_HPP
#define LCS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace lcs {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// canonical form (gcd(num, den) = 1, den >= 1), which is exactly the
// invariant we need; no arithmetic here ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  enum class Kind { Domain = 1, Input = 2, Resource = 3 };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error domain_error(const std::string& msg) { return Error(Error::Kind::Domain, msg); }
inline Error input_error(const std::string& msg) { return Error(Error::Kind::Input, msg); }
inline Error resource_error(const std::string& msg) { return Error(Error::Kind::Resource, msg); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Renders "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" and "p/q" with optional sign; rejects everything else.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace lcs

#endif
