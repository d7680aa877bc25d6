#ifndef LCS_SURFACE_HPP
#define LCS_SURFACE_HPP

#include <vector>

#include "lcs/log_canonical.hpp"
#include "lcs/system.hpp"

namespace lcs {

// Exceptional-curve configuration of a minimal resolution: integral
// components with self-intersections F_i^2 <= -1 and pairwise intersection
// numbers >= 0. Components are assumed rational, so K.F_j = -F_j^2 - 2.
struct ResolutionGraph {
  std::vector<long long> self_intersections;
  std::vector<std::vector<long long>> meets;  // symmetric, diagonal ignored

  int size() const { return static_cast<int>(self_intersections.size()); }
};

// The graph's intersection matrix viewed as a vector system.
VectorSystem to_system(const ResolutionGraph& g);

enum class SingularityClass {
  LogTerminal,          // all coefficients < 1
  StrictlyLogCanonical, // all <= 1, some coefficient equal to 1
  NotLogCanonical       // some coefficient > 1
};

const char* to_string(SingularityClass c);

struct Codiscrepancy {
  std::vector<Rational> alpha;  // f* K_X = K_Y + sum alpha_i F_i
  SingularityClass cls;
};

// Solves sum_i alpha_i (F_i . F_j) = -K.F_j exactly; requires a negative
// definite intersection matrix.
Codiscrepancy codiscrepancy(const ResolutionGraph& g);

// Coefficient of the section in the diagonalized fibered configuration:
// (m - 2 - sum a_i b_i) / (m - sum a_i^2).
ExactScalar alpha0_closed_form(long long m, const Vec<ExactScalar>& a, const Vec<ExactScalar>& b);

// K_X^2 = K_Y^2 + sum alpha_i (K_Y . F_i).
Rational kx_squared(const ResolutionGraph& g, const Rational& ky_squared);

// rho(Y) = 10 - K_Y^2 on a rational surface.
Rational noether_picard(const Rational& ky_squared);

struct LengthValue {
  Rational value;
  long long parameter;
};

// Contraction of the negative section of the ruled surface with invariant
// n >= 2: the minimal fiber degree is 2 - alpha_0, computed from the
// codiscrepancy of the single (-n)-curve rather than hard-coded.
LengthValue hirzebruch_length(long long n);

// Contraction of the negative section over an elliptic base, e >= 2; the
// pullback adds the full section, so the fiber degree is constant.
LengthValue elliptic_ruled_length(long long e);

// lambda * (2 - alpha_0) for a fiber class lambda*L.
LengthValue fibered_length(long long m, const Vec<ExactScalar>& a, const Vec<ExactScalar>& b,
                           const Rational& lambda);

struct SequenceReport {
  bool strictly_decreasing = false;
  bool strictly_increasing = false;
  bool constant = false;
  int longest_increasing_run = 0;  // longest strictly increasing run length
  Rational infimum;                // inf of the finite list
};

SequenceReport sequence_report(const std::vector<Rational>& values);

}  // namespace lcs

#endif
