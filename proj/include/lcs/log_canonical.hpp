#ifndef LCS_LOG_CANONICAL_HPP
#define LCS_LOG_CANONICAL_HPP

#include <optional>
#include <vector>

#include "lcs/system.hpp"

namespace lcs {

// Coefficients of the canonical element K = sum alpha_i v_i, determined by
// K . v_i = b_i - 2. Exists and is unique exactly when the system is
// elliptic.
struct CanonicalElement {
  std::vector<Rational> coefficients;
};

CanonicalElement canonical_element(const VectorSystem& s);

// Radical-capable variant used on systems with sqrt entries.
Vec<ExactScalar> canonical_element_exact(const VectorSystem& s);

struct LogCanonicalWitness {
  std::vector<int> subsystem;  // indices into the parent system
  int index;                   // offending position inside `subsystem`
  ExactScalar alpha;
  bool strict_required;  // the component carried a first-kind element
};

struct LogCanonicalResult {
  bool log_canonical = false;
  std::optional<LogCanonicalWitness> witness;
};

// Checks every connected elliptic subsystem: all alpha_i >= -1, strictly
// when the subsystem contains a first-kind element. Connected subsystems
// suffice because the canonical element of a disjoint union restricts to
// the canonical element of each component.
LogCanonicalResult is_log_canonical(const VectorSystem& s);

// First-kind elements e whose every pair {v, e} is elliptic. For log
// canonical systems these are exactly the contractible elements; callers
// assert log-canonicity.
std::vector<int> contractible_elements(const VectorSystem& s);

bool is_minimal(const VectorSystem& s);

struct EnumerateOptions {
  SystemClassKind cls = SystemClassKind::Elliptic;
  std::optional<bool> lanner;  // filter on the Lanner flag when hyperbolic
  int max_size = 5;
  long long max_weight = 6;
  // A lone (-1)-vector is vacuously contractible, hence not minimal under
  // the default reading; this flag admits it anyway for comparison.
  bool include_isolated_first_kind = false;
  int jobs = 1;
};

// All connected integer systems up to equivalence with size <= max_size,
// weights and off-diagonal entries <= max_weight, that are log canonical,
// minimal and of the requested class. Guarded: max_size <= 8,
// max_weight <= 12.
std::vector<VectorSystem> enumerate_minimal(const EnumerateOptions& opt);

}  // namespace lcs

#endif
