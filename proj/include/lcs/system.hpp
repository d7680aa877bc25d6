#ifndef LCS_SYSTEM_HPP
#define LCS_SYSTEM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcs/linalg.hpp"

namespace lcs {

enum class SystemClassKind {
  Elliptic,                  // Gram negative definite
  ConnectedParabolic,        // negative semidefinite, not definite, connected graph
  Hyperbolic,                // signature has one positive eigenvalue
  OtherNegativeSemidefinite  // semidefinite with disconnected graph
};

const char* to_string(SystemClassKind kind);

struct SystemClass {
  SystemClassKind kind;
  bool lanner = false;  // meaningful only when kind == Hyperbolic
};

// A finite set of vectors given by its Gram matrix. Entries live in the
// exact algebra Q(sqrt k); the integer subclass has a_ij in Z, a_ii <= -1,
// a_ij >= 0 for i != j. The at-most-hyperbolic condition (at most one
// positive eigenvalue) is checked by validate(), not by the constructor.
class VectorSystem {
 public:
  VectorSystem() = default;  // the empty system
  VectorSystem(Mat<ExactScalar> gram, std::vector<std::string> labels = {});

  static VectorSystem from_integers(const std::vector<std::vector<long long>>& gram,
                                    std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(gram_.size()); }
  const Mat<ExactScalar>& gram() const { return gram_; }
  const ExactScalar& entry(int i, int j) const { return gram_[i][j]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool integer_entries() const;
  // b_i = -a_ii when the diagonal entry is a (negative) integer.
  std::optional<Int> weight(int i) const;
  bool first_kind(int i) const;  // a_ii == -1
  bool has_edge(int i, int j) const { return i != j && !gram_[i][j].is_zero(); }
  int degree(int i) const;

  bool operator==(const VectorSystem& o) const { return gram_ == o.gram_; }

 private:
  std::vector<std::string> labels_;
  Mat<ExactScalar> gram_;
};

struct ValidationReport {
  bool symmetric = true;  // constructor enforces this; kept for completeness
  bool integer_entries = false;
  bool diagonal_ok = false;       // a_ii <= -1
  bool off_diagonal_ok = false;   // a_ij >= 0 for i != j
  bool at_most_hyperbolic = false;
  Signature sig;
  std::vector<std::string> violations;

  bool valid(bool allow_radical) const {
    return diagonal_ok && off_diagonal_ok && at_most_hyperbolic &&
           (allow_radical || integer_entries);
  }
};

ValidationReport validate(const VectorSystem& s, bool allow_radical);

// Exact signature via the characteristic polynomial and Descartes' rule.
// Throws a domain error when a char-poly coefficient is irrational (a
// radical configuration outside the supported algebra).
Signature signature_of(const VectorSystem& s);

SystemClassKind classify_kind(const VectorSystem& s);
SystemClass classify(const VectorSystem& s);

VectorSystem subsystem(const VectorSystem& s, const std::vector<int>& indices);

// Hyperbolic with no hyperbolic proper subsystem. One-vertex deletions
// suffice: subsystems of non-hyperbolic systems stay non-hyperbolic, so a
// hyperbolic proper subsystem extends to a hyperbolic (n-1)-subsystem.
bool is_lanner(const VectorSystem& s);

std::vector<std::vector<int>> connected_components(const VectorSystem& s);
bool is_connected(const VectorSystem& s);

// Contraction of a (-1)-vector e: v_i -> v_i + (v_i . e) e. Requires
// e^2 = -1 and, for every other i, v_i.e = 0 or (v_i^2 <= -2, v_i.e = 1).
VectorSystem contract(const VectorSystem& s, int e);

// Indices of vectors pairing 1 with e in a contraction of e (the subset the
// inverse blow-up must target).
std::vector<int> contraction_subset(const VectorSystem& s, int e);

// Inverse of contraction: adds a (-1)-vector meeting exactly the subset.
// Requires a_ij >= 1 for distinct i, j in the subset.
VectorSystem blow_up(const VectorSystem& s, const std::vector<int>& subset,
                     const std::string& new_label = "");

// Gram matrices equal after some relabeling of indices.
bool is_equivalent(const VectorSystem& a, const VectorSystem& b);

// Total invariant: equal keys iff equivalent systems.
std::string canonical_key(const VectorSystem& s);

// Weighted-graph view: vertices carry b_i, edges carry a_ij != 0.
struct WeightedGraph {
  struct Edge {
    int a, b;
    ExactScalar weight;
  };
  std::vector<ExactScalar> vertex_weights;
  std::vector<Edge> edges;
};
WeightedGraph weighted_graph(const VectorSystem& s);
VectorSystem from_weighted_graph(const WeightedGraph& g);

// Calls fn on every nonempty connected vertex subset with at most max_size
// elements (each exactly once, ascending order inside the subset). fn
// returning false stops the enumeration.
void for_each_connected_subset(const VectorSystem& s, int max_size,
                               const std::function<bool(const std::vector<int>&)>& fn);

bool graph_is_tree(const VectorSystem& s);
bool graph_is_cycle(const VectorSystem& s);
bool graph_has_multiple_edge(const VectorSystem& s);  // some a_ij >= 2

}  // namespace lcs

#endif
