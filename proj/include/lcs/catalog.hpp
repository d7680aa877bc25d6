#ifndef LCS_CATALOG_HPP
#define LCS_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lcs/system.hpp"

namespace lcs {

// A catalog family is a parameterized recipe for a vector system together
// with its claimed classification. Shapes come in three kinds:
//   graph     - weighted-graph template (chain, cycle, tstar, star,
//               forkfork, forkfork_tail, cycle_pendant, explicit)
//   matrix    - explicit Gram entries, possibly with sqrt() expressions
//   exclusion - a Gram shape whose log canonical instances are never
//               minimal (used as a negative pattern, not a classification)
struct ParamSpec {
  enum class Type { Int, Weights };
  std::string name;
  Type type = Type::Int;
  long long min = 1;
  std::optional<long long> max;
  std::string length;  // weights only: expression in the int params
};

struct CatalogClaim {
  std::optional<SystemClassKind> cls;
  std::optional<bool> lanner;
  std::optional<bool> log_canonical;
  std::optional<bool> minimal;
  bool non_minimal_when_log_canonical = false;  // exclusion entries
};

struct CatalogFamily {
  std::string id;
  std::string kind;  // "graph" | "matrix" | "exclusion"
  std::string notes;
  std::vector<ParamSpec> params;
  std::vector<std::string> tuple_params;            // params jointly ranging over `tuples`
  std::vector<std::vector<long long>> tuples;
  std::vector<std::string> constraints;             // predicate expressions
  std::vector<std::string> side_conditions;         // currently: negative_definite
  nlohmann::json tmpl;
  CatalogClaim claimed;
  bool ambiguous = false;
};

using ParamValue = std::variant<long long, std::vector<long long>>;
using ParamAssignment = std::map<std::string, ParamValue>;

class Catalog {
 public:
  static Catalog builtin();
  static Catalog from_json(const nlohmann::json& j);

  const std::vector<CatalogFamily>& families() const { return families_; }
  const CatalogFamily* find(const std::string& id) const;

 private:
  std::vector<CatalogFamily> families_;
};

// Builds the concrete system; throws an input error naming the violated
// predicate when the assignment breaks a constraint or side condition.
VectorSystem instantiate(const CatalogFamily& family, const ParamAssignment& params);

struct CatalogMatch {
  std::string family;
  ParamAssignment params;
  // permutation[k] = input index realizing template vertex k
  std::vector<int> permutation;
};

// All (family, parameters) whose instantiation is equivalent to the input.
std::vector<CatalogMatch> identify(const Catalog& catalog, const VectorSystem& s);

struct CatalogIssue {
  std::string family;
  ParamAssignment params;
  std::string what;
};

struct FamilyReport {
  std::string id;
  bool ambiguous = false;
  int samples = 0;
  int side_condition_rejects = 0;
  std::vector<CatalogIssue> issues;
};

struct CatalogReport {
  std::vector<FamilyReport> families;
  int total_samples = 0;
  int unflagged_issues = 0;  // issues on families not marked ambiguous
  int flagged_issues = 0;
};

struct ValidateOptions {
  int budget_per_family = 48;   // sampled assignments per family
  long long param_cap = 12;     // cap for unbounded integer parameters
  long long weight_cap = 6;     // cap for sampled weight lists
  std::uint64_t seed = 20240915;
  int jobs = 1;
};

// Samples every family (finite tuple lists exhaustively, unbounded
// parameters at the boundary plus random interior points) and checks the
// claimed class, log-canonicity and minimality against the classifier.
CatalogReport validate_catalog(const Catalog& catalog, const ValidateOptions& opt);

// Exact Gram-isomorphism search; returns the index map a -> b.
std::optional<std::vector<int>> find_isomorphism(const VectorSystem& a, const VectorSystem& b);

// Expression evaluation over the exact scalar algebra; variables are the
// integer parameters. Grammar: integers, vars, + - * /, sqrt(e), (e).
ExactScalar eval_expr(const std::string& text, const std::map<std::string, long long>& vars);
// expr CMP expr with CMP in { <, <=, >, >=, ==, != }.
bool eval_predicate(const std::string& text, const std::map<std::string, long long>& vars);

nlohmann::json to_json(const ParamAssignment& a);
ParamAssignment assignment_from_json(const nlohmann::json& j);

}  // namespace lcs

#endif
