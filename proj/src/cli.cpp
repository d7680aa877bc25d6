#include "lcs/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "lcs/bound.hpp"
#include "lcs/catalog.hpp"
#include "lcs/json_io.hpp"
#include "lcs/log_canonical.hpp"
#include "lcs/surface.hpp"

namespace lcs::cli {

namespace {

VectorSystem load_system(const std::string& path) {
  std::string text = read_input(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == '{' || text[i] == '['))
    return system_from_json(Json::parse(text));
  return system_from_text(text);
}

Json signature_json(const Signature& sig) {
  return Json{{"p", sig.positive}, {"q", sig.negative}, {"z", sig.zero}};
}

Json class_json(const SystemClass& c) {
  Json j{{"class", to_string(c.kind)}};
  if (c.kind == SystemClassKind::Hyperbolic) j["lanner"] = c.lanner;
  return j;
}

std::vector<long long> parse_index_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

Vec<ExactScalar> parse_scalar_list(const std::string& text) {
  Vec<ExactScalar> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto q = parse_rational(tok);
    if (!q) throw input_error("cannot parse '" + tok + "' as p/q");
    out.push_back(ExactScalar(*q));
  }
  return out;
}

Rational parse_rational_or_fail(const std::string& text, const std::string& what) {
  auto q = parse_rational(text);
  if (!q) throw input_error("cannot parse " + what + " '" + text + "' as p/q");
  return *q;
}

int find_label(const VectorSystem& s, const std::string& name) {
  for (int i = 0; i < s.size(); ++i)
    if (s.label(i) == name) return i;
  // fall back to a 1-based index
  try {
    std::size_t used = 0;
    int idx = std::stoi(name, &used);
    if (used == name.size() && idx >= 1 && idx <= s.size()) return idx - 1;
  } catch (const std::exception&) {
  }
  throw input_error("no element named '" + name + "'");
}

Catalog load_catalog(const std::string& path) {
  if (path.empty()) return Catalog::builtin();
  return Catalog::from_json(Json::parse(read_input(path)));
}

struct Options {
  std::string format = "json";
  bool approx = false;
  bool verbose = false;
};

CommandResult finish(Json payload, std::vector<std::string> diagnostics = {}) {
  CommandResult r;
  r.payload = std::move(payload);
  r.diagnostics = std::move(diagnostics);
  return r;
}

CommandResult dispatch(const std::vector<std::string>& args, Options& opt) {
  CLI::App app{"exact classification of at most hyperbolic vector systems "
               "and log canonical surface invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--approx", opt.approx, "add decimal renderings next to exact values");
  app.add_flag("--verbose", opt.verbose, "include timing diagnostics");

  // classify
  std::string in_path;
  auto* classify_cmd = app.add_subcommand("classify", "signature and class of a system");
  classify_cmd->add_option("input", in_path, "system file (JSON or terse text), - for stdin")
      ->required();

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical element of an elliptic system");
  canonical_cmd->add_option("input", in_path)->required();

  auto* checklc_cmd = app.add_subcommand("check-lc", "log canonical test with witness");
  checklc_cmd->add_option("input", in_path)->required();

  auto* minimal_cmd = app.add_subcommand("minimal", "minimality and contractible elements");
  minimal_cmd->add_option("input", in_path)->required();

  std::string element;
  auto* contract_cmd = app.add_subcommand("contract", "contract a (-1)-element");
  contract_cmd->add_option("input", in_path)->required();
  contract_cmd->add_option("--element", element, "label or 1-based index")->required();

  std::string subset_text;
  auto* blowup_cmd = app.add_subcommand("blowup", "blow up a subset");
  blowup_cmd->add_option("input", in_path)->required();
  blowup_cmd->add_option("--subset", subset_text, "comma-separated 1-based indices (may be empty)");

  std::string cls_name = "elliptic";
  int max_size = 5, jobs = 1;
  long long max_weight = 6;
  bool lone_first_kind = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate minimal log canonical systems");
  enum_cmd->add_option("--class", cls_name, "elliptic | parabolic | hyperbolic | lanner");
  enum_cmd->add_option("--max-size", max_size)->required();
  enum_cmd->add_option("--max-weight", max_weight)->required();
  enum_cmd->add_flag("--include-lone-first-kind", lone_first_kind,
                     "treat an isolated (-1)-vector as minimal");
  enum_cmd->add_option("--jobs", jobs);

  std::string catalog_path, family_id, params_text;
  int budget = 48;
  std::uint64_t seed = 20240915;
  auto* catalog_cmd = app.add_subcommand("catalog", "classification catalog operations");
  catalog_cmd->add_option("--catalog", catalog_path, "catalog JSON (default: built in)");
  auto* cat_inst = catalog_cmd->add_subcommand("instantiate", "build a family member");
  cat_inst->add_option("--family", family_id)->required();
  cat_inst->add_option("--params", params_text, "JSON object of parameter values")->required();
  auto* cat_ident = catalog_cmd->add_subcommand("identify", "match a system against the catalog");
  cat_ident->add_option("input", in_path)->required();
  auto* cat_val = catalog_cmd->add_subcommand("validate", "audit catalog claims");
  cat_val->add_option("--budget", budget, "samples per family");
  cat_val->add_option("--seed", seed);
  cat_val->add_option("--jobs", jobs);
  auto* cat_list = catalog_cmd->add_subcommand("list", "list family ids");

  long long n_from = 2, n_to = 2, m_param = 0;
  std::string a_text, b_text, lambda_text = "1", ky2_text;
  auto* surface_cmd = app.add_subcommand("surface", "resolution-graph computations");
  auto* surf_codisc = surface_cmd->add_subcommand("codisc", "codiscrepancies of a graph");
  surf_codisc->add_option("input", in_path)->required();
  auto* surf_hirze = surface_cmd->add_subcommand("l-hirzebruch", "minimal fiber degrees, ruled family");
  surf_hirze->add_option("--n-from", n_from)->required();
  surf_hirze->add_option("--n-to", n_to)->required();
  auto* surf_ell = surface_cmd->add_subcommand("l-elliptic", "minimal fiber degrees, elliptic base");
  surf_ell->add_option("--e-from", n_from)->required();
  surf_ell->add_option("--e-to", n_to)->required();
  auto* surf_alpha = surface_cmd->add_subcommand("alpha0", "section coefficient, closed form");
  surf_alpha->add_option("--m", m_param)->required();
  surf_alpha->add_option("--a", a_text, "comma-separated rationals");
  surf_alpha->add_option("--b", b_text, "comma-separated rationals");
  auto* surf_report = surface_cmd->add_subcommand("report", "chain-condition report for a value list");
  surf_report->add_option("input", in_path, "JSON array of \"p/q\" values")->required();
  auto* surf_kx2 = surface_cmd->add_subcommand("kx2", "selfintersection of the pushed-down canonical class");
  surf_kx2->add_option("input", in_path)->required();
  surf_kx2->add_option("--ky2", ky2_text)->required();

  std::string c1_text, c2_text;
  int l_param = 2, cap = 8;
  auto* bound_cmd = app.add_subcommand("bound", "Gram-graph bound computations");
  auto* bound_eval = bound_cmd->add_subcommand("eval", "dimension bound from constants");
  bound_eval->add_option("--c1", c1_text)->required();
  bound_eval->add_option("--c2", c2_text)->required();
  auto* bound_analyze = bound_cmd->add_subcommand("analyze", "Lanner sizes and pair counts");
  bound_analyze->add_option("input", in_path)->required();
  bound_analyze->add_option("--l", l_param)->required();
  bound_analyze->add_option("--cap", cap);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  app.parse(argv);

  if (*classify_cmd) {
    VectorSystem s = load_system(in_path);
    ValidationReport val = validate(s, true);
    if (!val.valid(true)) {
      Json j{{"valid", false}, {"violations", val.violations}};
      CommandResult r = finish(j);
      r.exit_code = 1;
      return r;
    }
    SystemClass c = classify(s);
    Json j = class_json(c);
    j["signature"] = signature_json(signature_of(s));
    j["integer_system"] = val.integer_entries;
    return finish(j);
  }
  if (*canonical_cmd) {
    VectorSystem s = load_system(in_path);
    CanonicalElement k = canonical_element(s);
    Json alphas = Json::array();
    for (const auto& a : k.coefficients) alphas.push_back(to_string(a));
    return finish(Json{{"alpha", alphas}, {"labels", s.labels()}});
  }
  if (*checklc_cmd) {
    VectorSystem s = load_system(in_path);
    LogCanonicalResult r = is_log_canonical(s);
    Json j{{"log_canonical", r.log_canonical}};
    if (r.witness) {
      std::vector<std::string> labels;
      for (int i : r.witness->subsystem) labels.push_back(s.label(i));
      j["witness"] = Json{{"subsystem", labels},
                          {"element", s.label(r.witness->subsystem[r.witness->index])},
                          {"alpha", to_json(r.witness->alpha)},
                          {"strict_required", r.witness->strict_required}};
    }
    return finish(j);
  }
  if (*minimal_cmd) {
    VectorSystem s = load_system(in_path);
    auto contractible = contractible_elements(s);
    std::vector<std::string> labels;
    for (int i : contractible) labels.push_back(s.label(i));
    return finish(Json{{"minimal", contractible.empty()}, {"contractible", labels}});
  }
  if (*contract_cmd) {
    VectorSystem s = load_system(in_path);
    VectorSystem out = contract(s, find_label(s, element));
    return finish(Json{{"system", to_json(out)}});
  }
  if (*blowup_cmd) {
    VectorSystem s = load_system(in_path);
    std::vector<int> subset;
    for (long long i : parse_index_list(subset_text)) {
      if (i < 1 || i > s.size()) throw input_error("blowup: index out of range");
      subset.push_back(static_cast<int>(i - 1));
    }
    VectorSystem out = blow_up(s, subset);
    return finish(Json{{"system", to_json(out)}});
  }
  if (*enum_cmd) {
    EnumerateOptions eo;
    eo.max_size = max_size;
    eo.max_weight = max_weight;
    eo.include_isolated_first_kind = lone_first_kind;
    eo.jobs = jobs;
    if (cls_name == "elliptic") eo.cls = SystemClassKind::Elliptic;
    else if (cls_name == "parabolic") eo.cls = SystemClassKind::ConnectedParabolic;
    else if (cls_name == "hyperbolic") eo.cls = SystemClassKind::Hyperbolic;
    else if (cls_name == "lanner") {
      eo.cls = SystemClassKind::Hyperbolic;
      eo.lanner = true;
    } else {
      throw input_error("unknown class '" + cls_name + "'");
    }
    auto systems = enumerate_minimal(eo);
    Json list = Json::array();
    std::map<int, int> size_counts;
    for (const auto& s : systems) {
      list.push_back(to_json(s));
      ++size_counts[s.size()];
    }
    Json summary = Json::object();
    for (const auto& [size, count] : size_counts) summary[std::to_string(size)] = count;
    return finish(Json{{"systems", list}, {"count", systems.size()}, {"by_size", summary}});
  }
  if (*catalog_cmd) {
    Catalog cat = load_catalog(catalog_path);
    if (*cat_list) {
      Json ids = Json::array();
      for (const auto& f : cat.families())
        ids.push_back(Json{{"id", f.id}, {"kind", f.kind}, {"notes", f.notes}});
      return finish(Json{{"families", ids}});
    }
    if (*cat_inst) {
      const CatalogFamily* fam = cat.find(family_id);
      if (!fam) throw input_error("no catalog family '" + family_id + "'");
      ParamAssignment a = assignment_from_json(Json::parse(params_text));
      VectorSystem s = instantiate(*fam, a);
      return finish(Json{{"system", to_json(s)}});
    }
    if (*cat_ident) {
      VectorSystem s = load_system(in_path);
      Json matches = Json::array();
      for (const auto& m : identify(cat, s)) {
        matches.push_back(Json{{"family", m.family},
                               {"params", to_json(m.params)},
                               {"permutation", m.permutation}});
      }
      return finish(Json{{"matches", matches}});
    }
    if (*cat_val) {
      ValidateOptions vo;
      vo.budget_per_family = budget;
      vo.seed = seed;
      vo.jobs = jobs;
      CatalogReport rep = validate_catalog(cat, vo);
      Json fams = Json::array();
      for (const auto& f : rep.families) {
        Json issues = Json::array();
        for (const auto& issue : f.issues)
          issues.push_back(Json{{"params", to_json(issue.params)}, {"what", issue.what}});
        fams.push_back(Json{{"id", f.id},
                            {"samples", f.samples},
                            {"rejected", f.side_condition_rejects},
                            {"ambiguous", f.ambiguous},
                            {"issues", issues}});
      }
      CommandResult r = finish(Json{{"families", fams},
                                    {"total_samples", rep.total_samples},
                                    {"unflagged_issues", rep.unflagged_issues},
                                    {"flagged_issues", rep.flagged_issues}});
      if (rep.unflagged_issues > 0) r.exit_code = 1;
      return r;
    }
    throw input_error("catalog: expected a subcommand");
  }
  if (*surface_cmd) {
    if (*surf_codisc) {
      ResolutionGraph g = graph_from_json(Json::parse(read_input(in_path)));
      Codiscrepancy c = codiscrepancy(g);
      Json alphas = Json::array();
      for (const auto& a : c.alpha) alphas.push_back(to_string(a));
      return finish(Json{{"alpha", alphas}, {"singularity", to_string(c.cls)}});
    }
    if (*surf_hirze) {
      if (n_from < 2 || n_to < n_from) throw input_error("need 2 <= n-from <= n-to");
      Json values = Json::array();
      for (long long n = n_from; n <= n_to; ++n)
        values.push_back(to_string(hirzebruch_length(n).value));
      return finish(Json{{"values", values}});
    }
    if (*surf_ell) {
      if (n_from < 2 || n_to < n_from) throw input_error("need 2 <= e-from <= e-to");
      Json values = Json::array();
      for (long long e = n_from; e <= n_to; ++e)
        values.push_back(to_string(elliptic_ruled_length(e).value));
      return finish(Json{{"values", values}});
    }
    if (*surf_alpha) {
      auto a = parse_scalar_list(a_text);
      auto b = parse_scalar_list(b_text);
      ExactScalar v = alpha0_closed_form(m_param, a, b);
      return finish(Json{{"alpha0", to_json(v)}});
    }
    if (*surf_report) {
      Json arr = Json::parse(read_input(in_path));
      if (!arr.is_array()) throw input_error("report: expected a JSON array of values");
      std::vector<Rational> values;
      for (const auto& v : arr) {
        if (v.is_number_integer()) values.push_back(Rational(v.get<long long>()));
        else values.push_back(parse_rational_or_fail(v.get<std::string>(), "value"));
      }
      SequenceReport rep = sequence_report(values);
      return finish(Json{{"strictly_decreasing", rep.strictly_decreasing},
                         {"strictly_increasing", rep.strictly_increasing},
                         {"constant", rep.constant},
                         {"strictly_increasing_run_max", rep.longest_increasing_run},
                         {"limit_candidate", to_string(rep.infimum)}});
    }
    if (*surf_kx2) {
      ResolutionGraph g = graph_from_json(Json::parse(read_input(in_path)));
      Rational ky2 = parse_rational_or_fail(ky2_text, "--ky2");
      return finish(Json{{"kx2", to_string(kx_squared(g, ky2))},
                         {"picard", to_string(noether_picard(ky2))}});
    }
    throw input_error("surface: expected a subcommand");
  }
  if (*bound_cmd) {
    if (*bound_eval) {
      Rational c1 = parse_rational_or_fail(c1_text, "--c1");
      Rational c2 = parse_rational_or_fail(c2_text, "--c2");
      return finish(Json{{"bound", to_string(dimension_bound(c1, c2))}});
    }
    if (*bound_analyze) {
      VectorSystem s = load_system(in_path);
      LannerScan scan = max_lanner_size(s, cap);
      PairCounts counts = elliptic_pair_counts(s, l_param, cap);
      std::vector<std::string> diags;
      if (scan.cap_reached) diags.push_back("cap bound reached, Lanner size is a lower bound");
      std::vector<std::string> w1, w2, wl;
      for (int i : counts.c1_witness) w1.push_back(s.label(i));
      for (int i : counts.c2_witness) w2.push_back(s.label(i));
      for (int i : scan.witness) wl.push_back(s.label(i));
      Json j{{"max_lanner_size", scan.max_size},
             {"lanner_witness", wl},
             {"c1", to_string(counts.c1)},
             {"c2", to_string(counts.c2)},
             {"c1_witness", w1},
             {"c2_witness", w2},
             {"bound", to_string(dimension_bound(counts.c1, counts.c2))}};
      return finish(j, diags);
    }
    throw input_error("bound: expected a subcommand");
  }
  throw input_error("no command given");
}

void add_approx(Json& j) {
  if (j.is_object()) {
    Json extras = Json::object();
    for (auto& [key, value] : j.items()) {
      if (value.is_string()) {
        auto q = parse_rational(value.get<std::string>());
        if (q) extras[key + "_approx"] = to_double(*q);
      } else {
        add_approx(value);
      }
    }
    for (auto& [key, value] : extras.items()) j[key] = value;
  } else if (j.is_array()) {
    for (auto& v : j) add_approx(v);
  }
}

void render_table(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_table(value, os, indent + 2);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_table(v, os, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options opt;
  try {
    CommandResult r = dispatch(args, opt);
    r.format = opt.format;
    r.approx = opt.approx;
    return r;
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.payload = Json{{"status", "ok"}, {"help", "see README for command reference"}};
    return r;
  } catch (const CLI::ParseError& e) {
    CommandResult r;
    r.exit_code = 2;
    r.payload = Json{{"error", Json{{"kind", "input"}, {"message", e.what()}}}};
    return r;
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = static_cast<int>(e.kind);
    const char* kind = e.kind == Error::Kind::Domain ? "domain"
                       : e.kind == Error::Kind::Input ? "input"
                                                      : "resource";
    r.payload = Json{{"error", Json{{"kind", kind}, {"message", e.what()}}}};
    return r;
  } catch (const nlohmann::json::exception& e) {
    CommandResult r;
    r.exit_code = 2;
    r.payload = Json{{"error", Json{{"kind", "input"}, {"message", e.what()}}}};
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit_code = 2;
    r.payload = Json{{"error", Json{{"kind", "input"}, {"message", e.what()}}}};
    return r;
  }
}

std::string render(const CommandResult& result) {
  Json out = Json{{"status", result.ok() ? "ok" : "error"}};
  for (const auto& [key, value] : result.payload.items()) out[key] = value;
  if (!result.diagnostics.empty()) out["diagnostics"] = result.diagnostics;
  if (result.approx) add_approx(out);
  if (result.format == "table") {
    std::ostringstream os;
    render_table(out, os, 0);
    return os.str();
  }
  return out.dump(2) + "\n";
}

}  // namespace lcs::cli
