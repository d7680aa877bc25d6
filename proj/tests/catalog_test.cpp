#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "lcs/catalog.hpp"
#include "lcs/log_canonical.hpp"

using namespace lcs;

namespace {

const Catalog& catalog() {
  static Catalog cat = Catalog::builtin();
  return cat;
}

VectorSystem inst(const std::string& id, const ParamAssignment& a) {
  const CatalogFamily* fam = catalog().find(id);
  REQUIRE(fam != nullptr);
  return instantiate(*fam, a);
}

bool has_match(const std::vector<CatalogMatch>& ms, const std::string& family) {
  return std::any_of(ms.begin(), ms.end(),
                     [&](const CatalogMatch& m) { return m.family == family; });
}

}  // namespace

TEST_CASE("instantiate fixed examples") {
  VectorSystem a3 = inst("Gamma1", {{"n", 3LL}, {"w", std::vector<long long>{2, 2, 2}}});
  CHECK(a3 == VectorSystem::from_integers({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));

  VectorSystem g1 = inst("G1", {{"b1", 1LL}, {"b2", 1LL}, {"r", 2LL}});
  CHECK(g1 == VectorSystem::from_integers({{-1, 2}, {2, -1}}));

  // four-ray template order: center first, then the rays
  VectorSystem d4 = inst("Gamma2", {{"p", 1LL},
                                    {"q", 1LL},
                                    {"r", 1LL},
                                    {"w", std::vector<long long>{2, 2, 2, 2}}});
  CHECK(d4 == VectorSystem::from_integers(
                  {{-2, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}}));
  CHECK(classify_kind(d4) == SystemClassKind::Elliptic);
}

TEST_CASE("instantiate rejects bad parameters") {
  // an all-2 cycle is parabolic, so the negative-definiteness side condition fires
  CHECK_THROWS_WITH_AS(
      (void)inst("Gamma5", {{"n", 3LL}, {"w", std::vector<long long>{2, 2, 2}}}),
      doctest::Contains("negative_definite"), Error);

  CHECK_THROWS_WITH_AS((void)inst("G14", {{"b1", 2LL}, {"b2", 3LL}, {"b3", 18LL}}),
                       doctest::Contains("tuple"), Error);

  CHECK_THROWS_WITH_AS((void)inst("G1", {{"b1", 2LL}, {"b2", 2LL}, {"r", 2LL}}),
                       doctest::Contains("r*r > b1*b2"), Error);

  CHECK_THROWS_AS((void)inst("Gamma1", {{"n", 2LL}, {"w", std::vector<long long>{2}}}), Error);
  CHECK_THROWS_AS((void)inst("Gamma1", {{"n", 2LL}, {"w", std::vector<long long>{2, 1}}}), Error);
}

TEST_CASE("claimed classes on spot instances") {
  VectorSystem q9 = inst("Q9", {{"a", 2LL}, {"b", 5LL}, {"c", 5LL}});
  CHECK(classify_kind(q9) == SystemClassKind::ConnectedParabolic);
  CHECK(is_log_canonical(q9).log_canonical);
  CHECK(is_minimal(q9));

  VectorSystem g14 = inst("G14", {{"b1", 2LL}, {"b2", 3LL}, {"b3", 17LL}});
  SystemClass c = classify(g14);
  CHECK(c.kind == SystemClassKind::Hyperbolic);
  CHECK(c.lanner);

  // radical family members classify through the sign-based route
  VectorSystem ppair = inst("PPair", {{"b1", 2LL}, {"b2", 3LL}});
  CHECK(ppair.entry(0, 1) == ExactScalar::sqrt_of(6));
  CHECK(classify_kind(ppair) == SystemClassKind::ConnectedParabolic);
  CHECK(is_log_canonical(ppair).log_canonical);
  CHECK(is_minimal(ppair));

  VectorSystem g6 = inst("G6", {{"b1", 2LL}, {"b2", 3LL}, {"b3", 5LL}});
  CHECK(classify(g6).lanner);
  CHECK(is_log_canonical(g6).log_canonical);
}

TEST_CASE("exclusion patterns are contractible") {
  for (long long b1 = 2; b1 <= 4; ++b1)
    for (long long b2 = 1; b2 <= 4; ++b2)
      for (long long r = 1; r <= 3; ++r) {
        VectorSystem s = inst("X1", {{"b1", b1}, {"b2", b2}, {"r", r}});
        if (signature_of(s).positive > 1) continue;
        if (is_log_canonical(s).log_canonical) CHECK(!is_minimal(s));
      }
}

TEST_CASE("identify") {
  VectorSystem a3 = VectorSystem::from_integers({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  auto ms = identify(catalog(), a3);
  REQUIRE(has_match(ms, "Gamma1"));
  for (const auto& m : ms)
    if (m.family == "Gamma1") {
      CHECK(std::get<long long>(m.params.at("n")) == 3);
      CHECK(std::get<std::vector<long long>>(m.params.at("w")) ==
            std::vector<long long>{2, 2, 2});
    }

  auto pm = identify(catalog(), VectorSystem::from_integers({{-1, 1}, {1, -1}}));
  CHECK(has_match(pm, "PPair"));
  CHECK(has_match(pm, "P1"));

  // off-catalog hyperbolic 5-system: a chain with an oversized multiplicity
  VectorSystem odd = VectorSystem::from_integers({{-1, 5, 0, 0, 0},
                                                  {5, -1, 1, 0, 0},
                                                  {0, 1, -2, 1, 0},
                                                  {0, 0, 1, -2, 1},
                                                  {0, 0, 0, 1, -2}});
  REQUIRE(signature_of(odd).positive == 1);
  CHECK(identify(catalog(), odd).empty());
}

TEST_CASE("identify returns verified permutation witnesses") {
  std::vector<std::pair<std::string, ParamAssignment>> picks = {
      {"Q9", {{"a", 4LL}, {"b", 3LL}, {"c", 3LL}}},
      {"H8_1", {{"b", 4LL}}},
      {"Gamma5", {{"n", 4LL}, {"w", std::vector<long long>{2, 2, 2, 3}}}},
      {"Gamma6", {{"b1", 2LL}, {"b2", 3LL}}},
      {"G6", {{"b1", 2LL}, {"b2", 3LL}, {"b3", 5LL}}},
      {"H0_13_1", {}},
      {"Q2", {{"n", 2LL}}},
      {"H7", {{"n", 1LL}}},
      {"H0a", {{"n", 5LL}}},
      {"G13_ext", {{"b1", 5LL}, {"b2", 2LL}, {"b3", 3LL}}},
  };
  for (const auto& [id, params] : picks) {
    CAPTURE(id);
    VectorSystem s = inst(id, params);
    auto ms = identify(catalog(), s);
    bool found_self = false;
    for (const auto& m : ms) {
      VectorSystem again = inst(m.family, m.params);
      REQUIRE(again.size() == s.size());
      for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j)
          CHECK(again.entry(i, j) == s.entry(m.permutation[i], m.permutation[j]));
      if (m.family == id && m.params == params) found_self = true;
    }
    CHECK(found_self);
  }
}

TEST_CASE("catalog audit has no unflagged disagreements") {
  ValidateOptions opt;
  opt.budget_per_family = 16;
  opt.jobs = 4;
  CatalogReport rep = validate_catalog(catalog(), opt);
  CHECK(rep.unflagged_issues == 0);
  CHECK(rep.total_samples > 200);
  for (const auto& f : rep.families)
    if (!f.issues.empty()) CHECK(f.ambiguous);
}

TEST_CASE("elliptic structure law on blow-up samples") {
  // graphs of elliptic log canonical systems split into simple-edge trees
  // and cycles (a double-edge pair counting as the 2-cycle); weight-1
  // vertices have valency at most 2
  testing::Rng rng(4301);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 60; ++it) {
    VectorSystem s = testing::random_negative_definite_system(rng, 2 + it % 4);
    for (int step = 0; step < 3; ++step) {
      std::vector<int> subset;
      for (int i = 0; i < s.size(); ++i)
        if (rng() % 3 == 0) subset.push_back(i);
      try {
        VectorSystem up = blow_up(s, subset);
        if (classify_kind(up) != SystemClassKind::Elliptic) break;
        if (!is_log_canonical(up).log_canonical) break;
        s = up;
      } catch (const Error&) {
        break;
      }
    }
    if (!is_log_canonical(s).log_canonical) continue;
    ++checked;
    for (const auto& comp : connected_components(s)) {
      VectorSystem sub = comp.size() == static_cast<std::size_t>(s.size())
                             ? s
                             : subsystem(s, comp);
      bool double_pair = sub.size() == 2 && graph_has_multiple_edge(sub);
      bool simple_tree = graph_is_tree(sub) && !graph_has_multiple_edge(sub);
      bool simple_cycle = graph_is_cycle(sub) && !graph_has_multiple_edge(sub);
      CHECK((double_pair || simple_tree || simple_cycle));
    }
    for (int i = 0; i < s.size(); ++i)
      if (s.first_kind(i)) CHECK(s.degree(i) <= 2);
  }
  CHECK(checked >= 50);
}

TEST_CASE("large connected parabolic systems are trees or cycles") {
  std::vector<VectorSystem> samples;
  samples.push_back(inst("Q2", {{"n", 6LL}}));   // 12 vertices
  samples.push_back(inst("Q6", {{"n", 11LL}}));
  samples.push_back(inst("Q6", {{"n", 10LL}}));
  samples.push_back(inst("Q2", {{"n", 4LL}}));   // 10 vertices
  for (const auto& s : samples) {
    REQUIRE(s.size() >= 10);
    REQUIRE(classify_kind(s) == SystemClassKind::ConnectedParabolic);
    REQUIRE(is_log_canonical(s).log_canonical);
    CHECK(!graph_has_multiple_edge(s));
    CHECK((graph_is_tree(s) || graph_is_cycle(s)));
    for (int i = 0; i < s.size(); ++i)
      if (s.first_kind(i)) CHECK(s.degree(i) <= 2);
  }
}

TEST_CASE("large Lanner systems are trees, cycles, or cycles plus a vertex") {
  // build big Lanner log canonical systems by blowing up adjacent pairs
  // starting from the small hyperbolic seeds
  testing::Rng rng(4302);
  std::vector<VectorSystem> seeds;
  seeds.push_back(VectorSystem::from_integers({{-1, 2}, {2, -1}}));
  seeds.push_back(VectorSystem::from_integers({{-1, 2}, {2, -2}}));
  seeds.push_back(VectorSystem::from_integers({{-1, 2}, {2, -3}}));
  for (long long b = 2; b <= 5; ++b)
    seeds.push_back(VectorSystem::from_integers({{-1, 1, 1}, {1, -1, 1}, {1, 1, -b}}));
  seeds.push_back(VectorSystem::from_integers({{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}));

  int found = 0;
  for (int trial = 0; trial < 400 && found < 12; ++trial) {
    VectorSystem s = seeds[rng() % seeds.size()];
    while (s.size() < 11) {
      std::vector<std::vector<int>> pairs;
      for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) {
          auto q = s.entry(i, j).rational_value();
          if (q && *q >= 1) pairs.push_back({i, j});
        }
      if (pairs.empty()) break;
      VectorSystem up;
      try {
        up = blow_up(s, pairs[rng() % pairs.size()]);
      } catch (const Error&) {
        break;
      }
      if (!is_log_canonical(up).log_canonical) break;
      s = up;
    }
    if (s.size() < 11 || !is_lanner(s)) continue;
    ++found;
    CHECK(!graph_has_multiple_edge(s));
    bool cycle_plus_one = false;
    for (int i = 0; i < s.size() && !cycle_plus_one; ++i) {
      if (s.degree(i) != 1) continue;
      std::vector<int> keep;
      for (int j = 0; j < s.size(); ++j)
        if (j != i) keep.push_back(j);
      if (graph_is_cycle(subsystem(s, keep))) cycle_plus_one = true;
    }
    CHECK((graph_is_tree(s) || graph_is_cycle(s) || cycle_plus_one));
    for (int i = 0; i < s.size(); ++i)
      if (s.first_kind(i)) CHECK(s.degree(i) <= 2);
  }
  CHECK(found >= 10);
}
