#include <doctest.h>

#include "generators.hpp"
#include "lcs/bound.hpp"
#include "lcs/catalog.hpp"

using namespace lcs;

namespace {

VectorSystem path_system(int n) {
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = 1;
  return VectorSystem::from_integers(g);
}

}  // namespace

TEST_CASE("largest Lanner subsystem") {
  CHECK(max_lanner_size(path_system(3), 8).max_size == 0);

  VectorSystem padded = VectorSystem::from_integers({{-1, 2, 0}, {2, -1, 0}, {0, 0, -2}});
  LannerScan scan = max_lanner_size(padded, 8);
  CHECK(scan.max_size == 2);
  REQUIRE(scan.witness.size() == 2);
  CHECK(is_lanner(subsystem(padded, scan.witness)));

  // a minimal Lanner catalog member is its own witness
  Catalog cat = Catalog::builtin();
  VectorSystem h5 = instantiate(*cat.find("H5"), {});
  LannerScan all = max_lanner_size(h5, 8);
  CHECK(all.max_size == h5.size());
  CHECK(!all.cap_reached);

  LannerScan capped = max_lanner_size(h5, 3);
  CHECK(capped.cap_reached);
  CHECK(capped.max_size <= 3);
}

TEST_CASE("distance pair ratios") {
  // path with l = 2: no pairs at distance <= 0, and the n-1 edges land in
  // the (0, 1] band
  for (int n : {2, 4, 7}) {
    PairCounts pc = elliptic_pair_counts(path_system(n), 2, 8);
    CHECK(pc.c1 == 0);
    CHECK(pc.c2 == Rational(n - 1, n));
  }

  VectorSystem single = VectorSystem::from_integers({{-2}});
  PairCounts pc = elliptic_pair_counts(single, 2, 8);
  CHECK(pc.c1 == 0);
  CHECK(pc.c2 == 0);

  // weighted elliptic 4-cycle, l = 3: the four edges give c1 = 1
  VectorSystem cyc =
      VectorSystem::from_integers({{-2, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, -3}});
  pc = elliptic_pair_counts(cyc, 3, 8);
  CHECK(pc.c1 == 1);

  CHECK_THROWS_AS(elliptic_pair_counts(cyc, 1, 8), Error);
}

TEST_CASE("witnesses re-verify") {
  testing::Rng rng(6201);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    VectorSystem s = testing::random_connected_system(rng, n, 4, 2);
    try {
      if (signature_of(s).positive > 1) continue;
    } catch (const Error&) {
      continue;
    }
    PairCounts pc = elliptic_pair_counts(s, 3, 8);
    if (!pc.c1_witness.empty()) {
      auto [r1, r2] = pair_ratios_of_subgraph(s, pc.c1_witness, 3);
      CHECK(r1 == pc.c1);
    }
    if (!pc.c2_witness.empty()) {
      auto [r1, r2] = pair_ratios_of_subgraph(s, pc.c2_witness, 3);
      CHECK(r2 == pc.c2);
    }
    LannerScan scan = max_lanner_size(s, n);
    if (scan.max_size > 0) {
      CHECK(static_cast<int>(scan.witness.size()) == scan.max_size);
      CHECK(is_lanner(subsystem(s, scan.witness)));
    }
  }
}

TEST_CASE("lanner size is monotone under subgraphs") {
  testing::Rng rng(6202);
  for (int it = 0; it < 15; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);
    VectorSystem s = testing::random_connected_system(rng, n, 4, 2);
    try {
      if (signature_of(s).positive > 1) continue;
    } catch (const Error&) {
      continue;
    }
    int whole = max_lanner_size(s, n).max_size;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) subset.push_back(i);
    if (subset.empty()) continue;
    CHECK(max_lanner_size(subsystem(s, subset), n).max_size <= whole);
  }
}

TEST_CASE("dimension bound arithmetic") {
  CHECK(dimension_bound(0, 0) == 68);
  CHECK(dimension_bound(1, 0) == 164);
  CHECK(dimension_bound(1, 3) == 260);
  CHECK(dimension_bound(Rational(1, 2), Rational(3, 4)) == Rational(140));
  CHECK_THROWS_AS(dimension_bound(-1, 0), Error);

  testing::Rng rng(6203);
  for (int it = 0; it < 200; ++it) {
    Rational c1 = abs(testing::random_rational(rng)), c2 = abs(testing::random_rational(rng));
    Rational d1 = abs(testing::random_rational(rng)), d2 = abs(testing::random_rational(rng));
    CHECK(dimension_bound(c1 + d1, c2 + d2) >= dimension_bound(c1, c2));
  }
}
