#include <random>

#include "bnested/generate.hpp"
#include "bnested/oracle.hpp"
#include "support.hpp"

using namespace bnested;
using testing::make_set;
using testing::with_singletons;

TEST_CASE("all common intervals of the three-genome example") {
  const auto family = oracle::all_common(testing::three_genome_set());
  CHECK(family.members() ==
        with_singletons(9, {{2, 3}, {1, 3}, {2, 4}, {1, 4}, {5, 6}, {7, 8}, {8, 9}, {7, 9}, {1, 9}}));
  CHECK(oracle::all_common_parallel(testing::three_genome_set()).members() == family.members());
}

TEST_CASE("identity and repeated permutations give every interval") {
  for (int n = 1; n <= 8; ++n) CHECK(oracle::all_common(testing::identity_set(n)).size() == n * (n + 1) / 2u);
  const auto repeated = make_set({{3, 1, 2, 4}, {3, 1, 2, 4}, {3, 1, 2, 4}});
  CHECK(oracle::all_common(repeated).size() == 10);
  CHECK(oracle::all_conserved(repeated).size() == 10);
  CHECK(oracle::all_conserved(testing::identity_set(2)).members() == std::vector<Interval>{{1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("conserved family of the signed example") {
  const auto set = testing::signed_example_set();
  const auto family = oracle::all_conserved(set);
  CHECK(family.members() ==
        with_singletons(9, {{2, 3}, {6, 7}, {7, 8}, {6, 8}, {1, 4}, {4, 5}, {5, 9}, {1, 5}, {4, 9}, {1, 9}}));
  CHECK(oracle::strong_of(family, 2).members() == std::vector<Interval>{{1, 9}, {2, 3}, {6, 8}});
  CHECK(oracle::frontier_set_of(family, {1, 9}) == std::vector<int>{1, 4, 5, 9});
  CHECK(oracle::frontier_set_of(family, {6, 8}) == std::vector<int>{6, 7, 8});
  CHECK_THROWS_AS(oracle::frontier_set_of(family, {3, 5}), std::invalid_argument);

  const auto r = oracle::compute(set, &set, 2);
  CHECK(r.b_nested_conserved.size() == 18);
  CHECK(r.frontier_sets.at({2, 3}) == std::vector<int>{2, 3});
}

TEST_CASE("recursive b-nested filter on the three-genome family") {
  const auto family = oracle::all_common(testing::three_genome_set());
  CHECK(oracle::all_b_nested(family, 1).size() == 17);
  CHECK(oracle::all_b_nested(family, 5).size() == 18);
  CHECK(oracle::all_b_nested(family, 9).size() == family.size());
  CHECK_FALSE(oracle::all_b_nested(family, 4).contains({1, 9}));
  CHECK_THROWS_AS(oracle::all_b_nested(family, 0), std::invalid_argument);
}

TEST_CASE("singletons are never strong conserved intervals") {
  const auto family = oracle::all_conserved(testing::signed_example_set());
  for (int v = 1; v <= 9; ++v) CHECK_FALSE(oracle::strong_of(family, 2).contains({v, v}));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(oracle::all_common(testing::identity_set(70)), oracle::BoundExceeded);
  CHECK_NOTHROW(oracle::all_common(testing::identity_set(70), 80));
}

TEST_CASE("oracle self-consistency on random sets") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto set = normalize(gen::signed_reversals(n, 1 + rng() % 4, rng(), 3));
    const auto common = oracle::all_common(set);
    const auto conserved = oracle::all_conserved(set);
    CHECK(oracle::all_common_parallel(set).members() == common.members());
    for (const auto& iv : conserved.members()) CHECK(common.contains(iv));

    for (const auto* family : {&common, &conserved}) {
      for (int b = 1; b <= 4; ++b) {
        const auto now = oracle::all_b_nested(*family, b);
        const auto next = oracle::all_b_nested(*family, b + 1);
        for (const auto& iv : now.members()) {
          CHECK(next.contains(iv));
          CHECK(family->contains(iv));
        }
      }
    }
    for (const auto& iv : oracle::strong_of(conserved, 2).members()) {
      const auto f = oracle::frontier_set_of(conserved, iv);
      for (int x = iv.lo; x <= iv.hi; ++x) {
        if (std::find(f.begin(), f.end(), x) != f.end()) continue;
        bool breaks = false;
        for (int y : f) breaks = breaks || !conserved.contains({std::min(x, y), std::max(x, y)});
        CHECK(breaks);
      }
    }
  }
}
