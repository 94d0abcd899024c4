#include <random>

#include "bnested/batch.hpp"
#include "bnested/generate.hpp"
#include "support.hpp"

using namespace bnested;

TEST_CASE("parallel count profiles equal the serial ones") {
  std::mt19937_64 rng(4);
  const std::vector<int> bs{1, 2, 3, 4, 5, 8, 13, 21};
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = normalize(gen::planted(300, 3, rng(), {3, 3}));
    const auto tree = build_pqtree(set);
    for (auto ms : {MinSize::One, MinSize::Two}) {
      const auto par = batch::common_count_profile(tree, bs, ms);
      CHECK(par == batch::common_count_profile_serial(tree, bs, ms));
      for (std::size_t i = 0; i < bs.size(); ++i) CHECK(par[i] == count_b_nested_common(tree, bs[i], ms));
    }

    const auto signed_set = normalize(gen::signed_reversals(300, 3, rng(), 30));
    const auto ctree = build_conserved_tree(signed_set);
    for (auto ms : {MinSize::One, MinSize::Two}) {
      const auto par = batch::conserved_count_profile(ctree, bs, ms);
      CHECK(par == batch::conserved_count_profile_serial(ctree, bs, ms));
      for (std::size_t i = 0; i < bs.size(); ++i) CHECK(par[i] == count_b_nested_conserved(ctree, bs[i], ms));
    }
  }
}

TEST_CASE("profiles reject b below one") {
  const auto tree = build_pqtree(testing::identity_set(4));
  const std::vector<int> bs{2, 0};
  CHECK_THROWS_AS(batch::common_count_profile(tree, bs, MinSize::Two), std::invalid_argument);
  CHECK(batch::common_count_profile(tree, std::vector<int>{}, MinSize::Two).empty());
}
