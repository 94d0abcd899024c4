#include <random>
#include <set>

#include "bnested/common_enum.hpp"
#include "bnested/generate.hpp"
#include "bnested/oracle.hpp"
#include "support.hpp"

using namespace bnested;
using testing::sorted;
using testing::with_singletons;

namespace {

const std::vector<Interval> kThreeGenomeB1 = {{2, 3}, {1, 3}, {2, 4}, {1, 4}, {5, 6}, {7, 8}, {8, 9}, {7, 9}};

PermutationSet random_set(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 12);
  const int k = 1 + static_cast<int>(rng() % 5);
  if (k >= 2 && n >= 4 && rng() % 2 == 0) {
    return normalize(gen::planted(n, k, rng(), {1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 3)}));
  }
  return normalize(gen::uniform(n, k, rng()));
}

std::vector<Interval> at_least(const std::vector<Interval>& v, int min_size) {
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (iv.size() >= min_size) out.push_back(iv);
  }
  return out;
}

}  // namespace

TEST_CASE("annotation of the three-genome tree") {
  const auto tree = build_pqtree(testing::three_genome_set());
  const auto b1 = annotate(tree, 1);
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    CHECK(b1[id].size == tree.node(id).interval.size());
    CHECK(b1[id].b_nested == (id != tree.root()));
  }
  CHECK(annotate(tree, 5)[tree.root()].b_nested);
  CHECK_FALSE(annotate(tree, 4)[tree.root()].b_nested);
  CHECK_THROWS_AS(annotate(tree, 0), std::invalid_argument);

  const auto id = build_pqtree(testing::identity_set(7));
  for (int b = 1; b <= 3; ++b) CHECK(annotate(id, b)[id.root()].b_nested);
}

TEST_CASE("enumeration on the three-genome example") {
  const auto tree = build_pqtree(testing::three_genome_set());
  CHECK(sorted(enumerate_b_nested_common(tree, 1, MinSize::Two)) == sorted(kThreeGenomeB1));
  auto with_root = kThreeGenomeB1;
  with_root.push_back({1, 9});
  CHECK(sorted(enumerate_b_nested_common(tree, 5, MinSize::Two)) == sorted(with_root));
  CHECK(count_b_nested_common(tree, 1, MinSize::Two) == 8);
  CHECK(count_b_nested_common(tree, 1, MinSize::One) == 17);
  CHECK(count_b_nested_common(tree, 5, MinSize::One) == 18);

  // Post-order, lexicographic inside a Q-node.
  const std::vector<Interval> ordered{{2, 3}, {1, 3}, {1, 4}, {2, 4}, {5, 6}, {7, 8}, {7, 9}, {8, 9}};
  CHECK(enumerate_b_nested_common(tree, 1, MinSize::Two) == ordered);
  CHECK_THROWS_AS(enumerate_b_nested_common(tree, 0, MinSize::Two), std::invalid_argument);
}

TEST_CASE("identity chain") {
  const auto tree = build_pqtree(testing::identity_set(4));
  std::vector<Interval> all;
  for (int lo = 1; lo <= 4; ++lo) {
    for (int hi = lo; hi <= 4; ++hi) all.push_back({lo, hi});
  }
  CHECK(sorted(enumerate_b_nested_common(tree, 1, MinSize::One)) == all);
  CHECK(count_b_nested_common(tree, 1, MinSize::One) == 10);
}

TEST_CASE("Q-node counting by child pattern") {
  using C = ChildClass;
  const std::vector<C> pattern{C::Small, C::Small,       C::Small, C::LargeNested, C::Small,
                               C::Small, C::LargeNested, C::Small, C::LargeNested};
  const auto count = count_q_children(pattern);
  CHECK(count.per_large == std::vector<std::uint64_t>{11, 5, 1});
  CHECK(count.per_run == std::vector<std::uint64_t>{3, 1, 0});
  CHECK(count.total == 21);

  CHECK(count_q_children(std::vector<C>(6, C::Small)).total == 15);
  const std::vector<C> lone{C::Small, C::Small, C::Small, C::LargeNested, C::Small, C::Small};
  CHECK(count_q_children(lone).per_large == std::vector<std::uint64_t>{11});
  const std::vector<C> blocked{C::Small, C::Small, C::LargeNotNested, C::Small};
  CHECK(count_q_children(blocked).total == 1);
}

TEST_CASE("Q-node counting agrees with enumeration over random child patterns") {
  // Realize a pattern as a Q-node over child blocks: small = one leaf,
  // large nested = chain of b+2 leaves, large not nested = flat P-node of b+2.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int b = 1 + static_cast<int>(rng() % 3);
    const int p = 2 + static_cast<int>(rng() % 9);
    std::vector<ChildClass> pattern(p);
    std::vector<std::pair<Interval, NodeKind>> internal;
    int next = 1;
    for (auto& c : pattern) {
      c = static_cast<ChildClass>(rng() % 3);
      if (c == ChildClass::Small) {
        ++next;
        continue;
      }
      const int size = b + 2;
      internal.push_back({{next, next + size - 1}, c == ChildClass::LargeNested ? NodeKind::Q : NodeKind::P});
      next += size;
    }
    const int n = next - 1;
    internal.push_back({{1, n}, NodeKind::Q});
    const PQTree tree(n, internal);
    const auto q = count_q_children(pattern);

    std::uint64_t spanning = 0;
    for (const auto& iv : enumerate_b_nested_common(tree, b, MinSize::One)) {
      int children = 0;
      for (NodeId c : tree.node(tree.root()).children) {
        if (iv.contains(tree.node(c).interval)) ++children;
      }
      if (children >= 2) ++spanning;
    }
    CAPTURE(trial);
    CHECK(q.total == spanning);
  }
}

TEST_CASE("enumeration and counting match the oracle on random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = random_set(rng);
    const auto tree = build_pqtree(set);
    const auto family = oracle::all_common(set);
    for (int b : {1, 2, 3, 5}) {
      const auto expected = oracle::all_b_nested(family, b).members();
      for (auto ms : {MinSize::One, MinSize::Two}) {
        ScanStats stats;
        const auto got = enumerate_b_nested_common(tree, b, ms, &stats);
        const auto want = at_least(expected, static_cast<int>(ms));
        CAPTURE(trial);
        CAPTURE(b);
        CHECK(sorted(got) == want);
        CHECK(std::set<Interval>(got.begin(), got.end()).size() == got.size());
        CHECK(count_b_nested_common(tree, b, ms) == got.size());
        CHECK(stats.q_iterations <= 4 * (static_cast<std::uint64_t>(set.n()) + got.size()));
      }
    }
  }
}

TEST_CASE("structural laws of b-nested common intervals") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto set = random_set(rng);
    const auto tree = build_pqtree(set);
    const auto family = oracle::all_common(set);
    for (int b = 1; b <= 4; ++b) {
      const auto now = enumerate_b_nested_common(tree, b, MinSize::One);
      const auto next = enumerate_b_nested_common(tree, b + 1, MinSize::One);
      const std::set<Interval> nested(now.begin(), now.end());
      const std::set<Interval> wider(next.begin(), next.end());
      for (const auto& iv : nested) CHECK(wider.count(iv) == 1);  // monotone in b

      for (const auto& iv : family.members()) {
        if (iv.size() <= b + 1) CHECK(nested.count(iv) == 1);
      }

      const auto ann = annotate(tree, b);
      for (NodeId id = 0; id < tree.node_count(); ++id) {
        const auto& node = tree.node(id);
        if (!ann[id].b_nested) continue;
        for (NodeId c : node.children) CHECK((ann[c].size <= b || ann[c].b_nested));
        if (node.kind != NodeKind::Q) continue;
        // Every b-nested run of children sheds a small extremal child and stays b-nested.
        const auto& ch = node.children;
        for (std::size_t c = 0; c < ch.size(); ++c) {
          for (std::size_t d = c + 1; d < ch.size(); ++d) {
            const Interval run{tree.node(ch[c]).interval.lo, tree.node(ch[d]).interval.hi};
            if (!nested.count(run)) continue;
            const Interval drop_left{tree.node(ch[c + 1]).interval.lo, run.hi};
            const Interval drop_right{run.lo, tree.node(ch[d - 1]).interval.hi};
            const bool left_ok = ann[ch[c]].size <= b && nested.count(drop_left);
            const bool right_ok = ann[ch[d]].size <= b && nested.count(drop_right);
            CHECK((left_ok || right_ok));
          }
        }
      }
    }
  }
}

TEST_CASE("singletons are reported only with min size one") {
  const auto tree = build_pqtree(testing::identity_set(1));
  CHECK(enumerate_b_nested_common(tree, 1, MinSize::One) == std::vector<Interval>{{1, 1}});
  CHECK(enumerate_b_nested_common(tree, 1, MinSize::Two).empty());
  CHECK(count_b_nested_common(tree, 3, MinSize::Two) == 0);
  const auto three = build_pqtree(testing::three_genome_set());
  const auto all = enumerate_b_nested_common(three, 1, MinSize::One);
  CHECK(sorted(all) == with_singletons(9, kThreeGenomeB1));
}
