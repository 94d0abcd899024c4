#include "bnested/conserved_enum.hpp"

#include <stdexcept>

namespace bnested {

std::vector<GapAnnotation> annotate_conserved(const ConservedTree& tree, int b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  std::vector<GapAnnotation> ann(tree.node_count());
  // Nodes are stored in post-order, so children are final before their parent.
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    const auto& node = tree.node(id);
    auto& a = ann[id];
    a.steps.resize(node.step_count());
    for (int l = 0; l < node.step_count(); ++l) {
      a.steps[l] = node.step(l).size() > b + 1 ? StepKind::Gap : StepKind::Small;
    }
    for (NodeId c : node.children) {
      const auto& child = tree.node(c);
      const int l = child.parent_step;
      if (ann[c].b_nested && a.steps[l] != StepKind::Small && child.interval.size() >= node.step(l).size() - b) {
        a.steps[l] = StepKind::GoodGap;
      }
    }
    int gaps = 0;
    int good = 0;
    for (auto s : a.steps) {
      gaps += s != StepKind::Small;
      good += s == StepKind::GoodGap;
    }
    a.b_nested = gaps == 0 || (gaps == 1 && good == 1);
  }
  return ann;
}

bool frontier_pair_b_nested(const GapAnnotation& ann, int i, int j) {
  int gaps = 0;
  int good = 0;
  for (int s = i; s < j; ++s) {
    gaps += ann.steps[s] != StepKind::Small;
    good += ann.steps[s] == StepKind::GoodGap;
  }
  return gaps == 0 || (gaps == 1 && good == 1);
}

std::vector<FrontierPairVerdict> weak_b_nested(const ConservedNode& node, const GapAnnotation& ann) {
  std::vector<FrontierPairVerdict> out;
  const int k = static_cast<int>(node.frontiers.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      out.push_back({{node.frontiers[i], node.frontiers[j]}, frontier_pair_b_nested(ann, i, j)});
    }
  }
  return out;
}

namespace {

template <class Sink>
void scan(const ConservedTree& tree, MinSize min_size, const std::vector<GapAnnotation>& ann, Sink&& sink,
          ScanStats* stats) {
  if (min_size == MinSize::One) {
    for (int v = 1; v <= tree.n(); ++v) sink(Interval{v, v});
  }
  std::uint64_t iterations = 0;
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    const auto& f = tree.node(id).frontiers;
    const auto& steps = ann[id].steps;
    const int k = static_cast<int>(f.size());
    for (int i = 0; i + 1 < k; ++i) {
      bool seen_good = false;
      for (int j = i + 1; j < k; ++j) {
        ++iterations;
        const StepKind s = steps[j - 1];
        if (s == StepKind::Gap || (s == StepKind::GoodGap && seen_good)) break;
        seen_good = seen_good || s == StepKind::GoodGap;
        if (i != 0 || j != k - 1) sink(Interval{f[i], f[j]});
      }
    }
    if (ann[id].b_nested) sink(tree.node(id).interval);
  }
  if (stats) stats->q_iterations += iterations;
}

}  // namespace

void for_each_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size, const IntervalSink& sink,
                                 ScanStats* stats) {
  const auto ann = annotate_conserved(tree, b);
  scan(tree, min_size, ann, sink, stats);
}

std::vector<Interval> enumerate_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size,
                                                   ScanStats* stats) {
  const auto ann = annotate_conserved(tree, b);
  std::vector<Interval> out;
  scan(tree, min_size, ann, [&](Interval iv) { out.push_back(iv); }, stats);
  return out;
}

std::uint64_t count_node_pairs(const GapAnnotation& ann) {
  const auto& steps = ann.steps;
  const std::size_t m = steps.size();
  std::uint64_t total = 0;
  auto small_run = [&](std::ptrdiff_t from, int dir) {
    std::uint64_t run = 0;
    for (auto s = from; s >= 0 && s < static_cast<std::ptrdiff_t>(m); s += dir) {
      if (steps[s] != StepKind::Small) break;
      ++run;
    }
    return run;
  };
  std::uint64_t h = 0;
  for (std::size_t s = 0; s <= m; ++s) {
    if (s < m && steps[s] == StepKind::Small) {
      ++h;
      continue;
    }
    // h*(h-1)/2 pairs span >= 2 small steps; each single small step adds one more.
    total += h * (h - 1) / 2 + h;
    h = 0;
    if (s < m && steps[s] == StepKind::GoodGap) {
      const auto i = static_cast<std::ptrdiff_t>(s);
      const std::uint64_t l = small_run(i - 1, -1);
      const std::uint64_t r = small_run(i + 1, +1);
      // l*(r+1)+r intervals extend the gap; the gap step alone adds one.
      total += l * (r + 1) + r + 1;
    }
  }
  return total;
}

std::uint64_t count_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size) {
  const auto ann = annotate_conserved(tree, b);
  std::uint64_t total = min_size == MinSize::One ? static_cast<std::uint64_t>(tree.n()) : 0;
  for (const auto& a : ann) total += count_node_pairs(a);
  return total;
}

}  // namespace bnested
