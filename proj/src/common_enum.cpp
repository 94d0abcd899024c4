#include "bnested/common_enum.hpp"

#include <stdexcept>

namespace bnested {

namespace {

void require_positive(int b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
}

template <class Sink>
void scan(const PQTree& tree, int b, MinSize min_size, const std::vector<NodeAnnotation>& ann, Sink&& sink,
          ScanStats* stats) {
  std::uint64_t iterations = 0;
  for (NodeId id : tree.postorder()) {
    const auto& node = tree.node(id);
    switch (node.kind) {
      case NodeKind::Leaf:
        if (min_size == MinSize::One) sink(node.interval);
        break;
      case NodeKind::P:
        if (ann[id].b_nested) sink(node.interval);
        break;
      case NodeKind::Q: {
        const auto& ch = node.children;
        const std::size_t p = ch.size();
        for (std::size_t c = 0; c < p; ++c) {
          int large = 0;
          for (std::size_t d = c; d < p && large <= 1; ++d) {
            const auto& child = ann[ch[d]];
            if (child.size > b && !child.b_nested) break;
            ++iterations;
            if (child.size > b) ++large;
            if (c < d && large <= 1) {
              sink(Interval{tree.node(ch[c]).interval.lo, tree.node(ch[d]).interval.hi});
            }
          }
        }
        break;
      }
    }
  }
  if (stats) stats->q_iterations += iterations;
}

}  // namespace

std::vector<NodeAnnotation> annotate(const PQTree& tree, int b) {
  require_positive(b);
  std::vector<NodeAnnotation> ann(tree.node_count());
  for (NodeId id : tree.postorder()) {
    const auto& node = tree.node(id);
    auto& a = ann[id];
    a.size = node.interval.size();
    switch (node.kind) {
      case NodeKind::Leaf:
        a.b_nested = true;
        break;
      case NodeKind::P:
        for (NodeId c : node.children) {
          if (ann[c].b_nested && ann[c].size >= a.size - b) {
            a.b_nested = true;
            break;
          }
        }
        break;
      case NodeKind::Q: {
        int large = 0;
        bool ok = true;
        for (NodeId c : node.children) {
          if (ann[c].size > b) {
            ++large;
            ok = ok && ann[c].b_nested;
          }
        }
        a.b_nested = ok && large <= 1;
        break;
      }
    }
  }
  return ann;
}

void for_each_b_nested_common(const PQTree& tree, int b, MinSize min_size, const IntervalSink& sink,
                              ScanStats* stats) {
  const auto ann = annotate(tree, b);
  scan(tree, b, min_size, ann, sink, stats);
}

std::vector<Interval> enumerate_b_nested_common(const PQTree& tree, int b, MinSize min_size, ScanStats* stats) {
  const auto ann = annotate(tree, b);
  std::vector<Interval> out;
  scan(tree, b, min_size, ann, [&](Interval iv) { out.push_back(iv); }, stats);
  return out;
}

QNodeCount count_q_children(std::span<const ChildClass> children) {
  QNodeCount out;
  const std::size_t p = children.size();
  auto small_run = [&](std::size_t from, int step) {
    std::uint64_t run = 0;
    for (auto i = static_cast<std::ptrdiff_t>(from); i >= 0 && i < static_cast<std::ptrdiff_t>(p); i += step) {
      if (children[i] != ChildClass::Small) break;
      ++run;
    }
    return run;
  };
  std::uint64_t run = 0;
  for (std::size_t i = 0; i <= p; ++i) {
    if (i < p && children[i] == ChildClass::Small) {
      ++run;
      continue;
    }
    if (run > 0) {
      out.per_run.push_back(run * (run - 1) / 2);
      out.total += out.per_run.back();
    }
    run = 0;
    if (i < p && children[i] == ChildClass::LargeNested) {
      // The runs on either side are read directly; over all children each
      // small child is visited at most twice here.
      const std::uint64_t l = i == 0 ? 0 : small_run(i - 1, -1);
      const std::uint64_t r = small_run(i + 1, +1);
      out.per_large.push_back(l * (r + 1) + r);
      out.total += out.per_large.back();
    }
  }
  return out;
}

std::uint64_t count_b_nested_common(const PQTree& tree, int b, MinSize min_size) {
  const auto ann = annotate(tree, b);
  std::uint64_t total = 0;
  std::vector<ChildClass> classes;
  for (NodeId id : tree.postorder()) {
    const auto& node = tree.node(id);
    switch (node.kind) {
      case NodeKind::Leaf:
        total += min_size == MinSize::One ? 1 : 0;
        break;
      case NodeKind::P:
        total += ann[id].b_nested ? 1 : 0;
        break;
      case NodeKind::Q:
        classes.clear();
        for (NodeId c : node.children) {
          const auto& a = ann[c];
          classes.push_back(a.size <= b ? ChildClass::Small
                                        : (a.b_nested ? ChildClass::LargeNested : ChildClass::LargeNotNested));
        }
        // The Q-node's own interval is among these when it qualifies.
        total += count_q_children(classes).total;
        break;
    }
  }
  return total;
}

}  // namespace bnested
