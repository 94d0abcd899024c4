#pragma once

// b-nested common intervals read off the PQ-tree.
//
// A node interval is b-nested when
//   P-node: some child is b-nested with size >= |I| - b;
//   Q-node: at most one child is b-large (size > b), and that child is b-nested.
// Weak intervals of a Q-node follow the Q rule on their own children range.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bnested/pqtree.hpp"

namespace bnested {

struct NodeAnnotation {
  int size = 0;
  bool b_nested = false;
};

/// Indexed by NodeId. Throws std::invalid_argument when b < 1.
std::vector<NodeAnnotation> annotate(const PQTree& tree, int b);

/// Counters for the Q-node scan (one per evaluation of the inner loop body).
struct ScanStats {
  std::uint64_t q_iterations = 0;
};

using IntervalSink = std::function<void(Interval)>;

/// Emits every b-nested common interval once: post-order over nodes, and
/// lexicographic (first child, last child) inside a Q-node.
void for_each_b_nested_common(const PQTree& tree, int b, MinSize min_size, const IntervalSink& sink,
                              ScanStats* stats = nullptr);

std::vector<Interval> enumerate_b_nested_common(const PQTree& tree, int b, MinSize min_size,
                                                ScanStats* stats = nullptr);

std::uint64_t count_b_nested_common(const PQTree& tree, int b, MinSize min_size);

/// Classification of a Q-node child for the counting formulas.
enum class ChildClass : char { Small, LargeNested, LargeNotNested };

/// Breakdown of the b-nested intervals spanning >= 2 children of one Q-node.
struct QNodeCount {
  std::vector<std::uint64_t> per_large;  // l*(r+1)+r per b-large b-nested child, left to right
  std::vector<std::uint64_t> per_run;    // h*(h-1)/2 per maximal run of b-small children
  std::uint64_t total = 0;
};

QNodeCount count_q_children(std::span<const ChildClass> children);

}  // namespace bnested
