#pragma once

// PQ-tree of the common intervals of a PermutationSet.
//
// Nodes are the strong common intervals (singletons and (1..n) included).
// Children are always sorted by their smallest label, so they are contiguous.
// A Q-node regenerates the weak intervals as unions of successive children.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bnested/core.hpp"

namespace bnested {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind : char { Leaf = 'L', P = 'P', Q = 'Q' };

struct PQNode {
  Interval interval;
  NodeKind kind = NodeKind::Leaf;
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
};

class PQTree {
 public:
  PQTree() = default;
  /// Assembles a tree from strong intervals already labelled. Internal use
  /// and tests; prefer build_pqtree.
  PQTree(int n, std::vector<std::pair<Interval, NodeKind>> internal_nodes);

  int n() const { return n_; }
  NodeId root() const { return root_; }
  const PQNode& node(NodeId id) const { return nodes_[id]; }
  std::span<const PQNode> nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  NodeId leaf(int label) const { return leaf_of_[label]; }
  /// Children before parents; children left to right.
  std::span<const NodeId> postorder() const { return postorder_; }

  /// Node whose interval is exactly `iv`, if `iv` is strong.
  std::optional<NodeId> node_of(Interval iv) const;

  int depth() const;  // number of nodes on the longest root-to-leaf path

 private:
  int n_ = 0;
  NodeId root_ = kNoNode;
  std::vector<PQNode> nodes_;
  std::vector<NodeId> leaf_of_;  // indexed by label
  std::vector<NodeId> postorder_;
};

/// For every adjacent pair (i, i+1), i = 1..n-1, the smallest common interval
/// containing both labels. Entry i-1 holds the cover of pair i.
std::vector<Interval> smallest_pair_covers(const PermutationSet& set);

PQTree build_pqtree(const PermutationSet& set);

/// Strong common intervals, sorted by (lo, hi).
std::vector<Interval> strong_common_intervals(const PermutationSet& set);
std::vector<Interval> strong_intervals(const PQTree& tree);

/// Unions of successive children of a Q-node, lexicographic in (first, last)
/// child index. The node interval itself is included iff `include_full`.
std::vector<Interval> weak_intervals_of_qnode(const PQTree& tree, NodeId q, bool include_full = false);

void dump_text(std::ostream& os, const PQTree& tree);
void dump_json(std::ostream& os, const PQTree& tree);

}  // namespace bnested
