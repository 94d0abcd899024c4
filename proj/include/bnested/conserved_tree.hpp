#pragma once

// Inclusion tree of strong conserved intervals with their maximal frontier sets.
//
// Every weak conserved interval of size >= 2 is (f_i..f_j) for exactly one
// node and two of its frontiers. A non-root node sits strictly inside one
// frontier step (f_i..f_{i+1}) of its parent, recorded as its L link.

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnested/core.hpp"
#include "bnested/pqtree.hpp"

namespace bnested {

class InternalStructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConservedNode {
  Interval interval;
  std::vector<int> frontiers;  // ascending; front() == lo, back() == hi
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
  /// Index l of the parent step (f_l..f_{l+1}) containing this node; -1 at the root.
  int parent_step = -1;

  std::optional<Interval> l_link(const std::vector<ConservedNode>& nodes) const;
  int step_count() const { return static_cast<int>(frontiers.size()) - 1; }
  Interval step(int l) const { return {frontiers[l], frontiers[l + 1]}; }
};

class ConservedTree {
 public:
  ConservedTree() = default;
  ConservedTree(int n, std::vector<ConservedNode> nodes_in_postorder);

  int n() const { return n_; }
  /// Absent only when n == 1 (a strong conserved interval has size >= 2).
  std::optional<NodeId> root() const {
    return nodes_.empty() ? std::nullopt : std::optional<NodeId>(static_cast<NodeId>(nodes_.size()) - 1);
  }
  const ConservedNode& node(NodeId id) const { return nodes_[id]; }
  const std::vector<ConservedNode>& nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  std::optional<Interval> l_link(NodeId id) const { return nodes_[id].l_link(nodes_); }

  /// Smallest node containing `iv` (iv of size >= 2).
  std::optional<NodeId> container(Interval iv) const;

 private:
  int n_ = 0;
  std::vector<ConservedNode> nodes_;  // post-order; root last
};

/// Unsigned "doubling": +x becomes (2x-1, 2x) and -x becomes (2x, 2x-1).
/// (a..c), a < c, is conserved iff (2a..2c-1) is common in the result.
PermutationSet doubled(const PermutationSet& set);

/// Irreducible conserved intervals of size >= 2, sorted by lo. Requires a
/// valid frame (see validate_conserved_frame).
std::vector<Interval> irreducible_conserved_intervals(const PermutationSet& set);

ConservedTree build_conserved_tree(const PermutationSet& set);

/// Chains irreducible intervals into strong intervals with one left-to-right
/// scan of the bracket expression. Throws InternalStructureError if the
/// brackets are not well nested.
ConservedTree build_conserved_tree(int n, std::span<const Interval> irreducible);

/// Frontier pairs (f_i..f_j), i < j, other than the node interval itself.
std::vector<Interval> weak_conserved_intervals(const ConservedNode& node);

/// Bracket expression over the identity, e.g. "1 [1 2 [2 ]3 3 ]4 4".
std::string bracket_expression(int n, std::span<const Interval> irreducible);

std::vector<Interval> strong_intervals(const ConservedTree& tree);

void dump_text(std::ostream& os, const ConservedTree& tree);
void dump_json(std::ostream& os, const ConservedTree& tree);

}  // namespace bnested
