#pragma once

// b-nested conserved intervals from the strong conserved interval tree.
//
// A frontier step (f_l..f_{l+1}) of size > b+1 is a b-gap. It is good when a
// b-nested child falls in it with size >= step size - b. A conserved interval
// is b-nested iff the steps it spans contain no gap, or exactly one good gap.

#include <cstdint>
#include <vector>

#include "bnested/common_enum.hpp"
#include "bnested/conserved_tree.hpp"

namespace bnested {

enum class StepKind : char { Small, Gap, GoodGap };

struct GapAnnotation {
  std::vector<StepKind> steps;  // one per frontier step
  bool b_nested = false;
};

/// Indexed by NodeId. Throws std::invalid_argument when b < 1.
std::vector<GapAnnotation> annotate_conserved(const ConservedTree& tree, int b);

/// Verdict for the frontier pair (f_i..f_j), 0 <= i < j < |F|.
bool frontier_pair_b_nested(const GapAnnotation& ann, int i, int j);

struct FrontierPairVerdict {
  Interval interval;
  bool b_nested = false;
};

/// All frontier pairs other than the node interval, lexicographic in (i, j).
std::vector<FrontierPairVerdict> weak_b_nested(const ConservedNode& node, const GapAnnotation& ann);

/// Singletons first (when min_size is One), then nodes in post-order; inside
/// a node, frontier pairs in lexicographic order followed by the node itself.
void for_each_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size, const IntervalSink& sink,
                                 ScanStats* stats = nullptr);

std::vector<Interval> enumerate_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size,
                                                   ScanStats* stats = nullptr);

std::uint64_t count_b_nested_conserved(const ConservedTree& tree, int b, MinSize min_size);

/// Number of b-nested frontier pairs of one node, node interval included.
std::uint64_t count_node_pairs(const GapAnnotation& ann);

}  // namespace bnested
