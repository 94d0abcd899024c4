#pragma once

// Brute-force reference implementations of every interval definition.
// Meant for small n; nothing here shares code with the tree-based paths
// beyond the core membership predicates.

#include <map>
#include <stdexcept>
#include <vector>

#include "bnested/core.hpp"

namespace bnested::oracle {

inline constexpr int kDefaultMaxN = 64;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of intervals over {1..n} with O(1) membership.
class Family {
 public:
  explicit Family(int n = 0) : n_(n), member_((n + 1) * (n + 1), 0) {}
  Family(int n, const std::vector<Interval>& members);

  int n() const { return n_; }
  bool contains(Interval iv) const {
    return iv.lo >= 1 && iv.hi <= n_ && iv.lo <= iv.hi && member_[iv.lo * (n_ + 1) + iv.hi];
  }
  void insert(Interval iv);
  /// Sorted by (lo, hi).
  std::vector<Interval> members() const;
  std::size_t size() const { return count_; }

 private:
  int n_;
  std::vector<char> member_;
  std::size_t count_ = 0;
};

Family all_common(const PermutationSet& set, int max_n = kDefaultMaxN);
Family all_conserved(const PermutationSet& set, int max_n = kDefaultMaxN);

/// Recursive reading: I qualifies iff |I| = 1 or I strictly contains a
/// qualifying member of size >= |I| - b. Dynamic programming by size.
Family all_b_nested(const Family& family, int b);

/// Members that overlap no other member and have size >= min_size.
Family strong_of(const Family& family, int min_size = 1);

/// Maximal frontier set of `iv`: every f in iv with (lo..f) and (f..hi) in the
/// family. Pairwise membership of the result follows from union closure of
/// frontier sets, and is asserted.
std::vector<int> frontier_set_of(const Family& family, Interval iv);

/// Same family as all_common, computed by an OpenMP loop over left ends.
Family all_common_parallel(const PermutationSet& set, int max_n = kDefaultMaxN);

struct OracleResult {
  Family common;
  Family conserved;
  Family b_nested_common;
  Family b_nested_conserved;
  Family strong_common;
  Family strong_conserved;
  std::map<Interval, std::vector<int>> frontier_sets;
};

/// `conserved_set` may be the same set when it satisfies the frame; pass
/// nullptr to skip the conserved part.
OracleResult compute(const PermutationSet& common_set, const PermutationSet* conserved_set, int b,
                     int max_n = kDefaultMaxN);

}  // namespace bnested::oracle
