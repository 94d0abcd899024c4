#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bnested::detail {

// Lazy segment tree over indices 1..n: range add, and leftmost/rightmost
// index in a range holding the minimum value when that minimum is <= 0.
// Callers keep every value non-negative, so this finds zeros.
class RangeAddTree {
 public:
  explicit RangeAddTree(int n) : n_(n), min_(4 * (n + 1), 0), lazy_(4 * (n + 1), 0) {}

  void add(int l, int r, std::int64_t delta) {
    if (l > r || delta == 0) return;
    add(1, 1, n_, l, r, delta);
  }

  /// Leftmost index in [l, r] with value <= 0, or -1.
  int leftmost_zero(int l, int r) const {
    if (l > r) return -1;
    return find(1, 1, n_, l, r, 0, true);
  }

  /// Rightmost index in [l, r] with value <= 0, or -1.
  int rightmost_zero(int l, int r) const {
    if (l > r) return -1;
    return find(1, 1, n_, l, r, 0, false);
  }

 private:
  void add(int node, int nl, int nr, int l, int r, std::int64_t delta) {
    if (r < nl || nr < l) return;
    if (l <= nl && nr <= r) {
      min_[node] += delta;
      lazy_[node] += delta;
      return;
    }
    const int mid = (nl + nr) / 2;
    add(2 * node, nl, mid, l, r, delta);
    add(2 * node + 1, mid + 1, nr, l, r, delta);
    min_[node] = lazy_[node] + std::min(min_[2 * node], min_[2 * node + 1]);
  }

  // `carry` is the sum of lazy tags above `node`.
  int find(int node, int nl, int nr, int l, int r, std::int64_t carry, bool leftmost) const {
    if (r < nl || nr < l || min_[node] + carry > 0) return -1;
    if (nl == nr) return nl;
    const int mid = (nl + nr) / 2;
    const std::int64_t below = carry + lazy_[node];
    if (leftmost) {
      int hit = find(2 * node, nl, mid, l, r, below, true);
      return hit != -1 ? hit : find(2 * node + 1, mid + 1, nr, l, r, below, true);
    }
    int hit = find(2 * node + 1, mid + 1, nr, l, r, below, false);
    return hit != -1 ? hit : find(2 * node, nl, mid, l, r, below, false);
  }

  int n_;
  std::vector<std::int64_t> min_;
  std::vector<std::int64_t> lazy_;
};

}  // namespace bnested::detail
