#include "bnested/oracle.hpp"

#include <algorithm>
#include <string>

namespace bnested::oracle {

Family::Family(int n, const std::vector<Interval>& members) : Family(n) {
  for (const auto& iv : members) insert(iv);
}

void Family::insert(Interval iv) {
  if (iv.lo < 1 || iv.hi > n_ || iv.lo > iv.hi) throw std::out_of_range("interval outside family range");
  char& slot = member_[iv.lo * (n_ + 1) + iv.hi];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

std::vector<Interval> Family::members() const {
  std::vector<Interval> out;
  out.reserve(count_);
  for (int lo = 1; lo <= n_; ++lo) {
    for (int hi = lo; hi <= n_; ++hi) {
      if (member_[lo * (n_ + 1) + hi]) out.push_back({lo, hi});
    }
  }
  return out;
}

namespace {

void check_bound(const PermutationSet& set, int max_n) {
  if (set.n() > max_n) {
    throw BoundExceeded("oracle limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(set.n()));
  }
}

}  // namespace

Family all_common(const PermutationSet& set, int max_n) {
  check_bound(set, max_n);
  Family f(set.n());
  for (int lo = 1; lo <= set.n(); ++lo) {
    for (int hi = lo; hi <= set.n(); ++hi) {
      if (is_common_interval(set, {lo, hi})) f.insert({lo, hi});
    }
  }
  return f;
}

Family all_common_parallel(const PermutationSet& set, int max_n) {
  check_bound(set, max_n);
  const int n = set.n();
  std::vector<char> hit((n + 1) * (n + 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (int lo = 1; lo <= n; ++lo) {
    for (int hi = lo; hi <= n; ++hi) {
      hit[lo * (n + 1) + hi] = is_common_interval(set, {lo, hi}) ? 1 : 0;
    }
  }
  Family f(n);
  for (int lo = 1; lo <= n; ++lo) {
    for (int hi = lo; hi <= n; ++hi) {
      if (hit[lo * (n + 1) + hi]) f.insert({lo, hi});
    }
  }
  return f;
}

Family all_conserved(const PermutationSet& set, int max_n) {
  check_bound(set, max_n);
  Family f(set.n());
  for (int lo = 1; lo <= set.n(); ++lo) {
    for (int hi = lo; hi <= set.n(); ++hi) {
      if (is_conserved_interval(set, {lo, hi})) f.insert({lo, hi});
    }
  }
  return f;
}

Family all_b_nested(const Family& family, int b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  auto members = family.members();
  std::stable_sort(members.begin(), members.end(),
                   [](const Interval& x, const Interval& y) { return x.size() < y.size(); });
  Family nested(family.n());
  for (const auto& iv : members) {
    const int s = iv.size();
    bool ok = s == 1;
    for (int t = s - 1; !ok && t >= std::max(1, s - b); --t) {
      for (int lo = iv.lo; !ok && lo + t - 1 <= iv.hi; ++lo) {
        ok = nested.contains({lo, lo + t - 1});
      }
    }
    if (ok) nested.insert(iv);
  }
  return nested;
}

Family strong_of(const Family& family, int min_size) {
  const auto members = family.members();
  Family strong(family.n());
  for (const auto& iv : members) {
    if (iv.size() < min_size) continue;
    const bool overlapped =
        std::any_of(members.begin(), members.end(), [&](const Interval& o) { return iv.overlaps(o); });
    if (!overlapped) strong.insert(iv);
  }
  return strong;
}

std::vector<int> frontier_set_of(const Family& family, Interval iv) {
  if (!family.contains(iv)) throw std::invalid_argument("frontier_set_of: interval not in family");
  std::vector<int> frontiers;
  for (int f = iv.lo; f <= iv.hi; ++f) {
    if (family.contains({iv.lo, f}) && family.contains({f, iv.hi})) frontiers.push_back(f);
  }
  // Every element passing the test is in some frontier set {lo, f, hi}; the
  // union of frontier sets is a frontier set, so all pairs must be members.
  for (std::size_t i = 0; i < frontiers.size(); ++i) {
    for (std::size_t j = i + 1; j < frontiers.size(); ++j) {
      if (!family.contains({frontiers[i], frontiers[j]})) {
        throw std::logic_error("frontier union closure violated");
      }
    }
  }
  return frontiers;
}

OracleResult compute(const PermutationSet& common_set, const PermutationSet* conserved_set, int b, int max_n) {
  OracleResult r;
  r.common = all_common(common_set, max_n);
  r.b_nested_common = all_b_nested(r.common, b);
  r.strong_common = strong_of(r.common, 1);
  if (conserved_set) {
    r.conserved = all_conserved(*conserved_set, max_n);
    r.b_nested_conserved = all_b_nested(r.conserved, b);
    r.strong_conserved = strong_of(r.conserved, 2);
    for (const auto& iv : r.strong_conserved.members()) r.frontier_sets[iv] = frontier_set_of(r.conserved, iv);
  }
  return r;
}

}  // namespace bnested::oracle
