#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bnested/core.hpp"
#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<bnested::Interval> {
  static String convert(const bnested::Interval& iv) {
    std::ostringstream os;
    os << iv;
    return os.str().c_str();
  }
};
}  // namespace doctest

namespace testing {

using bnested::Interval;

inline bnested::PermutationSet make_set(const std::vector<std::vector<std::int64_t>>& rows) {
  return bnested::normalize(bnested::from_signed_ints(rows));
}

inline std::vector<Interval> sorted(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Interval> singletons(int n) {
  std::vector<Interval> out;
  for (int v = 1; v <= n; ++v) out.push_back({v, v});
  return out;
}

inline std::vector<Interval> with_singletons(int n, std::vector<Interval> extra) {
  auto all = singletons(n);
  all.insert(all.end(), extra.begin(), extra.end());
  return sorted(all);
}

// Example instances used across several suites.
inline bnested::PermutationSet three_genome_set() {
  return make_set({{1, 2, 3, 4, 5, 6, 7, 8, 9}, {4, 2, 3, 1, 7, 8, 9, 6, 5}, {5, 6, 1, 3, 2, 4, 9, 8, 7}});
}

inline bnested::PermutationSet signed_example_set() {
  return make_set({{1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, -3, -2, 4, 5, -8, -7, -6, 9}});
}

inline bnested::PermutationSet identity_set(int n) {
  std::vector<std::int64_t> row(n);
  for (int i = 0; i < n; ++i) row[i] = i + 1;
  return make_set({row});
}

}  // namespace testing
