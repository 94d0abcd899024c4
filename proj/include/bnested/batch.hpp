#pragma once

// Counts for many b values over one shared tree. The trees are immutable and
// the count functions are pure, so each b is an independent task.

#include <cstdint>
#include <span>
#include <vector>

#include "bnested/common_enum.hpp"
#include "bnested/conserved_enum.hpp"

namespace bnested::batch {

std::vector<std::uint64_t> common_count_profile(const PQTree& tree, std::span<const int> bs, MinSize min_size);
std::vector<std::uint64_t> conserved_count_profile(const ConservedTree& tree, std::span<const int> bs,
                                                   MinSize min_size);

// Serial references, kept for tests and the benchmark.
std::vector<std::uint64_t> common_count_profile_serial(const PQTree& tree, std::span<const int> bs,
                                                       MinSize min_size);
std::vector<std::uint64_t> conserved_count_profile_serial(const ConservedTree& tree, std::span<const int> bs,
                                                          MinSize min_size);

}  // namespace bnested::batch
