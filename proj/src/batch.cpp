#include "bnested/batch.hpp"

#include <stdexcept>

namespace bnested::batch {

namespace {

void require_positive(std::span<const int> bs) {
  for (int b : bs) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
  }
}

}  // namespace

std::vector<std::uint64_t> common_count_profile(const PQTree& tree, std::span<const int> bs, MinSize min_size) {
  require_positive(bs);
  std::vector<std::uint64_t> out(bs.size());
  const auto m = static_cast<std::ptrdiff_t>(bs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) out[i] = count_b_nested_common(tree, bs[i], min_size);
  return out;
}

std::vector<std::uint64_t> conserved_count_profile(const ConservedTree& tree, std::span<const int> bs,
                                                   MinSize min_size) {
  require_positive(bs);
  std::vector<std::uint64_t> out(bs.size());
  const auto m = static_cast<std::ptrdiff_t>(bs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) out[i] = count_b_nested_conserved(tree, bs[i], min_size);
  return out;
}

std::vector<std::uint64_t> common_count_profile_serial(const PQTree& tree, std::span<const int> bs,
                                                       MinSize min_size) {
  std::vector<std::uint64_t> out;
  out.reserve(bs.size());
  for (int b : bs) out.push_back(count_b_nested_common(tree, b, min_size));
  return out;
}

std::vector<std::uint64_t> conserved_count_profile_serial(const ConservedTree& tree, std::span<const int> bs,
                                                          MinSize min_size) {
  std::vector<std::uint64_t> out;
  out.reserve(bs.size());
  for (int b : bs) out.push_back(count_b_nested_conserved(tree, b, min_size));
  return out;
}

}  // namespace bnested::batch
