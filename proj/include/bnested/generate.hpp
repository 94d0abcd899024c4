#pragma once

// Random instance generation. Every generator is a pure function of its
// arguments (seed included); the first permutation is always the identity.

#include <cstdint>
#include <string>
#include <vector>

#include "bnested/core.hpp"

namespace bnested::gen {

struct PlantedParams {
  int depth = 2;  // planted levels below the root
  int span = 3;   // children per planted block
};

std::vector<RawSequence> uniform(int n, int k, std::uint64_t seed);

/// Blocks nested `depth` levels deep, each split into `span` children whose
/// order is shuffled independently per permutation; bottom blocks are either
/// shuffled or kept as a common run (forward or reversed). The PQ-tree has
/// depth >= params.depth + 1. Requires k >= 2 when depth >= 1.
std::vector<RawSequence> planted(int n, int k, std::uint64_t seed, PlantedParams params);

/// Signed permutations with +1 first and +n last: each non-identity
/// permutation applies a random number of signed reversals to the interior.
std::vector<RawSequence> signed_reversals(int n, int k, std::uint64_t seed, int max_reversals);

/// Arbitrary order and signs everywhere (needs framing for conserved use).
std::vector<RawSequence> signed_uniform(int n, int k, std::uint64_t seed);

}  // namespace bnested::gen
