#include "bnested/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bnested/pqtree.hpp"

namespace bnested::gen {

namespace {

using Rng = std::mt19937_64;

RawSequence identity_row(int n) {
  RawSequence row(n);
  for (int i = 0; i < n; ++i) row[i] = {i + 1, Sign::Plus};
  return row;
}

void check_sizes(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and K >= 1");
}

struct Block {
  int lo = 0;
  int hi = 0;
  bool run = false;  // bottom block kept in one piece (forward or reversed)
  std::vector<Block> children;
};

Block plant_blocks(int lo, int hi, int level, const PlantedParams& params, Rng& rng) {
  Block b{lo, hi, false, {}};
  const int size = hi - lo + 1;
  if (size == 1) return b;
  if (level >= params.depth) {
    b.run = std::bernoulli_distribution(0.5)(rng);
    return b;
  }
  const int m = std::min(params.span, size);
  std::vector<int> cuts(size - 1);
  std::iota(cuts.begin(), cuts.end(), lo + 1);  // a child may start at any of these
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(m - 1);
  std::sort(cuts.begin(), cuts.end());
  int start = lo;
  for (int c : cuts) {
    b.children.push_back(plant_blocks(start, c - 1, level + 1, params, rng));
    start = c;
  }
  b.children.push_back(plant_blocks(start, hi, level + 1, params, rng));
  return b;
}

void arrange(const Block& b, Rng& rng, RawSequence& out) {
  if (b.children.empty()) {
    std::vector<int> labels(b.hi - b.lo + 1);
    std::iota(labels.begin(), labels.end(), b.lo);
    if (b.run) {
      if (std::bernoulli_distribution(0.5)(rng)) std::reverse(labels.begin(), labels.end());
    } else {
      std::shuffle(labels.begin(), labels.end(), rng);
    }
    for (int v : labels) out.push_back({v, Sign::Plus});
    return;
  }
  std::vector<const Block*> order;
  for (const auto& c : b.children) order.push_back(&c);
  std::shuffle(order.begin(), order.end(), rng);
  for (const Block* c : order) arrange(*c, rng, out);
}

}  // namespace

std::vector<RawSequence> uniform(int n, int k, std::uint64_t seed) {
  check_sizes(n, k);
  Rng rng(seed);
  std::vector<RawSequence> rows{identity_row(n)};
  for (int i = 1; i < k; ++i) {
    RawSequence row = identity_row(n);
    std::shuffle(row.begin(), row.end(), rng);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RawSequence> planted(int n, int k, std::uint64_t seed, PlantedParams params) {
  check_sizes(n, k);
  if (params.depth < 0 || params.span < 2) throw std::invalid_argument("planted: need depth >= 0, span >= 2");
  if (params.depth >= 1 && k < 2) throw std::invalid_argument("planted: depth >= 1 needs K >= 2");
  Rng rng(seed);
  constexpr int kAttempts = 256;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Block root = plant_blocks(1, n, 0, params, rng);
    std::vector<RawSequence> rows{identity_row(n)};
    for (int i = 1; i < k; ++i) {
      RawSequence row;
      row.reserve(n);
      arrange(root, rng, row);
      rows.push_back(std::move(row));
    }
    if (build_pqtree(normalize(rows)).depth() >= params.depth + 1) return rows;
  }
  throw std::invalid_argument("planted: could not reach the requested depth (n too small?)");
}

std::vector<RawSequence> signed_reversals(int n, int k, std::uint64_t seed, int max_reversals) {
  check_sizes(n, k);
  Rng rng(seed);
  std::vector<RawSequence> rows{identity_row(n)};
  for (int i = 1; i < k; ++i) {
    RawSequence row = identity_row(n);
    if (n >= 3) {
      const int count = std::uniform_int_distribution<int>(0, std::max(0, max_reversals))(rng);
      std::uniform_int_distribution<int> pos(1, n - 2);
      for (int r = 0; r < count; ++r) {
        int a = pos(rng);
        int b = pos(rng);
        if (a > b) std::swap(a, b);
        std::reverse(row.begin() + a, row.begin() + b + 1);
        for (int p = a; p <= b; ++p) row[p].sign = row[p].sign * Sign::Minus;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RawSequence> signed_uniform(int n, int k, std::uint64_t seed) {
  check_sizes(n, k);
  Rng rng(seed);
  std::bernoulli_distribution flip(0.5);
  std::vector<RawSequence> rows;
  for (int i = 0; i < k; ++i) {
    RawSequence row = identity_row(n);
    if (i > 0) std::shuffle(row.begin(), row.end(), rng);
    for (auto& e : row) e.sign = flip(rng) ? Sign::Minus : Sign::Plus;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bnested::gen
