#include "bnested/pqtree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "detail/range_tree.hpp"

namespace bnested {

namespace {

// Left-to-right sweep over labels y. For x <= y the tree holds
//   sum_k (maxpos_k(x..y) - minpos_k(x..y)) - m * (y - x)
// over the m non-identity permutations; it is zero iff (x..y) is common.
// Returns, for each pair (i, i+1), the smallest y such that some common
// (x..y) has x <= i < y. Index i-1 holds pair i.
std::vector<int> pair_cover_right_ends(int n, const std::vector<std::vector<int>>& positions) {
  struct Segment {
    int value;
    int start;
  };
  const auto m = static_cast<std::int64_t>(positions.size());
  detail::RangeAddTree tree(n);
  std::vector<std::vector<Segment>> max_stacks(positions.size());
  std::vector<std::vector<Segment>> min_stacks(positions.size());
  std::vector<int> pending;
  std::vector<int> right(std::max(n - 1, 0), 0);

  for (int y = 1; y <= n; ++y) {
    if (y > 1) tree.add(1, y - 1, -m);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const int p = positions[k][y];
      {
        auto& st = max_stacks[k];
        int start = y;
        int end = y - 1;
        while (!st.empty() && st.back().value < p) {
          tree.add(st.back().start, end, p - st.back().value);
          start = st.back().start;
          end = start - 1;
          st.pop_back();
        }
        st.push_back({p, start});
      }
      {
        auto& st = min_stacks[k];
        int start = y;
        int end = y - 1;
        while (!st.empty() && st.back().value > p) {
          tree.add(st.back().start, end, st.back().value - p);
          start = st.back().start;
          end = start - 1;
          st.pop_back();
        }
        st.push_back({p, start});
      }
    }
    if (y == 1) continue;
    pending.push_back(y - 1);
    const int leftmost = tree.leftmost_zero(1, y - 1);
    if (leftmost == -1) continue;
    while (!pending.empty() && pending.back() >= leftmost) {
      right[pending.back() - 1] = y;
      pending.pop_back();
    }
  }
  if (!pending.empty()) throw std::logic_error("pair cover sweep left pairs unresolved");
  return right;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Interval> smallest_pair_covers(const PermutationSet& set) {
  const int n = set.n();
  if (n < 2) return {};
  std::vector<std::vector<int>> forward;
  std::vector<std::vector<int>> mirrored;
  for (int k = 1; k < set.k(); ++k) {
    const auto& perm = set[k];
    std::vector<int> pos(n + 1);
    std::vector<int> mpos(n + 1);
    for (int v = 1; v <= n; ++v) {
      pos[v] = perm.position(v);
      mpos[v] = perm.position(n + 1 - v);
    }
    forward.push_back(std::move(pos));
    mirrored.push_back(std::move(mpos));
  }
  // Common intervals are closed under intersection when they share a pair,
  // so the two one-sided extremes belong to the same smallest cover.
  const auto right = pair_cover_right_ends(n, forward);
  const auto mirror_right = pair_cover_right_ends(n, mirrored);
  std::vector<Interval> covers(n - 1);
  for (int i = 1; i < n; ++i) {
    covers[i - 1] = {n + 1 - mirror_right[n - i - 1], right[i - 1]};
  }
  return covers;
}

PQTree::PQTree(int n, std::vector<std::pair<Interval, NodeKind>> internal_nodes) : n_(n) {
  if (n < 1) throw std::invalid_argument("PQ-tree needs n >= 1");
  nodes_.reserve(n + internal_nodes.size());
  leaf_of_.assign(n + 1, kNoNode);
  for (int v = 1; v <= n; ++v) {
    nodes_.push_back({{v, v}, NodeKind::Leaf, {}, kNoNode});
    leaf_of_[v] = v - 1;
  }
  for (auto& [iv, kind] : internal_nodes) nodes_.push_back({iv, kind, {}, kNoNode});

  std::vector<NodeId> order(nodes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const auto& x = nodes_[a].interval;
    const auto& y = nodes_[b].interval;
    return x.lo != y.lo ? x.lo < y.lo : x.hi > y.hi;
  });

  std::vector<NodeId> stack;
  for (NodeId id : order) {
    const Interval iv = nodes_[id].interval;
    while (!stack.empty() && nodes_[stack.back()].interval.hi < iv.lo) stack.pop_back();
    if (stack.empty()) {
      if (root_ != kNoNode) throw std::logic_error("strong intervals do not form a single tree");
      root_ = id;
    } else {
      const NodeId parent = stack.back();
      if (!nodes_[parent].interval.strictly_contains(iv)) {
        throw std::logic_error("strong intervals are not laminar");
      }
      nodes_[id].parent = parent;
      nodes_[parent].children.push_back(id);
    }
    stack.push_back(id);
  }
  if (nodes_[root_].interval != Interval{1, n}) throw std::logic_error("PQ-tree root is not (1..n)");

  for (const auto& node : nodes_) {
    if (node.kind == NodeKind::Leaf) continue;
    int expect = node.interval.lo;
    for (NodeId c : node.children) {
      if (nodes_[c].interval.lo != expect) throw std::logic_error("children do not partition their parent");
      expect = nodes_[c].interval.hi + 1;
    }
    if (expect != node.interval.hi + 1 || node.children.size() < 2) {
      throw std::logic_error("children do not partition their parent");
    }
  }

  postorder_.reserve(nodes_.size());
  std::vector<std::pair<NodeId, std::size_t>> walk{{root_, 0}};
  while (!walk.empty()) {
    auto& [id, next] = walk.back();
    if (next < nodes_[id].children.size()) {
      const NodeId child = nodes_[id].children[next++];
      walk.emplace_back(child, 0);
    } else {
      postorder_.push_back(id);
      walk.pop_back();
    }
  }
}

std::optional<NodeId> PQTree::node_of(Interval iv) const {
  if (iv.lo < 1 || iv.hi > n_ || iv.lo > iv.hi) return std::nullopt;
  NodeId cur = leaf_of_[iv.lo];
  while (cur != kNoNode && nodes_[cur].interval.lo == iv.lo) {
    if (nodes_[cur].interval.hi == iv.hi) return cur;
    if (nodes_[cur].interval.hi > iv.hi) break;
    cur = nodes_[cur].parent;
  }
  return std::nullopt;
}

int PQTree::depth() const {
  std::vector<int> d(nodes_.size(), 1);
  int best = 0;
  for (NodeId id : postorder_) {
    for (NodeId c : nodes_[id].children) d[id] = std::max(d[id], d[c] + 1);
    best = std::max(best, d[id]);
  }
  return best;
}

PQTree build_pqtree(const PermutationSet& set) {
  const int n = set.n();
  const auto covers = smallest_pair_covers(set);

  // Distinct covers, with the number of pairs each one covers minimally.
  std::vector<Interval> distinct(covers);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto id_of = [&](Interval iv) {
    return static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), iv) - distinct.begin());
  };
  std::vector<int> pair_count(distinct.size(), 0);
  std::vector<int> cover_id(covers.size());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    cover_id[i] = id_of(covers[i]);
    ++pair_count[cover_id[i]];
  }

  // A Q-node with children c_1..c_r (r >= 3) yields covers c_j u c_{j+1}.
  // Successive ones overlap, and the pair after cover (lo..hi) is (hi, hi+1).
  DisjointSets chains(static_cast<int>(distinct.size()));
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const Interval cur = covers[i];
    if (cur.hi >= n) continue;
    const Interval next = covers[cur.hi - 1];
    if (cur.overlaps(next)) chains.unite(cover_id[i], cover_id[cur.hi - 1]);
  }

  struct Group {
    Interval span{0, 0};
    int members = 0;
    int pairs = 0;
  };
  std::vector<Group> groups(distinct.size());
  for (std::size_t d = 0; d < distinct.size(); ++d) {
    auto& g = groups[chains.find(static_cast<int>(d))];
    g.span = g.members == 0 ? distinct[d]
                            : Interval{std::min(g.span.lo, distinct[d].lo), std::max(g.span.hi, distinct[d].hi)};
    ++g.members;
    g.pairs += pair_count[d];
  }

  std::vector<std::pair<Interval, NodeKind>> internal;
  for (const auto& g : groups) {
    if (g.members == 0) continue;
    // One cover shared by >= 2 pairs: no proper union of children is common.
    // Two children are labelled Q by convention.
    const NodeKind kind = (g.members == 1 && g.pairs >= 2) ? NodeKind::P : NodeKind::Q;
    internal.emplace_back(g.span, kind);
  }
  return PQTree(n, std::move(internal));
}

std::vector<Interval> strong_intervals(const PQTree& tree) {
  std::vector<Interval> out;
  out.reserve(tree.node_count());
  for (const auto& node : tree.nodes()) out.push_back(node.interval);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> strong_common_intervals(const PermutationSet& set) {
  return strong_intervals(build_pqtree(set));
}

std::vector<Interval> weak_intervals_of_qnode(const PQTree& tree, NodeId q, bool include_full) {
  const auto& node = tree.node(q);
  if (node.kind != NodeKind::Q) throw std::invalid_argument("weak_intervals_of_qnode: not a Q-node");
  const auto& ch = node.children;
  const std::size_t p = ch.size();
  std::vector<Interval> out;
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t d = c + 1; d < p; ++d) {
      if (!include_full && c == 0 && d == p - 1) continue;
      out.push_back({tree.node(ch[c]).interval.lo, tree.node(ch[d]).interval.hi});
    }
  }
  return out;
}

void dump_text(std::ostream& os, const PQTree& tree) {
  std::vector<std::pair<NodeId, int>> walk{{tree.root(), 0}};
  while (!walk.empty()) {
    auto [id, depth] = walk.back();
    walk.pop_back();
    const auto& node = tree.node(id);
    os << std::string(2 * depth, ' ') << static_cast<char>(node.kind) << ' ' << node.interval << '\n';
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) walk.emplace_back(*it, depth + 1);
  }
}

namespace {

nlohmann::json to_json(const PQTree& tree, NodeId id) {
  const auto& node = tree.node(id);
  nlohmann::json j;
  j["interval"] = {node.interval.lo, node.interval.hi};
  j["label"] = std::string(1, static_cast<char>(node.kind));
  j["children"] = nlohmann::json::array();
  for (NodeId c : node.children) j["children"].push_back(to_json(tree, c));
  return j;
}

}  // namespace

void dump_json(std::ostream& os, const PQTree& tree) { os << to_json(tree, tree.root()).dump(2) << '\n'; }

}  // namespace bnested
