#include "bnested/conserved_tree.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace bnested {

std::optional<Interval> ConservedNode::l_link(const std::vector<ConservedNode>& nodes) const {
  if (parent == kNoNode) return std::nullopt;
  return nodes[parent].step(parent_step);
}

ConservedTree::ConservedTree(int n, std::vector<ConservedNode> nodes_in_postorder)
    : n_(n), nodes_(std::move(nodes_in_postorder)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const bool is_last = i + 1 == nodes_.size();
    if ((nodes_[i].parent == kNoNode) != is_last) {
      throw InternalStructureError("conserved tree must have exactly one root, stored last");
    }
  }
  if (!nodes_.empty() && nodes_.back().interval != Interval{1, n}) {
    throw InternalStructureError("conserved tree root is not (1..n)");
  }
}

std::optional<NodeId> ConservedTree::container(Interval iv) const {
  auto r = root();
  if (!r || !nodes_[*r].interval.contains(iv)) return std::nullopt;
  NodeId cur = *r;
  for (bool descended = true; descended;) {
    descended = false;
    for (NodeId c : nodes_[cur].children) {
      if (nodes_[c].interval.contains(iv)) {
        cur = c;
        descended = true;
        break;
      }
    }
  }
  return cur;
}

PermutationSet doubled(const PermutationSet& set) {
  const int n = set.n();
  std::vector<SignedPermutation> perms;
  perms.reserve(set.k());
  for (const auto& p : set.perms()) {
    std::vector<int> elems;
    elems.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      const int v = p.at(i);
      if (p.sign_at(i) == Sign::Plus) {
        elems.push_back(2 * v - 1);
        elems.push_back(2 * v);
      } else {
        elems.push_back(2 * v);
        elems.push_back(2 * v - 1);
      }
    }
    perms.emplace_back(Permutation(std::move(elems)));
  }
  return PermutationSet(std::move(perms), {}, false);
}

std::vector<Interval> irreducible_conserved_intervals(const PermutationSet& set) {
  const int n = set.n();
  if (n < 2) return {};
  const PQTree tree = build_pqtree(doubled(set));

  // Child index of every node, and for Q-nodes the first child at or after
  // each index whose interval ends on an odd label.
  std::vector<int> child_index(tree.node_count(), 0);
  std::vector<std::vector<int>> next_odd(tree.node_count());
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    const auto& ch = tree.node(id).children;
    for (std::size_t i = 0; i < ch.size(); ++i) child_index[ch[i]] = static_cast<int>(i);
    if (tree.node(id).kind != NodeKind::Q) continue;
    auto& next = next_odd[id];
    next.assign(ch.size() + 1, -1);
    for (int i = static_cast<int>(ch.size()) - 1; i >= 0; --i) {
      next[i] = tree.node(ch[i]).interval.hi % 2 == 1 ? i : next[i + 1];
    }
  }

  // The irreducible interval starting at a is the smallest conserved (a..c):
  // the first odd right end among common intervals of the doubled set that
  // start at 2a. Those are found walking up from leaf 2a in increasing order
  // of right end.
  std::vector<Interval> out;
  for (int a = 1; a < n; ++a) {
    const int start = 2 * a;
    NodeId cur = tree.leaf(start);
    int end = -1;
    while (end == -1) {
      const NodeId parent = tree.node(cur).parent;
      if (parent == kNoNode) break;
      const auto& pnode = tree.node(parent);
      const int idx = child_index[cur];
      if (pnode.kind == NodeKind::Q) {
        const int j = next_odd[parent][idx + 1];
        if (j != -1) end = tree.node(pnode.children[j]).interval.hi;
      } else if (idx == 0 && pnode.interval.hi % 2 == 1) {
        end = pnode.interval.hi;
      }
      if (idx != 0) break;
      cur = parent;
    }
    if (end != -1) out.push_back({a, (end + 1) / 2});
  }
  return out;
}

namespace {

struct Brackets {
  std::vector<int> open_end;     // open_end[p]: right end of the irreducible starting at p, or 0
  std::vector<int> close_start;  // close_start[p]: left end of the irreducible ending at p, or 0
};

Brackets place_brackets(int n, std::span<const Interval> irreducible) {
  Brackets b{std::vector<int>(n + 2, 0), std::vector<int>(n + 2, 0)};
  for (const auto& iv : irreducible) {
    if (iv.lo < 1 || iv.hi > n || iv.lo >= iv.hi) {
      throw InternalStructureError("irreducible interval out of range");
    }
    if (b.open_end[iv.lo] != 0 || b.close_start[iv.hi] != 0) {
      throw InternalStructureError("two irreducible intervals share an endpoint side");
    }
    b.open_end[iv.lo] = iv.hi;
    b.close_start[iv.hi] = iv.lo;
  }
  return b;
}

}  // namespace

ConservedTree build_conserved_tree(int n, std::span<const Interval> irreducible) {
  const Brackets br = place_brackets(n, irreducible);

  struct Frame {
    std::vector<int> frontiers;
    int step_end = 0;
    std::vector<NodeId> children;
  };
  std::vector<Frame> stack;
  std::vector<ConservedNode> nodes;

  for (int p = 1; p <= n; ++p) {
    if (br.close_start[p] != 0) {
      if (stack.empty() || stack.back().step_end != p) {
        throw InternalStructureError("bracket expression is not well nested at " + std::to_string(p));
      }
      Frame& f = stack.back();
      f.frontiers.push_back(p);
      if (br.open_end[p] != 0) {
        f.step_end = br.open_end[p];  // chain continues through frontier p
        continue;
      }
      ConservedNode node;
      node.interval = {f.frontiers.front(), p};
      node.frontiers = std::move(f.frontiers);
      node.children = std::move(f.children);
      stack.pop_back();
      const auto id = static_cast<NodeId>(nodes.size());
      for (NodeId c : node.children) nodes[c].parent = id;
      nodes.push_back(std::move(node));
      if (!stack.empty()) {
        Frame& parent = stack.back();
        if (!(parent.frontiers.back() < nodes[id].interval.lo && p < parent.step_end)) {
          throw InternalStructureError("strong interval not strictly inside a frontier step");
        }
        nodes[id].parent_step = static_cast<int>(parent.frontiers.size()) - 1;
        parent.children.push_back(id);
      }
    } else if (br.open_end[p] != 0) {
      stack.push_back({{p}, br.open_end[p], {}});
    }
  }
  if (!stack.empty()) throw InternalStructureError("unclosed bracket in expression");
  return ConservedTree(n, std::move(nodes));
}

ConservedTree build_conserved_tree(const PermutationSet& set) {
  const auto irreducible = irreducible_conserved_intervals(set);
  return build_conserved_tree(set.n(), irreducible);
}

std::vector<Interval> weak_conserved_intervals(const ConservedNode& node) {
  std::vector<Interval> out;
  const auto& f = node.frontiers;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (i == 0 && j + 1 == f.size()) continue;
      out.push_back({f[i], f[j]});
    }
  }
  return out;
}

std::string bracket_expression(int n, std::span<const Interval> irreducible) {
  const Brackets br = place_brackets(n, irreducible);
  std::ostringstream os;
  for (int p = 1; p <= n; ++p) {
    if (br.close_start[p] != 0) os << ']' << p << ' ';
    os << p;
    if (br.open_end[p] != 0) os << " [" << p;
    if (p < n) os << ' ';
  }
  return os.str();
}

std::vector<Interval> strong_intervals(const ConservedTree& tree) {
  std::vector<Interval> out;
  for (const auto& node : tree.nodes()) out.push_back(node.interval);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string frontier_list(const std::vector<int>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

nlohmann::json to_json(const ConservedTree& tree, NodeId id) {
  const auto& node = tree.node(id);
  nlohmann::json j;
  j["interval"] = {node.interval.lo, node.interval.hi};
  j["frontiers"] = node.frontiers;
  if (auto l = tree.l_link(id)) {
    j["L"] = {l->lo, l->hi};
  } else {
    j["L"] = nullptr;
  }
  j["children"] = nlohmann::json::array();
  for (NodeId c : node.children) j["children"].push_back(to_json(tree, c));
  return j;
}

}  // namespace

void dump_text(std::ostream& os, const ConservedTree& tree) {
  auto root = tree.root();
  if (!root) return;
  std::vector<std::pair<NodeId, int>> walk{{*root, 0}};
  while (!walk.empty()) {
    auto [id, depth] = walk.back();
    walk.pop_back();
    const auto& node = tree.node(id);
    os << std::string(2 * depth, ' ') << "S " << node.interval << " F=" << frontier_list(node.frontiers) << " L=";
    if (auto l = tree.l_link(id)) {
      os << '(' << l->lo << ',' << l->hi << ')';
    } else {
      os << "(.,.)";
    }
    os << '\n';
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) walk.emplace_back(*it, depth + 1);
  }
}

void dump_json(std::ostream& os, const ConservedTree& tree) {
  auto root = tree.root();
  os << (root ? to_json(tree, *root) : nlohmann::json(nullptr)).dump(2) << '\n';
}

}  // namespace bnested
