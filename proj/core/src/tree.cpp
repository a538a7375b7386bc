#include "itc/tree.hpp"

#include <algorithm>

namespace itc {

TreeDescriptor::TreeDescriptor(std::vector<NodeEntry> nodes) : nodes_(std::move(nodes)) {
  for (size_t i = 0; i < nodes_.size(); ++i) {
    bool last = i + 1 == nodes_.size();
    if (last && nodes_[i].has_edge())
      throw InvalidTree("final node " + nodes_[i].name.str() + " carries edge data");
    if (!last && !nodes_[i].has_edge())
      throw InvalidTree("node " + nodes_[i].name.str() + " is missing its edge data");
  }
  build_parents();
}

void TreeDescriptor::build_parents() {
  parent_.assign(nodes_.size(), 0);
  for (size_t i = 1; i < nodes_.size(); ++i) {
    const NodeName& t = *nodes_[i - 1].tpred_next;
    auto at = find(t);
    if (!at) throw InvalidTree("tpred " + t.str() + " of " + nodes_[i].name.str() + " not in domain");
    if (*at >= i)
      throw CycleDetected("tpred " + t.str() + " of " + nodes_[i].name.str() +
                          " does not precede it");
    parent_[i] = *at;
  }
}

size_t TreeDescriptor::index_of(const NodeName& n) const {
  auto at = find(n);
  if (!at) throw NotInDomain("node " + n.str() + " not in domain");
  return *at;
}

std::optional<size_t> TreeDescriptor::find(const NodeName& n) const {
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == n) return i;
  return std::nullopt;
}

size_t TreeDescriptor::tpred_index(size_t i) const {
  if (i == 0 || i >= nodes_.size()) throw NotInDomain("tpred_index: no predecessor");
  return parent_[i];
}

bool TreeDescriptor::tree_lt(size_t a, size_t b) const {
  if (a >= b) return false;
  if (a == 0) return true;  // 0 < nu for all nu
  size_t x = b;
  while (x > a) x = parent_[x];
  return x == a;
}

std::vector<std::pair<size_t, size_t>> TreeDescriptor::tree_order() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t b = 1; b < nodes_.size(); ++b)
    for (size_t a = 0; a < b; ++a)
      if (tree_lt(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<size_t> TreeDescriptor::branch_path(size_t a, size_t b) const {
  if (!tree_le(a, b)) throw NotABranch("no branch from " + nodes_[a].name.str() + " to " +
                                       nodes_[b].name.str());
  std::vector<size_t> path;
  size_t x = b;
  while (x != a) {
    path.push_back(x);
    x = parent_[x];
  }
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

TreeDescriptor TreeDescriptor::prefix(size_t n) const {
  if (n == 0 || n > nodes_.size()) throw NotInDomain("prefix length out of range");
  std::vector<NodeEntry> ns(nodes_.begin(), nodes_.begin() + static_cast<long>(n));
  ns.back().extender_rank = kNone;
  ns.back().tpred_next.reset();
  return TreeDescriptor(std::move(ns));
}

TreeDescriptor linear_tree(const std::vector<uint32_t>& ranks) {
  std::vector<NodeEntry> ns;
  for (size_t i = 0; i < ranks.size(); ++i)
    ns.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(i)), 0, ranks[i],
                           NodeName::plain(static_cast<uint32_t>(i))});
  ns.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(ranks.size())), 0, kNone,
                         std::nullopt});
  return TreeDescriptor(std::move(ns));
}

}  // namespace itc
