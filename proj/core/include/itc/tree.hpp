#pragma once

#include <optional>
#include <vector>

#include "itc/names.hpp"

namespace itc {

// One node of a finite iteration tree.  Every node except the last carries an
// edge: the extender selected at this node (by rank in this node's table) and
// the declared T-predecessor of the *next* node in node order.
struct NodeEntry {
  NodeName name;
  uint32_t birth = 0;
  uint32_t extender_rank = kNone;
  std::optional<NodeName> tpred_next;

  bool has_edge() const { return tpred_next.has_value(); }
};

// An iteration tree as data.  Node order is the vector order; the drop set is
// required to be empty and is not represented.
class TreeDescriptor {
 public:
  TreeDescriptor() = default;
  explicit TreeDescriptor(std::vector<NodeEntry> nodes);

  size_t node_count() const { return nodes_.size(); }
  size_t edge_count() const { return nodes_.empty() ? 0 : nodes_.size() - 1; }
  const NodeEntry& node(size_t i) const { return nodes_[i]; }
  const std::vector<NodeEntry>& nodes() const { return nodes_; }

  size_t index_of(const NodeName& n) const;               // throws NotInDomain
  std::optional<size_t> find(const NodeName& n) const;

  // Index of the T-predecessor of node i (i >= 1).
  size_t tpred_index(size_t i) const;

  // Ancestor relation of the complete tree ordering (with the empty drop set
  // the two orderings of the paper coincide).  a <tree b.
  bool tree_lt(size_t a, size_t b) const;
  bool tree_le(size_t a, size_t b) const { return a == b || tree_lt(a, b); }

  // All pairs (a,b) with a <tree b, derived from the tpred assignments plus
  // the root clause.  Throws CycleDetected on malformed predecessor data.
  std::vector<std::pair<size_t, size_t>> tree_order() const;

  // Chain of node indices from a up to b along the tree order; a must be a
  // tree ancestor of b (or equal).
  std::vector<size_t> branch_path(size_t a, size_t b) const;

  bool operator==(const TreeDescriptor& o) const {
    if (nodes_.size() != o.nodes_.size()) return false;
    for (size_t i = 0; i < nodes_.size(); ++i) {
      const NodeEntry& x = nodes_[i];
      const NodeEntry& y = o.nodes_[i];
      if (x.name != y.name || x.birth != y.birth || x.extender_rank != y.extender_rank ||
          x.tpred_next != y.tpred_next)
        return false;
    }
    return true;
  }

  // Descriptor restricted to the first n nodes (the last kept node loses its
  // edge data).
  TreeDescriptor prefix(size_t n) const;

 private:
  void build_parents();
  std::vector<NodeEntry> nodes_;
  std::vector<size_t> parent_;  // parent_[i] = tpred index of node i; parent_[0] unused
};

// A linear tree of n nodes named 0..n-1 with tpred(k+1) = k, extender ranks
// given per edge.  Convenience for tests and the generator.
TreeDescriptor linear_tree(const std::vector<uint32_t>& ranks);

}  // namespace itc
