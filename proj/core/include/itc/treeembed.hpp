#pragma once

#include "itc/support.hpp"

namespace itc {

// A tree embedding (sigma, i) with its derived family of node maps.
struct TreeEmbedding {
  std::vector<size_t> sigma;         // node-index map, one entry per source node
  Embedding base;                    // i : M -> M'
  std::vector<Embedding> node_maps;  // i^sigma per source node
};

// Derives the node maps by the recursion of the embedding definition,
// checking the clauses as it goes.  Throws ClauseViolation(k) naming the
// failed clause and BacktrackMismatch when sigma fails to commute with the
// predecessor structure.  sigma must be strictly increasing on node indices.
TreeEmbedding derive_maps(Workspace& ws, const IterationState& src, const IterationState& dst,
                          std::vector<size_t> sigma, Embedding base);

// Exhaustive verification on the finite universes: backtrack commutation,
// agreement below each len, node-map validity, naturality squares, and the
// step-comparison agreement up to the index image (the latter reported under
// rule "step-agreement").
std::vector<Finding> verify_tree_embedding(Workspace& ws, const IterationState& src,
                                           const IterationState& dst, const TreeEmbedding& emb);

// Element transport under the embedding: the bracket display, with the final
// tree push recorded in the seat.
ElementPtr apply_sigma(const IterationState& src, const IterationState& dst,
                       const TreeEmbedding& emb, size_t node, const ElementPtr& x);

// The support-induced subtree: |y| edges pulled back along the order
// isomorphism, with (sigma, id) a verified tree embedding into st.
struct SubtreeResult {
  IterationState sub;
  TreeEmbedding emb;
};
SubtreeResult subtree_embedding(Workspace& ws, const IterationState& st, const Support& y);

// The push-forward tree i[T]: same shape over the target of `base`, extender
// at each node the node-map image of the original.
struct PushResult {
  IterationState pushed;
  TreeEmbedding emb;
};
PushResult push_tree(Workspace& ws, const IterationState& st, const Embedding& base);

// One element's support/recovery verdict.
struct RecoveryCheck {
  Support support;
  bool support_ok = false;
  bool recovered = false;
  std::string detail;
};
RecoveryCheck check_element_recovery(Workspace& ws, const IterationState& st, size_t node,
                                     const ElementPtr& x);

// Every element (to the cap depth) of every model has a support and is
// recovered through its subtree embedding.  Returns findings; empty = pass.
struct SupportSuiteReport {
  size_t elements_checked = 0;
  size_t subtrees_built = 0;
  std::vector<Finding> findings;
};
SupportSuiteReport finite_support_theorem(Workspace& ws, const IterationState& st,
                                          const EnumCaps& caps);

// Order/equality indiscernibility of pairs of support embeddings carrying the
// same finite tree.
std::vector<Finding> indiscernibility_check(Workspace& ws, const IterationState& st,
                                            const EnumCaps& caps);

// Shape equality of descriptors ignoring the birth tags.
bool same_shape(const TreeDescriptor& a, const TreeDescriptor& b);

}  // namespace itc
