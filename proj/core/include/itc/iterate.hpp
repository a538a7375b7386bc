#pragma once

#include <array>
#include <memory>

#include "itc/embedding.hpp"
#include "itc/tree.hpp"

namespace itc {

// Models and canonical maps produced by iterating a tree descriptor.
struct IterationState {
  TreeDescriptor tree;
  std::vector<std::shared_ptr<const ModelState>> models;  // one per node
  std::vector<Embedding> steps;  // steps[i]: M_{tpred(i)} -> M_i, i >= 1

  const ModelState& model(size_t i) const { return *models[i]; }

  // Facts of the extender selected at node i (i must carry an edge).
  const DescRow& extender(size_t i) const;

  // Composite i_{a,b} along the tree order; a must be a tree ancestor of b.
  Embedding i_map(size_t a, size_t b) const;
};

// The freely generated base model: points 0..universe_size-1, table rows
// given as (crit, len, index) ordinal triples.
ModelState base_model(Workspace& ws, uint32_t universe_size,
                      const std::vector<std::array<uint32_t, 3>>& rows);

// Iterates the descriptor over the base model.  Throws InvalidTree /
// AgreementFailure on malformed input.
IterationState iterate(Workspace& ws, TreeDescriptor tree,
                       std::shared_ptr<const ModelState> base);

// The validity requirement on lengths: whenever tpred(a+1) <= nu < a, the
// extender at nu reaches at least crit(E_a).  Returns findings, empty when
// valid.
std::vector<Finding> validate(const Workspace& ws, const IterationState& st);

// Least node whose extender length exceeds crit(E_edge): the legal
// T-predecessor of edge+1 in a normal tree.  Throws NoPredecessor if none.
size_t backtrack(const IterationState& st, size_t edge);

// Model at the maximum of a tree-order chain of node indices.
const ModelState& branch_model(const IterationState& st, const std::vector<size_t>& branch);

// Node indices of the main branch (the branch of the last node).
std::vector<size_t> main_branch(const IterationState& st);

}  // namespace itc
