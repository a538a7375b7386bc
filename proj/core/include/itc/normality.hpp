#pragma once

#include "itc/iterate.hpp"

namespace itc {

// Image of len(E_xi) as an element of the model at node xi+1, pushed along
// the canonical step.  Exact when the extender's row transports to the base
// model; otherwise the least available point above every image of the points
// below it (a monotone upper stand-in), with *exact set to false.
Point len_in_successor(const IterationState& st, size_t xi, bool* exact);

// {nu : some later extender has smaller index}.
std::vector<size_t> bad_for_length(const IterationState& st);

// Official detector: nu is bad iff some xi with xi+1 <tree nu+1 has
// i_{xi+1,nu*}(len(E_xi)) > crit(E_nu), nu* = tpred(nu+1).
std::vector<size_t> bad_for_crit(const IterationState& st);

// The footnote variant: some alpha < nu* with crit(E_nu) < len(E_xi) for all
// xi in (alpha, nu*].  Diagnostic only.
std::vector<size_t> bad_for_crit_footnote(const IterationState& st);

// {nu : a later smaller-index extender gamma exists and no branch returns
// into (nu, gamma]}.
std::vector<size_t> deadwood(const IterationState& st);
// Least witness gamma for a deadwood node, if any.
std::optional<size_t> deadwood_witness(const IterationState& st, size_t nu);

struct NormalityReport {
  bool normal = true;
  std::vector<Finding> witnesses;
};
// weak=false checks index monotonicity and least-legal predecessors; the
// ultrapower clause is trivial with the empty drop set.  weak=true checks
// only that no node is bad for critical point.
NormalityReport is_normal(const IterationState& st, bool weak);

// Places where index monotonicity and length monotonicity disagree.
std::vector<Finding> monotonicity_divergence(const IterationState& st);

struct PruneStep {
  NodeName nu, gamma;
};
struct PruneResult {
  IterationState state;
  std::vector<PruneStep> trace;
};
// Repeatedly removes the least deadwood node with its least witness until no
// deadwood remains.  Input must be ordinal-indexed.  Throws PruneFailed when
// an extender cannot be re-seated or the pruned tree fails validation.
PruneResult remove_deadwood(Workspace& ws, const IterationState& st);

}  // namespace itc
