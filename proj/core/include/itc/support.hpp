#pragma once

#include <set>

#include "itc/element.hpp"
#include "itc/iterate.hpp"

namespace itc {

// A support: a set of edge indices closed under legal and declared
// predecessors, each member's extender facts supported below it.
using Support = std::set<size_t>;

// Closure of a raw edge set under backtrack, declared tpred, and the facts of
// each member's extender.
Support support_closure(const Workspace& ws, const IterationState& st, Support raw);

// Checks the closure conditions; true iff y is a support.
bool is_support(const Workspace& ws, const IterationState& st, const Support& y);

// A finite support for x viewed as an element of the model at node i,
// computed by provenance recursion relative to that model (an image from the
// predecessor needs nothing new; a generator of the incoming edge charges
// that edge).  Not claimed minimal.
Support support_of(const Workspace& ws, const IterationState& st, size_t i, const ElementPtr& x);

// Caps for the element enumeration; the depth bound is the spec knob, the
// breadth caps keep the suites tractable.
struct EnumCaps {
  int depth = 3;
  size_t max_points = 6;       // point elements sampled per model
  size_t max_gens = 3;         // generator choices per bracket slot
  size_t max_arity = 2;        // bracket generator tuple length
  size_t opaque_symbols = 2;
  size_t payload_samples = 2;  // constant/cut payloads per node
  size_t max_pushed = 8;       // re-seated elements carried up per step
};

// Elements of the model at node i: atoms, sampled points, brackets over the
// incoming edge, and re-seated elements of the predecessor model.
std::vector<ElementPtr> enumerate_elements(const Workspace& ws, const IterationState& st,
                                           size_t i, const EnumCaps& caps);

}  // namespace itc
