#pragma once

#include <optional>
#include <vector>

#include "itc/names.hpp"

namespace itc {

// The ordering on sequence-indexed nodes, computed on expanded
// representatives: a < b iff b = t0^a, or the entries left of the longest
// common terminal segment differ with a's entry smaller.
bool seq_lt(const NodeName& a, const NodeName& b, const ExtendedIndexRegistry& reg);
bool seq_le(const NodeName& a, const NodeName& b, const ExtendedIndexRegistry& reg);

// The cut sigma|`lambda: entries of stages > lambda (the largest ones) are
// removed.  Plain names outside C are fixed; a plain marker cuts through its
// fully extended index.  nullopt is the empty cut.
std::optional<NodeName> cut(const NodeName& a, uint32_t lambda, const ExtendedIndexRegistry& reg);

// Closed interval [lo,hi] of an ordered node set, inclusive.
std::vector<NodeName> closed_interval(const NodeName& lo, const NodeName& hi,
                                      const std::vector<NodeName>& dom,
                                      const ExtendedIndexRegistry& reg);

// True iff [lo1,hi1] and [lo2,hi2] in dom are order-isomorphic via the map
// that appends/strips one common terminal segment of stage markers entrywise
// (the relation written [sigma|`a, delta_a] ~ [sigma, x]).
bool interval_isomorphic(const NodeName& lo1, const NodeName& hi1,
                         const NodeName& lo2, const NodeName& hi2,
                         const std::vector<NodeName>& dom,
                         const ExtendedIndexRegistry& reg);

// Exhaustive search for the witness x of the cut-isomorphism lemma:
// x in I_gamma with [cut(sigma,alpha), delta_alpha] ~ [sigma, x].
std::optional<NodeName> cut_isomorph_witness(const NodeName& sigma, uint32_t alpha,
                                             const std::vector<NodeName>& I_gamma,
                                             const std::vector<NodeName>& dom,
                                             const ExtendedIndexRegistry& reg);

}  // namespace itc
