#include "itc/seqindex.hpp"

#include <algorithm>

namespace itc {

bool seq_lt(const NodeName& a, const NodeName& b, const ExtendedIndexRegistry& reg) {
  reg.require_well_formed(a);
  reg.require_well_formed(b);
  const std::vector<uint32_t> u = reg.expand(a);
  const std::vector<uint32_t> v = reg.expand(b);
  // Strip the longest common terminal segment.
  size_t i = u.size(), j = v.size();
  while (i > 0 && j > 0 && u[i - 1] == v[j - 1]) { --i; --j; }
  if (i == 0 && j == 0) return false;     // equal names
  if (i == 0) return true;                // b = t0 ^ a
  if (j == 0) return false;               // a = s0 ^ b
  return u[i - 1] < v[j - 1];             // differing coordinate
}

bool seq_le(const NodeName& a, const NodeName& b, const ExtendedIndexRegistry& reg) {
  return reg.expand(a) == reg.expand(b) || seq_lt(a, b, reg);
}

std::optional<NodeName> cut(const NodeName& a, uint32_t lambda, const ExtendedIndexRegistry& reg) {
  reg.require_well_formed(a);
  if (a.is_plain() && !reg.is_marker(a.plain_value())) return a;  // xi|`alpha = xi
  if (reg.stage_count() == 0) return a;
  const std::vector<uint32_t> entries = reg.expand(a);
  // Keep the entries <= delta_lambda.  The pseudo-stage 0 keeps what lies
  // below the first marker, so cuts compose: cut(cut(a,l'),l) = cut(a,l).
  std::vector<uint32_t> kept;
  for (uint32_t e : entries) {
    bool keep = lambda == 0 ? e < reg.marker_of(1) : e <= reg.marker_of(lambda);
    if (keep) kept.push_back(e);
  }
  if (kept.empty()) return std::nullopt;
  return reg.canonicalize(kept);
}

std::vector<NodeName> closed_interval(const NodeName& lo, const NodeName& hi,
                                      const std::vector<NodeName>& dom,
                                      const ExtendedIndexRegistry& reg) {
  std::vector<NodeName> out;
  bool lo_seen = false, hi_seen = false;
  for (const NodeName& n : dom) {
    if (seq_le(lo, n, reg) && seq_le(n, hi, reg)) out.push_back(n);
    if (n == lo) lo_seen = true;
    if (n == hi) hi_seen = true;
  }
  if (!lo_seen || !hi_seen) throw NotInDomain("interval endpoint not in domain");
  return out;
}

// Entrywise append/strip witness: v == u ^ t for a fixed terminal segment t.
static bool suffix_related(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& t_out) {
  if (u.size() > v.size()) return false;
  if (!std::equal(u.begin(), u.end(), v.begin())) return false;
  t_out.assign(v.begin() + static_cast<long>(u.size()), v.end());
  return true;
}

bool interval_isomorphic(const NodeName& lo1, const NodeName& hi1,
                         const NodeName& lo2, const NodeName& hi2,
                         const std::vector<NodeName>& dom,
                         const ExtendedIndexRegistry& reg) {
  const std::vector<NodeName> a = closed_interval(lo1, hi1, dom, reg);
  const std::vector<NodeName> b = closed_interval(lo2, hi2, dom, reg);
  if (a.size() != b.size()) return false;
  if (a.size() <= 1) return true;  // singleton intervals
  // Determine the direction and the common terminal segment from the first pair.
  std::vector<uint32_t> t;
  const auto ea0 = reg.expand(a[0]), eb0 = reg.expand(b[0]);
  bool append = suffix_related(ea0, eb0, t);
  if (!append && !suffix_related(eb0, ea0, t)) return false;
  for (size_t k = 0; k < a.size(); ++k) {
    std::vector<uint32_t> tk;
    const auto ea = reg.expand(a[k]), eb = reg.expand(b[k]);
    bool ok = append ? suffix_related(ea, eb, tk) : suffix_related(eb, ea, tk);
    if (!ok || tk != t) return false;
  }
  return true;
}

std::optional<NodeName> cut_isomorph_witness(const NodeName& sigma, uint32_t alpha,
                                             const std::vector<NodeName>& I_gamma,
                                             const std::vector<NodeName>& dom,
                                             const ExtendedIndexRegistry& reg) {
  const auto cut_sigma = cut(sigma, alpha, reg);
  if (!cut_sigma) return std::nullopt;
  const NodeName delta_alpha =
      alpha == 0 ? NodeName::plain(0) : NodeName::plain(reg.marker_of(alpha));
  if (alpha == 0) return std::nullopt;  // witness search is per constructed stage
  for (const NodeName& x : I_gamma) {
    if (!seq_le(sigma, x, reg)) continue;
    if (interval_isomorphic(*cut_sigma, delta_alpha, sigma, x, dom, reg)) return x;
  }
  return std::nullopt;
}

}  // namespace itc
