#include "itc/model.hpp"

#include <algorithm>

#include "itc/errors.hpp"

namespace itc {

bool ModelState::contains(Point p) const {
  return std::binary_search(universe.begin(), universe.end(), p);
}

size_t ModelState::position(Point p) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), p);
  if (it == universe.end() || *it != p)
    throw WrongModel("point not in model at node " + node.str());
  return static_cast<size_t>(it - universe.begin());
}

std::optional<size_t> ModelState::find(Point p) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), p);
  if (it == universe.end() || *it != p) return std::nullopt;
  return static_cast<size_t>(it - universe.begin());
}

std::optional<size_t> ModelState::row_by_core(CoreId c) const {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].core == c) return i;
  return std::nullopt;
}

std::optional<size_t> ModelState::row_by_facts(Point crit, Point len, Point index) const {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].crit == crit && table[i].len == len && table[i].index == index) return i;
  return std::nullopt;
}

UltrapowerResult ultrapowered(Workspace& ws, const ModelState& owner, const ModelState& base,
                              const DescRow& row, StepId step) {
  UltrapowerResult out;
  const Point kappa = row.crit, rho = row.len;

  // Low block: the owner's points below len(E).  Serial order is creation
  // order, so this is an initial segment of the owner.
  std::vector<Point> low;
  for (Point p : owner.universe) {
    if (p >= rho) break;
    low.push_back(p);
  }
  // The identity region of j must already sit in the low block.
  for (Point p : base.universe) {
    if (p >= kappa) break;
    if (!std::binary_search(low.begin(), low.end(), p))
      throw AgreementFailure("point " + ws.point_str(p) + " of the base at " + base.node.str() +
                             " below crit is not below len(E) in " + owner.node.str());
  }

  // Image block: one fresh point per base point >= crit, in base order.
  out.point_map.reserve(base.universe.size());
  std::vector<Point> img;
  for (Point p : base.universe) {
    if (p < kappa) {
      out.point_map.push_back(p);
    } else {
      Point q = ws.img_point(step, p);
      img.push_back(q);
      out.point_map.push_back(q);
    }
  }

  ModelState& n = out.model;
  n.node = ws.step(step).node;
  n.birth = ws.step(step).birth;
  n.universe = std::move(low);
  n.universe.insert(n.universe.end(), img.begin(), img.end());

  // Table: images of the base rows (identity below crit), plus the owner rows
  // coherence-inherited below len(E).
  auto map_point = [&](Point p) -> Point {
    return p < kappa ? p : ws.img_point(step, p);
  };
  for (const DescRow& r : base.table) {
    DescRow m;
    if (r.index < kappa) {
      m = r;  // entirely below the critical point: fixed
    } else {
      m.core = ws.img_core(step, r.core);
      m.crit = map_point(r.crit);
      m.len = map_point(r.len);
      m.index = map_point(r.index);
    }
    n.table.push_back(m);
  }
  for (const DescRow& r : owner.table) {
    if (r.index >= rho) continue;
    if (std::none_of(n.table.begin(), n.table.end(),
                     [&](const DescRow& x) { return x.core == r.core; }))
      n.table.push_back(r);
  }
  std::sort(n.table.begin(), n.table.end(),
            [](const DescRow& a, const DescRow& b) { return a.index < b.index; });
  for (size_t i = 0; i + 1 < n.table.size(); ++i)
    if (n.table[i].index == n.table[i + 1].index)
      throw AgreementFailure("duplicate descriptor index in ultrapower at " + n.node.str());
  // Resolve the row map against the sorted table.
  out.row_map.reserve(base.table.size());
  for (const DescRow& r : base.table) {
    CoreId c = r.index < kappa ? r.core : ws.img_core(step, r.core);
    auto idx = n.row_by_core(c);
    out.row_map.push_back(static_cast<uint32_t>(*idx));
  }

  out.crit = kappa;
  return out;
}

UltrapowerResult ultrapower_step(Workspace& ws, const ModelState& owner,
                                 const ModelState& base, size_t rank, StepId step) {
  if (rank >= owner.table.size())
    throw InvalidTree("extender rank " + std::to_string(rank) + " out of range at " +
                      owner.node.str());
  return ultrapowered(ws, owner, base, owner.table[rank], step);
}

UltrapowerResult ultrapower(Workspace& ws, const ModelState& m, size_t rank, StepId step) {
  if (rank >= m.table.size()) throw DescriptorNotOwned("rank out of range at " + m.node.str());
  return ultrapower_step(ws, m, m, rank, step);
}

}  // namespace itc
