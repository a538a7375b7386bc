#include "itc/support.hpp"

#include <algorithm>

namespace itc {

namespace {

// Raw provenance edges of a point viewed in the model at node i, relative to
// the three canonical cases: image from the predecessor, identity image, or a
// generator of the incoming edge.
void point_support(const Workspace& ws, const IterationState& st, size_t i, Point p,
                   Support& out) {
  while (true) {
    if (!st.models[i]->contains(p)) throw WrongModel("point not in model " + std::to_string(i));
    if (i == 0) {
      if (!ws.is_base(p)) throw WrongModel("non-base point in the base model");
      return;
    }
    const size_t e = i - 1;  // edge into node i
    const size_t b = st.tree.tpred_index(i);
    const PointData& pd = ws.point(p);
    const Embedding& j = st.steps[i];
    if (pd.step != kNone && ws.step(pd.step).node == st.tree.node(i).name &&
        ws.step(pd.step).birth == st.tree.node(i).birth) {
      // Image point of this very step: x = j(parent).
      i = b;
      p = pd.parent;
      continue;
    }
    if (st.models[b]->contains(p) && p < j.crit()) {
      // Identity image from the predecessor model.
      i = b;
      continue;
    }
    // A generator of E_e: charge the edge and descend into its owner.
    out.insert(e);
    i = e;
  }
}

void element_support(const Workspace& ws, const IterationState& st, size_t i,
                     const ElementPtr& x, Support& out) {
  switch (x->kind) {
    case Element::Kind::atom:
      return;
    case Element::Kind::point:
      point_support(ws, st, i, x->pt, out);
      return;
    case Element::Kind::term: {
      if (!(x->seat == st.tree.node(i).name))
        throw WrongModel("term seated at " + x->seat.str() + " examined at node " +
                         std::to_string(i));
      const size_t e = st.tree.index_of(x->edge);
      if (i != e + 1) {
        // Re-seated term: unwind the last canonical step (an image, so the
        // support is the preimage's support).
        const Embedding& j = st.steps[i];
        std::vector<Point> pre;
        pre.reserve(x->gens.size());
        for (Point g : x->gens) {
          const auto& pm = j.point_map();
          auto it = std::find(pm.begin(), pm.end(), g);
          if (it == pm.end())
            throw WrongModel("re-seated term generator has no preimage under the step into " +
                             x->seat.str());
          pre.push_back(j.source().universe[static_cast<size_t>(it - pm.begin())]);
        }
        const size_t b = st.tree.tpred_index(i);
        element_support(ws, st, b,
                        Element::make_term(x->edge, x->sym, std::move(pre),
                                           st.tree.node(b).name),
                        out);
        return;
      }
      // Bracket at its own node: the edge, the generators in the owner, the
      // symbol payload in the model the function lives in.
      out.insert(e);
      for (Point g : x->gens) point_support(ws, st, e, g, out);
      if (x->sym.payload) {
        const size_t h = st.tree.index_of(x->sym.home);
        element_support(ws, st, h, x->sym.payload, out);
      }
      return;
    }
  }
}

}  // namespace

// Edges feeding the facts of the extender at edge e, viewed in its own model.
static Support fact_edges(const Workspace& ws, const IterationState& st, size_t e) {
  Support out;
  const DescRow& row = st.extender(e);
  point_support(ws, st, e, row.crit, out);
  point_support(ws, st, e, row.len, out);
  point_support(ws, st, e, row.index, out);
  return out;
}

Support support_closure(const Workspace& ws, const IterationState& st, Support raw) {
  Support y = std::move(raw);
  bool grew = true;
  while (grew) {
    grew = false;
    Support next = y;
    for (size_t e : y) {
      next.insert(backtrack(st, e));
      next.insert(st.tree.tpred_index(e + 1));
      Support f = fact_edges(ws, st, e);
      next.insert(f.begin(), f.end());
    }
    if (next != y) {
      y = std::move(next);
      grew = true;
    }
  }
  return y;
}

bool is_support(const Workspace& ws, const IterationState& st, const Support& y) {
  for (size_t e : y) {
    if (e >= st.tree.edge_count()) return false;
    if (!y.count(backtrack(st, e))) return false;
    if (!y.count(st.tree.tpred_index(e + 1))) return false;
    for (size_t f : fact_edges(ws, st, e))
      if (!y.count(f)) return false;
  }
  return true;
}

Support support_of(const Workspace& ws, const IterationState& st, size_t i, const ElementPtr& x) {
  Support raw;
  element_support(ws, st, i, x, raw);
  return support_closure(ws, st, std::move(raw));
}

namespace {

// Evenly spread sample of an ascending point vector.
std::vector<Point> sample_points(const std::vector<Point>& universe, size_t want) {
  std::vector<Point> out;
  if (universe.empty() || want == 0) return out;
  if (universe.size() <= want) return universe;
  for (size_t j = 0; j < want; ++j)
    out.push_back(universe[j * (universe.size() - 1) / (want - 1 ? want - 1 : 1)]);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ElementPtr> enumerate_elements(const Workspace& ws, const IterationState& st,
                                           size_t i, const EnumCaps& caps) {
  std::vector<ElementPtr> out;
  std::unordered_set<ElementPtr, ElementPtrHash, ElementPtrEq> seen;
  auto add = [&](const ElementPtr& e) {
    if (seen.insert(e).second) out.push_back(e);
  };

  for (uint32_t a = 0; a < ws.atoms().size(); ++a) add(Element::make_atom(a));
  for (Point p : sample_points(st.models[i]->universe, caps.max_points))
    add(Element::make_point(p));

  if (i == 0) return out;
  const size_t b = st.tree.tpred_index(i);

  // Re-seated predecessor elements.
  {
    size_t pushed = 0;
    for (const ElementPtr& x : enumerate_elements(ws, st, b, caps)) {
      if (pushed >= caps.max_pushed) break;
      add(apply_to_element(st.steps[i], x));
      ++pushed;
    }
  }

  if (caps.depth < 1) return out;
  const size_t e = i - 1;
  const DescRow& row = st.extender(e);
  const ModelState& owner = *st.models[e];
  std::vector<Point> gen_region;
  for (Point p : owner.universe) {
    if (p >= row.len) break;
    gen_region.push_back(p);
  }
  const std::vector<Point> gens = sample_points(gen_region, caps.max_gens);
  const NodeName home = st.tree.node(b).name;

  std::vector<Symbol> syms;
  for (uint32_t id = 0; id < caps.opaque_symbols; ++id)
    syms.push_back(Symbol{SymbolFamily::opaque, id, nullptr, home});
  if (caps.depth >= 2) {
    EnumCaps inner = caps;
    inner.depth = caps.depth - 1;
    size_t taken = 0;
    for (const ElementPtr& pe : enumerate_elements(ws, st, b, inner)) {
      if (taken >= caps.payload_samples) break;
      if (pe->kind == Element::Kind::atom) continue;
      syms.push_back(Symbol{SymbolFamily::constant, 0, pe, home});
      syms.push_back(Symbol{SymbolFamily::cut_below, 0, pe, home});
      ++taken;
    }
  }

  const NodeName edge_name = st.tree.node(e).name;
  const NodeName seat = st.tree.node(i).name;
  for (const Symbol& sym : syms) {
    add(Element::make_term(edge_name, sym, {}, seat));
    for (size_t a = 0; a < gens.size(); ++a) {
      if (caps.max_arity >= 1)
        add(Element::make_term(edge_name, sym, {gens[a]}, seat));
      if (caps.max_arity >= 2)
        for (size_t c = a + 1; c < gens.size(); ++c)
          add(Element::make_term(edge_name, sym, {gens[a], gens[c]}, seat));
    }
  }
  return out;
}

}  // namespace itc
