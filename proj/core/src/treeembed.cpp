#include "itc/treeembed.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace itc {

namespace {

// The one-step comparison map of the embedding recursion: sends the model at
// src node k+1 into the model at dst node sigma(k)+1, before the final tree
// push.  map_k moves generators, map_b moves image parents; the image points
// land at the dst step.
Embedding comparison_map(Workspace& ws, const IterationState& src, size_t k1,
                         const IterationState& dst, size_t t1, const Embedding& map_k,
                         const Embedding& map_b) {
  const ModelState& m = *src.models[k1];
  const ModelState& tgt = *dst.models[t1];
  StepId src_step = ws.step(src.tree.node(k1).name, src.tree.node(k1).birth, StepKind::tree);
  StepId dst_step = ws.step(dst.tree.node(t1).name, dst.tree.node(t1).birth, StepKind::tree);
  const Point crit = src.steps[k1].crit();

  std::vector<Point> pm;
  pm.reserve(m.universe.size());
  for (Point p : m.universe) {
    Point q;
    const PointData& pd = ws.point(p);
    if (pd.step == src_step) {
      q = ws.img_point(dst_step, map_b.apply(pd.parent));
    } else if (p < crit && map_b.source().contains(p)) {
      q = map_b.apply(p);
    } else {
      q = map_k.apply(p);  // generator region, moved as i^sigma_nu(a)
    }
    if (!tgt.contains(q))
      throw ClauseViolation(2, "image of " + ws.point_str(p) + " from " + m.node.str() +
                                   " does not land in " + tgt.node.str());
    pm.push_back(q);
  }
  std::vector<uint32_t> rm;
  rm.reserve(m.table.size());
  for (const DescRow& r : m.table) {
    const size_t pi = m.position(r.crit), pl = m.position(r.len), px = m.position(r.index);
    auto row = tgt.row_by_facts(pm[pi], pm[pl], pm[px]);
    if (!row)
      throw ClauseViolation(2, "descriptor image of row at " + m.node.str() +
                                   " missing from " + tgt.node.str());
    rm.push_back(static_cast<uint32_t>(*row));
  }
  Point c = kNone;
  for (size_t i = 0; i < pm.size(); ++i)
    if (pm[i] != m.universe[i]) {
      c = m.universe[i];
      break;
    }
  return Embedding::from_maps(src.models[k1], dst.models[t1], std::move(pm), std::move(rm), c);
}

// Shared recursion for the three entry points.  When building == true the dst
// side descriptor is the object under construction and rank/tpred choices are
// taken from the resolver callbacks.
Embedding extend_one(Workspace& ws, const IterationState& src, const IterationState& dst,
                     const std::vector<size_t>& sigma, size_t k,
                     const std::vector<Embedding>& maps) {
  const size_t k1 = k + 1;
  const size_t b = src.tree.tpred_index(k1);
  const size_t t = sigma[k];
  const size_t t1_final = sigma[k1];
  if (t + 1 >= dst.tree.node_count())
    throw ClauseViolation(3, "sigma image of edge " + src.tree.node(k).name.str() +
                                 " has no successor in the target");
  if (!dst.tree.tree_le(t + 1, t1_final))
    throw ClauseViolation(3, "sigma(" + src.tree.node(k).name.str() + ")+1 is not a tree "
                             "predecessor of sigma(" + src.tree.node(k1).name.str() + ")");
  if (sigma[b] != dst.tree.tpred_index(t + 1))
    throw BacktrackMismatch("sigma does not commute with tpred at edge " +
                            src.tree.node(k).name.str());
  Embedding into_t1 = comparison_map(ws, src, k1, dst, t + 1, maps[k], maps[b]);
  Embedding push = dst.i_map(t + 1, t1_final);
  return Embedding::compose(into_t1, push);
}

void check_clause2(const IterationState& src, const IterationState& dst,
                   const std::vector<size_t>& sigma, size_t k, const Embedding& map_k) {
  const DescRow& e = src.extender(k);
  if (sigma[k] + 1 >= dst.tree.node_count() || !dst.tree.node(sigma[k]).has_edge())
    throw ClauseViolation(2, "sigma image of edge " + src.tree.node(k).name.str() +
                                 " carries no extender");
  const DescRow& e2 = dst.extender(sigma[k]);
  if (map_k.apply(e.crit) != e2.crit || map_k.apply(e.len) != e2.len ||
      map_k.apply(e.index) != e2.index)
    throw ClauseViolation(2, "i^sigma(E_" + src.tree.node(k).name.str() + ") != E'_" +
                                 dst.tree.node(sigma[k]).name.str());
}

void check_backtrack_commutes(const IterationState& src, const IterationState& dst,
                              const std::vector<size_t>& sigma, size_t k) {
  if (sigma[backtrack(src, k)] != backtrack(dst, sigma[k]))
    throw BacktrackMismatch("sigma(backtrack(" + src.tree.node(k).name.str() +
                            ")) != backtrack(sigma)");
}

}  // namespace

bool same_shape(const TreeDescriptor& a, const TreeDescriptor& b) {
  if (a.node_count() != b.node_count()) return false;
  for (size_t i = 0; i < a.node_count(); ++i) {
    if (a.node(i).extender_rank != b.node(i).extender_rank) return false;
    if (a.node(i).has_edge() != b.node(i).has_edge()) return false;
    if (a.node(i).has_edge() && a.tpred_index(i + 1) != b.tpred_index(i + 1)) return false;
  }
  return true;
}

TreeEmbedding derive_maps(Workspace& ws, const IterationState& src, const IterationState& dst,
                          std::vector<size_t> sigma, Embedding base) {
  const size_t n = src.tree.node_count();
  if (sigma.size() != n) throw Error("derive_maps: sigma arity mismatch");
  for (size_t i = 0; i + 1 < n; ++i)
    if (sigma[i] >= sigma[i + 1]) throw Error("derive_maps: sigma not strictly increasing");
  for (size_t s : sigma)
    if (s >= dst.tree.node_count()) throw NotInDomain("sigma image out of the target domain");

  // Clause 1: the edge image set must be a support in the target.
  {
    Support range;
    for (size_t k = 0; k + 1 < n; ++k) range.insert(sigma[k]);
    // The workspace is only needed for fact provenance; reuse the caller's.
    if (!is_support(ws, dst, range))
      throw ClauseViolation(1, "sigma range is not a support in the target tree");
  }

  TreeEmbedding emb;
  emb.sigma = sigma;
  emb.base = base;
  emb.node_maps.resize(n);
  emb.node_maps[0] = Embedding::compose(base, dst.i_map(0, sigma[0]));
  for (size_t k = 0; k + 1 < n; ++k) {
    check_clause2(src, dst, sigma, k, emb.node_maps[k]);
    check_backtrack_commutes(src, dst, sigma, k);
    emb.node_maps[k + 1] = extend_one(ws, src, dst, sigma, k, emb.node_maps);
  }
  return emb;
}

std::vector<Finding> verify_tree_embedding(Workspace& ws, const IterationState& src,
                                           const IterationState& dst, const TreeEmbedding& emb) {
  std::vector<Finding> out;
  const size_t n = src.tree.node_count();
  auto fail = [&](const std::string& rule, const std::string& where, const std::string& d) {
    out.push_back(Finding{rule, where, d});
  };

  // Clause 1 on the recorded range.
  {
    Support range;
    for (size_t k = 0; k + 1 < n; ++k) range.insert(emb.sigma[k]);
    if (!is_support(ws, dst, range))
      fail("clause-1", "sigma range", "not a support in the target");
  }

  for (size_t k = 0; k + 1 < n; ++k) {
    // Prop 1.3(1).
    if (emb.sigma[backtrack(src, k)] != backtrack(dst, emb.sigma[k]))
      fail("prop13-1", src.tree.node(k).name.str(), "backtrack does not commute with sigma");
    // Clause 2 reasserted.
    const DescRow& e = src.extender(k);
    const DescRow& e2 = dst.extender(emb.sigma[k]);
    const Embedding& mk = emb.node_maps[k];
    if (mk.apply(e.crit) != e2.crit || mk.apply(e.len) != e2.len || mk.apply(e.index) != e2.index)
      fail("clause-2", src.tree.node(k).name.str(), "extender image mismatch");
    // Clause 3.
    if (!dst.tree.tree_le(emb.sigma[k] + 1, emb.sigma[k + 1]))
      fail("clause-3", src.tree.node(k).name.str(), "sigma(nu)+1 not <= sigma(nu+1)");
  }

  // Prop 1.3(3): agreement below each len and no shrinking at len.
  for (size_t a = 0; a + 1 < n; ++a) {
    const Point rho = src.extender(a).len;
    for (size_t bnode = a + 1; bnode < n; ++bnode) {
      const ModelState& ma = *src.models[a];
      const ModelState& mb = *src.models[bnode];
      for (Point p : ma.universe) {
        if (p >= rho) break;
        if (!mb.contains(p)) continue;
        if (emb.node_maps[a].apply(p) != emb.node_maps[bnode].apply(p)) {
          fail("prop13-3", src.tree.node(a).name.str() + "/" + src.tree.node(bnode).name.str(),
               "maps disagree below len(E_" + src.tree.node(a).name.str() + ") at " +
                   ws.point_str(p));
          break;
        }
      }
      if (mb.contains(rho) && ma.contains(rho) &&
          emb.node_maps[bnode].apply(rho) < emb.node_maps[a].apply(rho))
        fail("prop13-3", src.tree.node(a).name.str(), "image of len shrinks");
    }
  }

  // Prop 1.3(4): each node map is a valid embedding.
  for (size_t k = 0; k < n; ++k) {
    for (Finding& f : emb.node_maps[k].check(ws)) out.push_back(std::move(f));
    if (!(emb.node_maps[k].target().node == dst.tree.node(emb.sigma[k]).name))
      fail("prop13-4", src.tree.node(k).name.str(), "node map targets the wrong model");
  }

  // Step-comparison agreement up to the image of the extender index: the
  // final tree push must fix the low part of the one-step comparison.
  for (size_t k = 0; k + 1 < n; ++k) {
    const size_t b = src.tree.tpred_index(k + 1);
    const ModelState& base = *src.steps[k + 1].source_ptr();
    auto row = base.row_by_core(src.extender(k).core);
    if (!row) continue;  // index image unavailable; nothing to compare against
    const Point gamma1 = src.steps[k + 1].apply(base.table[*row].index);
    try {
      // The node map is the pushed comparison map, so the assertion is that
      // the tree push fixes everything up to the index image.
      Embedding cmp = comparison_map(ws, src, k + 1, dst, emb.sigma[k] + 1, emb.node_maps[k],
                                     emb.node_maps[b]);
      const ModelState& m = *src.models[k + 1];
      for (Point p : m.universe) {
        if (p > gamma1) break;
        if (cmp.apply(p) != emb.node_maps[k + 1].apply(p)) {
          fail("step-agreement", src.tree.node(k).name.str(),
               "comparison map and node map diverge at " + ws.point_str(p));
          break;
        }
      }
    } catch (const Error& err) {
      fail("step-agreement", src.tree.node(k).name.str(), err.what());
    }
  }

  // Naturality squares, exact point-map equality.
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (!src.tree.tree_le(a, b)) continue;
      if (!dst.tree.tree_le(emb.sigma[a], emb.sigma[b])) {
        fail("naturality", src.tree.node(a).name.str() + "->" + src.tree.node(b).name.str(),
             "sigma does not preserve the tree order");
        continue;
      }
      Embedding lhs = Embedding::compose(src.i_map(a, b), emb.node_maps[b]);
      Embedding rhs = Embedding::compose(emb.node_maps[a], dst.i_map(emb.sigma[a], emb.sigma[b]));
      if (!lhs.same_map_as(rhs))
        fail("naturality", src.tree.node(a).name.str() + "->" + src.tree.node(b).name.str(),
             "square does not commute");
    }
  }

  return out;
}

ElementPtr apply_sigma(const IterationState& src, const IterationState& dst,
                       const TreeEmbedding& emb, size_t node, const ElementPtr& x) {
  switch (x->kind) {
    case Element::Kind::atom:
      return x;
    case Element::Kind::point:
      return Element::make_point(emb.node_maps[node].apply(x->pt));
    case Element::Kind::term: {
      if (!(x->seat == src.tree.node(node).name))
        throw WrongModel("apply_sigma: term seat mismatch");
      const size_t e = src.tree.index_of(x->edge);
      Symbol sym = x->sym;
      const size_t h = src.tree.index_of(x->sym.home);
      sym.home = dst.tree.node(emb.sigma[h]).name;
      if (sym.payload) sym.payload = apply_sigma(src, dst, emb, h, sym.payload);
      std::vector<Point> gens;
      gens.reserve(x->gens.size());
      for (Point g : x->gens) gens.push_back(emb.node_maps[e].apply(g));
      return Element::make_term(dst.tree.node(emb.sigma[e]).name, std::move(sym),
                                std::move(gens), dst.tree.node(emb.sigma[node]).name);
    }
  }
  throw Error("unreachable element kind");
}

SubtreeResult subtree_embedding(Workspace& ws, const IterationState& st, const Support& y) {
  if (!is_support(ws, st, y)) throw NotASupport("the given edge set is not a support");
  const uint32_t epoch = ws.fresh_epoch();
  std::vector<size_t> edges(y.begin(), y.end());
  const size_t m = edges.size();

  SubtreeResult res;
  res.emb.sigma.reserve(m + 1);
  for (size_t e : edges) res.emb.sigma.push_back(e);
  res.emb.sigma.push_back(m == 0 ? 0 : edges.back() + 1);
  res.emb.base = Embedding::identity(st.models[0]);

  IterationState& sub = res.sub;
  sub.models.resize(m + 1);
  sub.steps.resize(m + 1);
  res.emb.node_maps.resize(m + 1);
  sub.models[0] = st.models[0];
  res.emb.node_maps[0] = Embedding::compose(res.emb.base, st.i_map(0, res.emb.sigma[0]));

  std::vector<NodeEntry> entries;
  for (size_t k = 0; k < m; ++k) {
    const size_t nu = edges[k];
    // Pull the extender back through the node map.
    const DescRow& target_row = st.extender(nu);
    const ModelState& mk = *sub.models[k];
    const Embedding& map_k = res.emb.node_maps[k];
    std::optional<size_t> rank;
    for (size_t r = 0; r < mk.table.size() && !rank; ++r) {
      const DescRow& cand = mk.table[r];
      if (map_k.apply(cand.crit) == target_row.crit && map_k.apply(cand.len) == target_row.len &&
          map_k.apply(cand.index) == target_row.index)
        rank = r;
    }
    if (!rank)
      throw NotASupport("extender of edge " + st.tree.node(nu).name.str() +
                        " has no preimage in the subtree");
    const size_t t = st.tree.tpred_index(nu + 1);
    auto bpos = std::find(edges.begin(), edges.end(), t);
    if (bpos == edges.end())
      throw NotASupport("declared predecessor of edge " + st.tree.node(nu).name.str() +
                        " missing from the support");
    const size_t b = static_cast<size_t>(bpos - edges.begin());
    entries.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(k)), epoch,
                                static_cast<uint32_t>(*rank),
                                NodeName::plain(static_cast<uint32_t>(b))});
    StepId step = ws.step(NodeName::plain(static_cast<uint32_t>(k + 1)), epoch, StepKind::tree);
    UltrapowerResult u = ultrapower_step(ws, *sub.models[k], *sub.models[b], *rank, step);
    sub.models[k + 1] = std::make_shared<const ModelState>(std::move(u.model));
    sub.steps[k + 1] = Embedding::from_ultrapower(sub.models[b], sub.models[k + 1], u);

    // Extend the node-map family; the partial descriptor is enough for the
    // checks involved.
    std::vector<NodeEntry> sofar = entries;
    sofar.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(k + 1)), epoch, kNone,
                              std::nullopt});
    sub.tree = TreeDescriptor(sofar);
    check_clause2(sub, st, res.emb.sigma, k, map_k);
    check_backtrack_commutes(sub, st, res.emb.sigma, k);
    res.emb.node_maps[k + 1] = extend_one(ws, sub, st, res.emb.sigma, k, res.emb.node_maps);
  }
  if (m == 0) {
    sub.tree = TreeDescriptor({NodeEntry{NodeName::plain(0), epoch, kNone, std::nullopt}});
  }
  return res;
}

namespace {

// Provenance mirror of an element of st into a support subtree.  Returns the
// sub node at which the mirror canonically lives; image steps whose edge is
// outside the support are peeled (the final tree push re-applies them).
struct MirrorCtx {
  Workspace& ws;
  const IterationState& st;
  const SubtreeResult& sub;

  std::optional<size_t> edge_pos(size_t e) const {
    for (size_t k = 0; k + 1 < sub.emb.sigma.size(); ++k)
      if (sub.emb.sigma[k] == e) return k;
    if (sub.emb.sigma.size() == 1 && sub.emb.sigma[0] == e) return std::nullopt;
    return std::nullopt;
  }

  std::optional<std::pair<size_t, Point>> point(size_t i, Point p) const {
    if (i == 0) return std::make_pair(size_t{0}, p);
    const size_t e = i - 1;
    const size_t b = st.tree.tpred_index(i);
    const PointData& pd = ws.point(p);
    StepId step_i = ws.step(st.tree.node(i).name, st.tree.node(i).birth, StepKind::tree);
    if (pd.step == step_i) {
      if (auto pos = edge_pos(e)) {
        const size_t ki = *pos + 1;
        auto inner = point(b, pd.parent);
        if (!inner) return std::nullopt;
        const size_t sb = sub.sub.tree.tpred_index(ki);
        if (!sub.sub.models[sb]->contains(inner->second)) return std::nullopt;
        StepId s = ws.step(sub.sub.tree.node(ki).name, sub.sub.tree.node(ki).birth,
                           StepKind::tree);
        Point q = ws.img_point(s, inner->second);
        if (!sub.sub.models[ki]->contains(q)) return std::nullopt;
        return std::make_pair(ki, q);
      }
      return point(b, pd.parent);  // peel; the final push re-applies the step
    }
    if (st.models[b]->contains(p) && p < st.steps[i].crit()) return point(b, p);
    // Generator of the incoming edge.
    auto pos = edge_pos(e);
    if (!pos) return std::nullopt;
    auto inner = point(e, p);
    if (!inner) return std::nullopt;
    const size_t ki = *pos + 1;
    if (!sub.sub.models[ki]->contains(inner->second)) return std::nullopt;
    return std::make_pair(ki, inner->second);
  }

  std::optional<std::pair<size_t, ElementPtr>> element(size_t i, const ElementPtr& x) const {
    switch (x->kind) {
      case Element::Kind::atom:
        return std::make_pair(size_t{0}, x);
      case Element::Kind::point: {
        auto r = point(i, x->pt);
        if (!r) return std::nullopt;
        return std::make_pair(r->first, Element::make_point(r->second));
      }
      case Element::Kind::term: {
        const size_t e = st.tree.index_of(x->edge);
        if (i != e + 1) {
          // Unwind the re-seating step.
          const Embedding& j = st.steps[i];
          std::vector<Point> pre;
          for (Point g : x->gens) {
            const auto& pm = j.point_map();
            auto it = std::find(pm.begin(), pm.end(), g);
            if (it == pm.end()) return std::nullopt;
            pre.push_back(j.source().universe[static_cast<size_t>(it - pm.begin())]);
          }
          const size_t b = st.tree.tpred_index(i);
          return element(b, Element::make_term(x->edge, x->sym, std::move(pre),
                                               st.tree.node(b).name));
        }
        auto pos = edge_pos(e);
        if (!pos) return std::nullopt;
        const size_t ke = *pos;
        std::vector<Point> gens;
        for (Point g : x->gens) {
          auto r = point(e, g);
          if (!r || !sub.sub.models[ke]->contains(r->second)) return std::nullopt;
          gens.push_back(r->second);
        }
        Symbol sym = x->sym;
        const size_t home = st.tree.index_of(x->sym.home);
        const size_t sub_home = sub.sub.tree.tpred_index(ke + 1);
        sym.home = sub.sub.tree.node(sub_home).name;
        if (sub.emb.sigma[sub_home] != home) return std::nullopt;
        if (sym.payload) {
          auto r = element(home, sym.payload);
          if (!r) return std::nullopt;
          if (r->second->kind == Element::Kind::point &&
              !sub.sub.models[sub_home]->contains(r->second->pt))
            return std::nullopt;
          if (r->second->kind == Element::Kind::term &&
              !(r->second->seat == sym.home))
            return std::nullopt;
          sym.payload = r->second;
        }
        return std::make_pair(ke + 1,
                              Element::make_term(sub.sub.tree.node(ke).name, std::move(sym),
                                                 std::move(gens),
                                                 sub.sub.tree.node(ke + 1).name));
      }
    }
    return std::nullopt;
  }
};

}  // namespace

RecoveryCheck check_element_recovery(Workspace& ws, const IterationState& st, size_t node,
                                     const ElementPtr& x) {
  RecoveryCheck rc;
  rc.support = support_of(ws, st, node, x);
  rc.support_ok = is_support(ws, st, rc.support);
  if (!rc.support_ok) {
    rc.detail = "support closure check failed";
    return rc;
  }
  SubtreeResult sub = subtree_embedding(ws, st, rc.support);
  MirrorCtx ctx{ws, st, sub};
  auto m = ctx.element(node, x);
  if (!m) {
    rc.detail = "no mirror witness in the subtree";
    return rc;
  }
  const size_t k = m->first;
  const size_t target = sub.emb.sigma[k];
  if (!st.tree.tree_le(target, node)) {
    rc.detail = "witness image node is not below the element's node";
    return rc;
  }
  ElementPtr img = apply_sigma(sub.sub, st, sub.emb, k, m->second);
  if (target != node) img = apply_to_element(st.i_map(target, node), img);
  rc.recovered = (*img == *x);
  if (!rc.recovered) rc.detail = "witness image differs from the element";
  return rc;
}

SupportSuiteReport finite_support_theorem(Workspace& ws, const IterationState& st,
                                          const EnumCaps& caps) {
  SupportSuiteReport rep;
  std::map<Support, SubtreeResult> cache;
  for (size_t i = 0; i < st.tree.node_count(); ++i) {
    for (const ElementPtr& x : enumerate_elements(ws, st, i, caps)) {
      ++rep.elements_checked;
      Support y = support_of(ws, st, i, x);
      if (!is_support(ws, st, y)) {
        rep.findings.push_back(Finding{"finite-support", st.tree.node(i).name.str(),
                                       "support_of result fails is_support for " + x->str(ws)});
        continue;
      }
      auto it = cache.find(y);
      if (it == cache.end()) {
        it = cache.emplace(y, subtree_embedding(ws, st, y)).first;
        ++rep.subtrees_built;
      }
      MirrorCtx ctx{ws, st, it->second};
      auto m = ctx.element(i, x);
      bool ok = false;
      if (m) {
        const size_t target = it->second.emb.sigma[m->first];
        if (st.tree.tree_le(target, i)) {
          ElementPtr img = apply_sigma(it->second.sub, st, it->second.emb, m->first, m->second);
          if (target != i) img = apply_to_element(st.i_map(target, i), img);
          ok = (*img == *x);
        }
      }
      if (!ok)
        rep.findings.push_back(Finding{"finite-support", st.tree.node(i).name.str(),
                                       "element not recovered: " + x->str(ws)});
    }
  }
  return rep;
}

std::vector<Finding> indiscernibility_check(Workspace& ws, const IterationState& st,
                                            const EnumCaps& caps) {
  std::vector<Finding> out;
  // Collect the supports of the sampled elements, then compare embeddings of
  // shape-equal subtrees.
  std::vector<Support> supports;
  for (size_t i = 0; i < st.tree.node_count(); ++i)
    for (const ElementPtr& x : enumerate_elements(ws, st, i, caps)) {
      Support y = support_of(ws, st, i, x);
      if (is_support(ws, st, y) && !y.empty() &&
          std::find(supports.begin(), supports.end(), y) == supports.end())
        supports.push_back(y);
    }
  for (size_t a = 0; a < supports.size(); ++a) {
    for (size_t b = a + 1; b < supports.size(); ++b) {
      SubtreeResult sa = subtree_embedding(ws, st, supports[a]);
      SubtreeResult sb = subtree_embedding(ws, st, supports[b]);
      if (!same_shape(sa.sub.tree, sb.sub.tree)) continue;
      // Positionally corresponding elements must stand in the same order and
      // equality relations after embedding.
      for (size_t node = 0; node < sa.sub.tree.node_count(); ++node) {
        auto ea = enumerate_elements(ws, sa.sub, node, caps);
        auto eb = enumerate_elements(ws, sb.sub, node, caps);
        if (ea.size() != eb.size()) continue;
        std::vector<ElementPtr> ia, ib;
        for (size_t k = 0; k < ea.size(); ++k) {
          ia.push_back(apply_sigma(sa.sub, st, sa.emb, node, ea[k]));
          ib.push_back(apply_sigma(sb.sub, st, sb.emb, node, eb[k]));
        }
        for (size_t p = 0; p < ia.size(); ++p) {
          for (size_t q = p + 1; q < ia.size(); ++q) {
            const bool eq_a = *ia[p] == *ia[q], eq_b = *ib[p] == *ib[q];
            if (eq_a != eq_b) {
              out.push_back(Finding{"indiscernibility", st.tree.node(0).name.str(),
                                    "equality pattern differs between support embeddings"});
              continue;
            }
            if (ia[p]->kind == Element::Kind::point && ia[q]->kind == Element::Kind::point &&
                ib[p]->kind == Element::Kind::point && ib[q]->kind == Element::Kind::point) {
              const bool lt_a = ia[p]->pt < ia[q]->pt, lt_b = ib[p]->pt < ib[q]->pt;
              if (lt_a != lt_b)
                out.push_back(Finding{"indiscernibility", st.tree.node(0).name.str(),
                                      "order pattern differs between support embeddings"});
            }
          }
        }
      }
    }
  }
  return out;
}

PushResult push_tree(Workspace& ws, const IterationState& st, const Embedding& base) {
  const size_t n = st.tree.node_count();
  const uint32_t epoch = ws.fresh_epoch();
  PushResult res;
  res.emb.sigma.resize(n);
  for (size_t i = 0; i < n; ++i) res.emb.sigma[i] = i;
  res.emb.base = base;
  res.emb.node_maps.resize(n);

  IterationState& out = res.pushed;
  out.models.resize(n);
  out.steps.resize(n);
  out.models[0] = base.target_ptr();
  res.emb.node_maps[0] = base;

  std::vector<NodeEntry> entries;
  for (size_t k = 0; k + 1 < n; ++k) {
    const Embedding& map_k = res.emb.node_maps[k];
    const DescRow& e = st.extender(k);
    auto rank = out.models[k]->row_by_facts(map_k.apply(e.crit), map_k.apply(e.len),
                                            map_k.apply(e.index));
    if (!rank)
      throw InvalidTree("push_tree: image of E_" + st.tree.node(k).name.str() +
                        " is not available in the pushed model");
    const size_t b = st.tree.tpred_index(k + 1);
    entries.push_back(NodeEntry{st.tree.node(k).name, epoch, static_cast<uint32_t>(*rank),
                                st.tree.node(b).name});
    StepId step = ws.step(st.tree.node(k + 1).name, epoch, StepKind::tree);
    UltrapowerResult u = ultrapower_step(ws, *out.models[k], *out.models[b], *rank, step);
    out.models[k + 1] = std::make_shared<const ModelState>(std::move(u.model));
    out.steps[k + 1] = Embedding::from_ultrapower(out.models[b], out.models[k + 1], u);

    std::vector<NodeEntry> sofar = entries;
    sofar.push_back(NodeEntry{st.tree.node(k + 1).name, epoch, kNone, std::nullopt});
    out.tree = TreeDescriptor(sofar);
    check_clause2(st, out, res.emb.sigma, k, map_k);
    check_backtrack_commutes(st, out, res.emb.sigma, k);
    res.emb.node_maps[k + 1] = extend_one(ws, st, out, res.emb.sigma, k, res.emb.node_maps);
  }
  if (n == 1) out.tree = TreeDescriptor({NodeEntry{st.tree.node(0).name, epoch, kNone,
                                                   std::nullopt}});
  return res;
}

}  // namespace itc
