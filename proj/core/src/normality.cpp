#include "itc/normality.hpp"

#include <algorithm>

namespace itc {

Point len_in_successor(const IterationState& st, size_t xi, bool* exact) {
  const DescRow& row = st.extender(xi);
  const ModelState& base = *st.steps[xi + 1].source_ptr();
  const Embedding& j = st.steps[xi + 1];
  if (auto r = base.row_by_core(row.core)) {
    if (exact) *exact = true;
    return j.apply(base.table[*r].len);
  }
  if (exact) *exact = false;
  // Monotone stand-in: the least target point above every image of the base
  // points below len(E_xi); kNone when the image exceeds the whole target.
  const ModelState& target = *st.models[xi + 1];
  Point bound = 0;
  bool any = false;
  for (size_t i = 0; i < base.universe.size(); ++i) {
    if (base.universe[i] >= row.len) break;
    bound = j.point_map()[i];
    any = true;
  }
  for (Point q : target.universe)
    if (!any || q > bound) return q;
  return kNone;
}

std::vector<size_t> bad_for_length(const IterationState& st) {
  std::vector<size_t> out;
  const size_t edges = st.tree.edge_count();
  for (size_t nu = 0; nu < edges; ++nu) {
    for (size_t g = nu + 1; g < edges; ++g) {
      if (st.extender(g).index < st.extender(nu).index) {
        out.push_back(nu);
        break;
      }
    }
  }
  return out;
}

std::vector<size_t> bad_for_crit(const IterationState& st) {
  std::vector<size_t> out;
  const size_t edges = st.tree.edge_count();
  for (size_t nu = 0; nu < edges; ++nu) {
    const size_t vstar = st.tree.tpred_index(nu + 1);
    const Point crit = st.extender(nu).crit;
    for (size_t xi = 0; xi < edges; ++xi) {
      const size_t sx = xi + 1;
      if (sx == nu + 1 || !st.tree.tree_le(sx, vstar)) continue;
      Point img = len_in_successor(st, xi, nullptr);
      if (img != kNone && sx != vstar) img = st.i_map(sx, vstar).apply(img);
      if (img == kNone || img > crit) {
        out.push_back(nu);
        break;
      }
    }
  }
  return out;
}

std::vector<size_t> bad_for_crit_footnote(const IterationState& st) {
  std::vector<size_t> out;
  const size_t edges = st.tree.edge_count();
  for (size_t nu = 0; nu < edges; ++nu) {
    const size_t vstar = st.tree.tpred_index(nu + 1);
    const Point crit = st.extender(nu).crit;
    for (size_t alpha = 0; alpha < vstar; ++alpha) {
      bool all = true;
      for (size_t xi = alpha + 1; xi <= vstar && all; ++xi)
        all = xi < edges && crit < st.extender(xi).len;
      if (all) {
        out.push_back(nu);
        break;
      }
    }
  }
  return out;
}

std::optional<size_t> deadwood_witness(const IterationState& st, size_t nu) {
  const size_t edges = st.tree.edge_count();
  for (size_t g = nu + 1; g < edges; ++g) {
    if (!(st.extender(g).index < st.extender(nu).index)) continue;
    bool blocked = false;
    for (size_t xi = g + 1; xi < st.tree.node_count() && !blocked; ++xi) {
      const size_t t = st.tree.tpred_index(xi);
      blocked = nu < t && t <= g;
    }
    if (!blocked) return g;
  }
  return std::nullopt;
}

std::vector<size_t> deadwood(const IterationState& st) {
  std::vector<size_t> out;
  for (size_t nu = 0; nu < st.tree.edge_count(); ++nu)
    if (deadwood_witness(st, nu)) out.push_back(nu);
  return out;
}

NormalityReport is_normal(const IterationState& st, bool weak) {
  NormalityReport rep;
  auto name = [&](size_t i) { return st.tree.node(i).name.str(); };
  for (size_t nu : bad_for_crit(st)) {
    rep.normal = false;
    rep.witnesses.push_back(Finding{"bad-for-crit", name(nu), "node bad for critical point"});
  }
  if (weak) return rep;
  const size_t edges = st.tree.edge_count();
  for (size_t a = 0; a + 1 < edges; ++a) {
    if (!(st.extender(a).index < st.extender(a + 1).index)) {
      rep.normal = false;
      rep.witnesses.push_back(Finding{"index-monotonicity", name(a + 1),
                                      "index(E_" + name(a + 1) + ") <= index(E_" + name(a) + ")"});
    }
  }
  for (size_t a = 0; a < edges; ++a) {
    const size_t want = backtrack(st, a);
    if (st.tree.tpred_index(a + 1) != want) {
      rep.normal = false;
      rep.witnesses.push_back(Finding{"least-predecessor", name(a),
                                      "tpred(" + name(a + 1) + ") != least legal node " +
                                          name(want)});
    }
  }
  return rep;
}

std::vector<Finding> monotonicity_divergence(const IterationState& st) {
  std::vector<Finding> out;
  for (size_t a = 0; a + 1 < st.tree.edge_count(); ++a) {
    const bool by_index = st.extender(a).index < st.extender(a + 1).index;
    const bool by_len = st.extender(a).len < st.extender(a + 1).len;
    if (by_index != by_len)
      out.push_back(Finding{"index-vs-len", st.tree.node(a).name.str(),
                            std::string("monotone by ") + (by_index ? "index only" : "len only")});
  }
  return out;
}

static IterationState prune_once(Workspace& ws, const IterationState& st, size_t nu, size_t g) {
  const size_t n = st.tree.node_count();
  for (size_t i = 0; i < n; ++i)
    if (!st.tree.node(i).name.is_plain())
      throw PruneFailed("remove_deadwood expects an ordinal-indexed tree");

  const size_t cut_len = g - nu;  // edges nu..g-1 are dropped
  const size_t m = n - cut_len;
  const uint32_t epoch = ws.fresh_epoch();
  auto remap = [&](size_t t) -> std::optional<size_t> {
    if (t <= nu) return t;
    if (t >= g + 1) return t - cut_len;
    return std::nullopt;
  };

  IterationState out;
  std::vector<NodeEntry> entries;
  entries.reserve(m);
  out.models.resize(m);
  out.steps.resize(m);
  for (size_t i = 0; i <= nu; ++i) out.models[i] = st.models[i];
  for (size_t i = 1; i <= nu; ++i) out.steps[i] = st.steps[i];
  for (size_t i = 0; i < nu; ++i) entries.push_back(st.tree.node(i));

  // Old edges g, g+1, ... re-seated at positions nu, nu+1, ...
  for (size_t k = nu; k + 1 < m; ++k) {
    const size_t o = k + cut_len;  // old edge index
    const DescRow& old_row = st.extender(o);
    auto rank = out.models[k]->row_by_core(old_row.core);
    if (!rank)
      throw PruneFailed("extender of old node " + st.tree.node(o).name.str() +
                        " is not available at position " + std::to_string(k));
    const DescRow& row = out.models[k]->table[*rank];
    size_t tp;
    if (auto t = remap(st.tree.tpred_index(o + 1))) {
      tp = *t;
    } else {
      // Orphaned predecessor: least surviving node whose extender reaches
      // past the orphan's critical point.
      std::optional<size_t> least;
      for (size_t e = 0; e <= k && !least; ++e) {
        const DescRow* er = nullptr;
        if (e < k) {
          if (entries[e].has_edge()) er = &out.models[e]->table[entries[e].extender_rank];
        } else {
          er = &row;
        }
        if (er && row.crit < er->len) least = e;
      }
      if (!least)
        throw PruneFailed("no legal predecessor for the orphaned edge at position " +
                          std::to_string(k));
      tp = *least;
    }
    const uint32_t entry_birth = (k == nu) ? st.tree.node(nu).birth : epoch;
    entries.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(k)), entry_birth,
                                static_cast<uint32_t>(*rank),
                                NodeName::plain(static_cast<uint32_t>(tp))});
    StepId step = ws.step(NodeName::plain(static_cast<uint32_t>(k + 1)), epoch, StepKind::tree);
    UltrapowerResult u = ultrapower_step(ws, *out.models[k], *out.models[tp], *rank, step);
    out.models[k + 1] = std::make_shared<const ModelState>(std::move(u.model));
    out.steps[k + 1] = Embedding::from_ultrapower(out.models[tp], out.models[k + 1], u);
  }
  entries.push_back(NodeEntry{NodeName::plain(static_cast<uint32_t>(m - 1)), epoch, kNone,
                              std::nullopt});
  out.tree = TreeDescriptor(std::move(entries));
  return out;
}

PruneResult remove_deadwood(Workspace& ws, const IterationState& st) {
  PruneResult res;
  res.state = st;
  while (true) {
    auto dw = deadwood(res.state);
    if (dw.empty()) break;
    const size_t nu = dw.front();
    const size_t g = *deadwood_witness(res.state, nu);
    res.trace.push_back(PruneStep{res.state.tree.node(nu).name, res.state.tree.node(g).name});
    res.state = prune_once(ws, res.state, nu, g);
    if (!validate(ws, res.state).empty())
      throw PruneFailed("pruned tree fails the validity requirement");
  }
  return res;
}

}  // namespace itc
