#include "itc/iterate.hpp"

#include <algorithm>

namespace itc {

const DescRow& IterationState::extender(size_t i) const {
  const NodeEntry& e = tree.node(i);
  if (!e.has_edge()) throw NotInDomain("node " + e.name.str() + " has no extender");
  return models[i]->table.at(e.extender_rank);
}

Embedding IterationState::i_map(size_t a, size_t b) const {
  const std::vector<size_t> path = tree.branch_path(a, b);
  Embedding acc = Embedding::identity(models[a]);
  for (size_t k = 1; k < path.size(); ++k) acc = Embedding::compose(acc, steps[path[k]]);
  return acc;
}

ModelState base_model(Workspace& ws, uint32_t universe_size,
                      const std::vector<std::array<uint32_t, 3>>& rows) {
  ModelState m;
  m.node = NodeName::plain(0);
  m.birth = 0;
  m.universe.reserve(universe_size);
  for (uint32_t i = 0; i < universe_size; ++i) m.universe.push_back(ws.base_point(i));
  for (uint32_t r = 0; r < rows.size(); ++r) {
    const auto& [crit, len, index] = rows[r];
    if (!(crit < len && len <= index))
      throw InvalidTree("descriptor " + std::to_string(r) + " violates crit < len <= index");
    if (index >= universe_size)
      throw InvalidTree("descriptor " + std::to_string(r) + " exceeds the universe");
    m.table.push_back(DescRow{ws.base_core(r), ws.base_point(crit), ws.base_point(len),
                              ws.base_point(index)});
  }
  std::sort(m.table.begin(), m.table.end(),
            [](const DescRow& a, const DescRow& b) { return a.index < b.index; });
  for (size_t i = 0; i + 1 < m.table.size(); ++i)
    if (m.table[i].index == m.table[i + 1].index)
      throw InvalidTree("descriptor indices are not pairwise distinct");
  return m;
}

IterationState iterate(Workspace& ws, TreeDescriptor tree,
                       std::shared_ptr<const ModelState> base) {
  IterationState st;
  st.models.resize(tree.node_count());
  st.steps.resize(tree.node_count());
  if (tree.node_count() == 0) throw InvalidTree("empty tree");
  st.models[0] = std::move(base);
  for (size_t i = 1; i < tree.node_count(); ++i) {
    const NodeEntry& edge = tree.node(i - 1);
    if (edge.extender_rank >= st.models[i - 1]->table.size())
      throw InvalidTree("extender rank out of range at node " + edge.name.str());
    const size_t p = tree.tpred_index(i);
    StepId step = ws.step(tree.node(i).name, tree.node(i).birth, StepKind::tree);
    UltrapowerResult u =
        ultrapower_step(ws, *st.models[i - 1], *st.models[p], edge.extender_rank, step);
    st.models[i] = std::make_shared<const ModelState>(std::move(u.model));
    st.steps[i] = Embedding::from_ultrapower(st.models[p], st.models[i], u);
  }
  st.tree = std::move(tree);
  return st;
}

std::vector<Finding> validate(const Workspace& ws, const IterationState& st) {
  (void)ws;
  std::vector<Finding> out;
  for (size_t a = 0; a + 1 < st.tree.node_count(); ++a) {
    const Point crit = st.extender(a).crit;
    const size_t p = st.tree.tpred_index(a + 1);
    for (size_t nu = p; nu < a; ++nu) {
      if (st.extender(nu).len < crit)
        out.push_back(Finding{"validity",
                              "edge " + st.tree.node(a).name.str(),
                              "len(E_" + st.tree.node(nu).name.str() + ") < crit(E_" +
                                  st.tree.node(a).name.str() + ")"});
    }
  }
  return out;
}

size_t backtrack(const IterationState& st, size_t edge) {
  if (edge + 1 >= st.tree.node_count()) throw NotInDomain("backtrack: not an edge node");
  const Point crit = st.extender(edge).crit;
  for (size_t e = 0; e <= edge; ++e)
    if (crit < st.extender(e).len) return e;
  throw NoPredecessor("no node reaches past crit of edge " + st.tree.node(edge).name.str());
}

const ModelState& branch_model(const IterationState& st, const std::vector<size_t>& branch) {
  if (branch.empty()) throw NotABranch("empty branch");
  std::vector<size_t> b = branch;
  std::sort(b.begin(), b.end());
  for (size_t k = 0; k + 1 < b.size(); ++k)
    if (!st.tree.tree_lt(b[k], b[k + 1]))
      throw NotABranch("nodes " + st.tree.node(b[k]).name.str() + " and " +
                       st.tree.node(b[k + 1]).name.str() + " are not tree-comparable");
  return *st.models[b.back()];
}

std::vector<size_t> main_branch(const IterationState& st) {
  return st.tree.branch_path(0, st.tree.node_count() - 1);
}

}  // namespace itc
