#include "itc/arena.hpp"

namespace itc {

StepId Workspace::step(const NodeName& node, uint32_t birth, StepKind kind) {
  size_t h = node.hash() * 31 + birth * 2 + static_cast<size_t>(kind);
  for (StepId s : step_lookup_[h]) {
    const StepData& d = steps_[s];
    if (d.birth == birth && d.kind == kind && d.node == node) return s;
  }
  StepId s = static_cast<StepId>(steps_.size());
  steps_.push_back(StepData{node, birth, kind});
  step_lookup_[h].push_back(s);
  return s;
}

Point Workspace::base_point(uint32_t ordinal) {
  auto key = std::make_pair(uint64_t(kNone), uint64_t(ordinal));
  auto it = point_lookup_.find(key);
  if (it != point_lookup_.end()) return it->second;
  Point p = static_cast<Point>(points_.size());
  points_.push_back(PointData{ordinal, kNone, kNone});
  point_lookup_.emplace(key, p);
  return p;
}

Point Workspace::img_point(StepId s, Point parent) {
  auto key = std::make_pair(uint64_t(s) + 1, uint64_t(parent));
  auto it = point_lookup_.find(key);
  if (it != point_lookup_.end()) return it->second;
  Point p = static_cast<Point>(points_.size());
  points_.push_back(PointData{0, s, parent});
  point_lookup_.emplace(key, p);
  return p;
}

CoreId Workspace::base_core(uint32_t row) {
  auto key = std::make_pair(uint64_t(kNone), uint64_t(row));
  auto it = core_lookup_.find(key);
  if (it != core_lookup_.end()) return it->second;
  CoreId c = static_cast<CoreId>(cores_.size());
  cores_.push_back(CoreData{row, kNone, kNone});
  core_lookup_.emplace(key, c);
  return c;
}

CoreId Workspace::img_core(StepId s, CoreId parent) {
  auto key = std::make_pair(uint64_t(s) + 1, uint64_t(parent));
  auto it = core_lookup_.find(key);
  if (it != core_lookup_.end()) return it->second;
  CoreId c = static_cast<CoreId>(cores_.size());
  cores_.push_back(CoreData{0, s, parent});
  core_lookup_.emplace(key, c);
  return c;
}

std::string Workspace::point_str(Point p) const {
  const PointData& d = points_[p];
  if (d.step == kNone) return std::to_string(d.base);
  return "i[" + steps_[d.step].node.str() + "](" + point_str(d.parent) + ")";
}

uint32_t Workspace::atom(const std::string& label) {
  for (uint32_t i = 0; i < atom_labels_.size(); ++i)
    if (atom_labels_[i] == label) return i;
  atom_labels_.push_back(label);
  return static_cast<uint32_t>(atom_labels_.size() - 1);
}

}  // namespace itc
