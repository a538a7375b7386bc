#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "itc/names.hpp"

namespace itc {

// A point of some model's universe.  Points are interned in a Workspace; the
// id doubles as the creation serial, which linearly orders all points of a
// run consistently with every model's internal order (new image points always
// sit above everything already constructed).
using Point = uint32_t;
using CoreId = uint32_t;
using StepId = uint32_t;

enum class StepKind : uint8_t {
  tree,    // an ultrapower forming a tree node's model
  factor,  // a factor ultrapower ult(M_sigma, E_nu) used by the k maps
};

struct StepData {
  NodeName node;   // the node (or factor tag) being created
  uint32_t birth;  // normalization stage that built it; 0 for the input tree
  StepKind kind;
};

struct PointData {
  uint32_t base;  // base ordinal when step == kNone
  StepId step;    // creating ultrapower, or kNone for base points
  Point parent;   // preimage under the canonical map
};

struct CoreData {
  uint32_t base;   // base table row when step == kNone
  StepId step;     // creating ultrapower, or kNone
  CoreId parent;   // row this one is the image of
};

// Interning pool for points, descriptor cores and steps of one run.  All
// values are immutable once created; ids are dense and creation-ordered.
class Workspace {
 public:
  StepId step(const NodeName& node, uint32_t birth, StepKind kind);
  const StepData& step(StepId s) const { return steps_[s]; }

  Point base_point(uint32_t ordinal);
  Point img_point(StepId s, Point parent);
  const PointData& point(Point p) const { return points_[p]; }
  bool is_base(Point p) const { return points_[p].step == kNone; }

  CoreId base_core(uint32_t row);
  CoreId img_core(StepId s, CoreId parent);
  const CoreData& core(CoreId c) const { return cores_[c]; }

  size_t point_count() const { return points_.size(); }
  std::string point_str(Point p) const;

  // Atom labels are global to the run; every model carries all of them.
  uint32_t atom(const std::string& label);
  const std::vector<std::string>& atoms() const { return atom_labels_; }

  // Monotone counter used as the `birth` tag of rebuilt nodes, so a rebuilt
  // model never shares image points with the model it replaces.
  uint32_t fresh_epoch() { return ++epoch_; }

 private:
  struct KeyHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
      return std::hash<uint64_t>()(k.first * 0x9e3779b97f4a7c15ull ^ k.second);
    }
  };
  std::vector<StepData> steps_;
  std::unordered_map<size_t, std::vector<StepId>> step_lookup_;
  std::vector<PointData> points_;
  std::unordered_map<std::pair<uint64_t, uint64_t>, Point, KeyHash> point_lookup_;
  std::vector<CoreData> cores_;
  std::unordered_map<std::pair<uint64_t, uint64_t>, CoreId, KeyHash> core_lookup_;
  std::vector<std::string> atom_labels_;
  uint32_t epoch_ = 0;
};

}  // namespace itc
