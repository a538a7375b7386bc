#pragma once

#include <optional>
#include <vector>

#include "itc/arena.hpp"

namespace itc {

// One extender descriptor in a model's table: resolved facts plus the core
// identity that tracks the row through images and coherence inheritance.
struct DescRow {
  CoreId core = kNone;
  Point crit = kNone;
  Point len = kNone;
  Point index = kNone;
};

// A finite freely generated model.  The universe is kept ascending by point
// serial, which is also the model's internal order; the table is ascending by
// index.  Atom labels live in the Workspace and are shared by every model.
struct ModelState {
  NodeName node;                 // tree node this model sits at
  uint32_t birth = 0;
  std::vector<Point> universe;   // ascending
  std::vector<DescRow> table;    // ascending by index serial

  bool contains(Point p) const;
  size_t position(Point p) const;          // throws WrongModel if absent
  std::optional<size_t> find(Point p) const;
  std::optional<size_t> row_by_core(CoreId c) const;
  std::optional<size_t> row_by_facts(Point crit, Point len, Point index) const;
};

class Embedding;

// ult(base, E) where E is the row `rank` of `owner`'s table.  The low block
// (points below len(E)) is taken from the owner, the image block from the
// base; the image of crit lands above every low point.  When owner == base
// this is the plain ultrapower of the spec's roster.
//
// Throws AgreementFailure when a base point below crit(E) is missing from the
// low block: the identity region of the canonical embedding would not embed.
struct UltrapowerResult {
  ModelState model;
  // canonical j : base -> model, identity below crit
  std::vector<Point> point_map;   // parallel to base.universe
  std::vector<uint32_t> row_map;  // parallel to base.table
  Point crit;
};
UltrapowerResult ultrapower_step(Workspace& ws, const ModelState& owner,
                                 const ModelState& base, size_t rank, StepId step);

// Convenience for the spec's diagonal form: E must belong to M itself.
UltrapowerResult ultrapower(Workspace& ws, const ModelState& m, size_t rank, StepId step);

}  // namespace itc
