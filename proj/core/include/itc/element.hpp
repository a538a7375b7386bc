#pragma once

#include <memory>

#include "itc/embedding.hpp"

namespace itc {

struct Element;
using ElementPtr = std::shared_ptr<const Element>;

// Function symbols are opaque; the constant and cut families are kept
// distinguishable because the factorization claim treats them differently.
enum class SymbolFamily : uint8_t { opaque, constant, cut_below };

struct Symbol {
  SymbolFamily family = SymbolFamily::opaque;
  uint32_t id = 0;          // which opaque symbol
  ElementPtr payload;       // constant/cut payload, an element of the home model
  NodeName home;            // model the function lives in

  bool operator==(const Symbol& o) const;
  size_t hash() const;
};

// An element of a model: an atom, an ordinal point, or a bracket term
// [f]^{E_edge}_gens viewed in the model at `seat` (the bracket forms at the
// edge's successor node; canonical in-tree maps re-seat it upward).
struct Element {
  enum class Kind : uint8_t { atom, point, term };
  Kind kind = Kind::point;
  uint32_t atom = 0;
  Point pt = kNone;
  NodeName edge;
  Symbol sym;
  std::vector<Point> gens;
  NodeName seat;

  static ElementPtr make_atom(uint32_t label);
  static ElementPtr make_point(Point p);
  static ElementPtr make_term(NodeName edge, Symbol sym, std::vector<Point> gens, NodeName seat);

  bool operator==(const Element& o) const;
  size_t hash() const;
  int depth() const;  // atoms and points are depth 0, terms nest via payloads
  std::string str(const Workspace& ws) const;
};

struct ElementPtrEq {
  bool operator()(const ElementPtr& a, const ElementPtr& b) const { return *a == *b; }
};
struct ElementPtrHash {
  size_t operator()(const ElementPtr& e) const { return e->hash(); }
};

// Transport along a canonical in-tree map (a step embedding or a composite of
// them): atoms are fixed, points go through the point map, terms keep their
// bracket and move their generators, re-seating at the target.  Throws
// WrongModel when x does not belong to the source.
ElementPtr apply_to_element(const Embedding& j, const ElementPtr& x);

// True when x is syntactically an element of the given model.
bool element_in_model(const ModelState& m, const ElementPtr& x);

}  // namespace itc
