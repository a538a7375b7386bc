#include "itc/element.hpp"

#include <algorithm>

namespace itc {

bool Symbol::operator==(const Symbol& o) const {
  if (family != o.family || id != o.id || !(home == o.home)) return false;
  if (!payload != !o.payload) return false;
  return !payload || *payload == *o.payload;
}

size_t Symbol::hash() const {
  size_t h = static_cast<size_t>(family) * 0x9e3779b1u + id;
  h = h * 31 + home.hash();
  if (payload) h = h * 31 + payload->hash();
  return h;
}

ElementPtr Element::make_atom(uint32_t label) {
  auto e = std::make_shared<Element>();
  e->kind = Kind::atom;
  e->atom = label;
  return e;
}

ElementPtr Element::make_point(Point p) {
  auto e = std::make_shared<Element>();
  e->kind = Kind::point;
  e->pt = p;
  return e;
}

ElementPtr Element::make_term(NodeName edge, Symbol sym, std::vector<Point> gens, NodeName seat) {
  auto e = std::make_shared<Element>();
  e->kind = Kind::term;
  e->edge = std::move(edge);
  e->sym = std::move(sym);
  e->gens = std::move(gens);
  e->seat = std::move(seat);
  return e;
}

bool Element::operator==(const Element& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::atom: return atom == o.atom;
    case Kind::point: return pt == o.pt;
    case Kind::term:
      return edge == o.edge && seat == o.seat && gens == o.gens && sym == o.sym;
  }
  return false;
}

size_t Element::hash() const {
  switch (kind) {
    case Kind::atom: return 0x811c9dc5u ^ atom;
    case Kind::point: return 0x01000193u * (pt + 1);
    case Kind::term: {
      size_t h = edge.hash() * 31 + seat.hash();
      for (Point g : gens) h = h * 0x100000001b3ull ^ g;
      return h * 31 + sym.hash();
    }
  }
  return 0;
}

int Element::depth() const {
  if (kind != Kind::term) return 0;
  return 1 + (sym.payload ? sym.payload->depth() : 0);
}

std::string Element::str(const Workspace& ws) const {
  switch (kind) {
    case Kind::atom: return "atom(" + ws.atoms().at(atom) + ")";
    case Kind::point: return ws.point_str(pt);
    case Kind::term: {
      std::string f;
      switch (sym.family) {
        case SymbolFamily::opaque: f = "f" + std::to_string(sym.id); break;
        case SymbolFamily::constant: f = "const(" + sym.payload->str(ws) + ")"; break;
        case SymbolFamily::cut_below: f = "cut(" + sym.payload->str(ws) + ")"; break;
      }
      std::string s = "[" + f + "; ";
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += ws.point_str(gens[i]);
      }
      return s + "]@" + seat.str();
    }
  }
  return "?";
}

ElementPtr apply_to_element(const Embedding& j, const ElementPtr& x) {
  switch (x->kind) {
    case Element::Kind::atom:
      return x;
    case Element::Kind::point: {
      if (!j.source().contains(x->pt))
        throw WrongModel("point element not in " + j.source().node.str());
      Point q = j.apply(x->pt);
      return q == x->pt ? x : Element::make_point(q);
    }
    case Element::Kind::term: {
      if (!(x->seat == j.source().node))
        throw WrongModel("term seated at " + x->seat.str() + ", not at " +
                         j.source().node.str());
      std::vector<Point> gens;
      gens.reserve(x->gens.size());
      for (Point g : x->gens) gens.push_back(j.apply(g));
      return Element::make_term(x->edge, x->sym, std::move(gens), j.target().node);
    }
  }
  throw Error("unreachable element kind");
}

bool element_in_model(const ModelState& m, const ElementPtr& x) {
  switch (x->kind) {
    case Element::Kind::atom: return true;
    case Element::Kind::point: return m.contains(x->pt);
    case Element::Kind::term:
      if (!(x->seat == m.node)) return false;
      return std::all_of(x->gens.begin(), x->gens.end(), [&](Point g) { return m.contains(g); });
  }
  return false;
}

}  // namespace itc
