#include "itc/embedding.hpp"

#include <algorithm>

#include "itc/errors.hpp"

namespace itc {

Embedding Embedding::identity(std::shared_ptr<const ModelState> m) {
  Embedding e;
  e.src_ = m;
  e.dst_ = m;
  e.point_map_ = m->universe;
  e.row_map_.resize(m->table.size());
  for (size_t i = 0; i < e.row_map_.size(); ++i) e.row_map_[i] = static_cast<uint32_t>(i);
  e.crit_ = kNone;
  return e;
}

Embedding Embedding::from_ultrapower(std::shared_ptr<const ModelState> base,
                                     std::shared_ptr<const ModelState> target,
                                     const UltrapowerResult& u) {
  Embedding e;
  e.src_ = std::move(base);
  e.dst_ = std::move(target);
  e.point_map_ = u.point_map;
  e.row_map_ = u.row_map;
  e.crit_ = u.crit;
  return e;
}

Embedding Embedding::from_maps(std::shared_ptr<const ModelState> src,
                               std::shared_ptr<const ModelState> dst,
                               std::vector<Point> point_map, std::vector<uint32_t> row_map,
                               Point crit) {
  Embedding e;
  e.src_ = std::move(src);
  e.dst_ = std::move(dst);
  e.point_map_ = std::move(point_map);
  e.row_map_ = std::move(row_map);
  e.crit_ = crit;
  if (e.point_map_.size() != e.src_->universe.size() ||
      e.row_map_.size() != e.src_->table.size())
    throw Error("Embedding::from_maps: map arity mismatch");
  return e;
}

Point Embedding::apply(Point p) const {
  return point_map_[src_->position(p)];
}

const DescRow& Embedding::apply_row(size_t rank) const {
  return dst_->table[row_map_.at(rank)];
}

size_t Embedding::apply_rank(size_t rank) const { return row_map_.at(rank); }

bool Embedding::is_identity() const {
  return src_.get() == dst_.get() || point_map_ == src_->universe;
}

Embedding Embedding::compose(const Embedding& f, const Embedding& g) {
  if (f.dst_->universe != g.src_->universe)
    throw WrongModel("compose: inner models differ (" + f.dst_->node.str() + " vs " +
                     g.src_->node.str() + ")");
  Embedding e;
  e.src_ = f.src_;
  e.dst_ = g.dst_;
  e.point_map_.reserve(f.point_map_.size());
  for (Point p : f.point_map_) e.point_map_.push_back(g.apply(p));
  e.row_map_.reserve(f.row_map_.size());
  for (uint32_t r : f.row_map_) e.row_map_.push_back(static_cast<uint32_t>(g.apply_rank(r)));
  e.crit_ = kNone;
  for (size_t i = 0; i < e.point_map_.size(); ++i) {
    if (e.point_map_[i] != f.src_->universe[i]) {
      e.crit_ = f.src_->universe[i];
      break;
    }
  }
  return e;
}

std::vector<Finding> Embedding::check(const Workspace& ws) const {
  std::vector<Finding> out;
  auto bad = [&](const std::string& what, const std::string& detail) {
    out.push_back(Finding{"embedding", src_->node.str() + "->" + dst_->node.str() + ": " + what,
                          detail});
  };
  if (point_map_.size() != src_->universe.size()) {
    bad("arity", "point map not parallel to the source universe");
    return out;
  }
  for (size_t i = 0; i < point_map_.size(); ++i) {
    if (!dst_->contains(point_map_[i]))
      bad("totality", "image of " + ws.point_str(src_->universe[i]) + " not in target");
    if (i > 0 && point_map_[i - 1] >= point_map_[i])
      bad("order", "not strictly increasing at position " + std::to_string(i));
    if (point_map_[i] < src_->universe[i])
      bad("inflationary", "image of " + ws.point_str(src_->universe[i]) + " is below it");
    if (crit_ != kNone && src_->universe[i] < crit_ && point_map_[i] != src_->universe[i])
      bad("identity-below-crit", ws.point_str(src_->universe[i]) + " moved below crit");
    if (crit_ == kNone && point_map_[i] != src_->universe[i])
      bad("identity", "identity embedding moves " + ws.point_str(src_->universe[i]));
  }
  for (size_t r = 0; r < row_map_.size(); ++r) {
    if (row_map_[r] >= dst_->table.size()) {
      bad("row-map", "row image out of range");
      continue;
    }
    const DescRow& s = src_->table[r];
    const DescRow& d = dst_->table[row_map_[r]];
    if (d.crit != apply(s.crit) || d.len != apply(s.len) || d.index != apply(s.index))
      bad("row-facts", "row " + std::to_string(r) + " facts not mapped pointwise");
  }
  return out;
}

bool Embedding::same_map_as(const Embedding& o) const {
  return src_->universe == o.src_->universe && point_map_ == o.point_map_;
}

}  // namespace itc
