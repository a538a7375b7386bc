#pragma once

#include <memory>
#include <vector>

#include "itc/model.hpp"

namespace itc {

// An order map between two models: the point map is parallel to the source
// universe, the row map to the source table.  crit == kNone means the
// identity (every point fixed).
class Embedding {
 public:
  Embedding() = default;
  static Embedding identity(std::shared_ptr<const ModelState> m);
  static Embedding from_ultrapower(std::shared_ptr<const ModelState> base,
                                   std::shared_ptr<const ModelState> target,
                                   const UltrapowerResult& u);
  // Point/row maps supplied directly (stage j maps, k maps).
  static Embedding from_maps(std::shared_ptr<const ModelState> src,
                             std::shared_ptr<const ModelState> dst,
                             std::vector<Point> point_map, std::vector<uint32_t> row_map,
                             Point crit);

  const ModelState& source() const { return *src_; }
  const ModelState& target() const { return *dst_; }
  std::shared_ptr<const ModelState> source_ptr() const { return src_; }
  std::shared_ptr<const ModelState> target_ptr() const { return dst_; }

  Point apply(Point p) const;
  const DescRow& apply_row(size_t rank) const;
  size_t apply_rank(size_t rank) const;

  // Least moved point, or kNone for the identity.
  Point crit() const { return crit_; }
  bool is_identity() const;

  const std::vector<Point>& point_map() const { return point_map_; }

  // g after f (f first).  f.target and g.source must be the same model.
  static Embedding compose(const Embedding& f, const Embedding& g);

  // Structural invariants: total, order-preserving, inflationary, identity
  // below crit, row facts mapped pointwise.  Violations are returned, not
  // thrown.
  std::vector<Finding> check(const Workspace& ws) const;

  // Exact equality of the realized maps.
  bool same_map_as(const Embedding& o) const;

 private:
  std::shared_ptr<const ModelState> src_, dst_;
  std::vector<Point> point_map_;
  std::vector<uint32_t> row_map_;
  Point crit_ = kNone;
};

}  // namespace itc
