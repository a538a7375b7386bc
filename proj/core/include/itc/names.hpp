#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "itc/errors.hpp"

namespace itc {

inline constexpr uint32_t kNone = 0xffffffffu;

// A tree node's identity: a plain ordinal, or a strictly increasing sequence
// of ordinals (the names used inside correction intervals).  A stage marker
// delta_lambda keeps its plain name; its sequence forms are aliases held by
// the registry.
class NodeName {
 public:
  NodeName() = default;

  static NodeName plain(uint32_t v) { return NodeName(false, {v}); }
  static NodeName seq(std::vector<uint32_t> entries);

  bool is_plain() const { return !seq_; }
  bool is_seq() const { return seq_; }
  uint32_t plain_value() const { return entries_[0]; }
  const std::vector<uint32_t>& entries() const { return entries_; }
  uint32_t last() const { return entries_.back(); }
  uint32_t first() const { return entries_.front(); }

  // Name extended by one entry: the sequence name sigma^<v>.
  NodeName extended(uint32_t v) const;

  bool operator==(const NodeName& o) const { return seq_ == o.seq_ && entries_ == o.entries_; }
  bool operator!=(const NodeName& o) const { return !(*this == o); }
  // Structural order for use as a map key only; the node order is seq_lt.
  bool operator<(const NodeName& o) const {
    if (seq_ != o.seq_) return !seq_;
    return entries_ < o.entries_;
  }

  size_t hash() const;
  std::string str() const;  // plain: "2", sequence: "<0,2>"

 private:
  NodeName(bool seq, std::vector<uint32_t> e) : seq_(seq), entries_(std::move(e)) {}
  bool seq_ = false;
  std::vector<uint32_t> entries_{0};
};

struct NodeNameHash {
  size_t operator()(const NodeName& n) const { return n.hash(); }
};

// One normalization stage's naming data.
struct StageNames {
  uint32_t delta = 0;                           // delta_lambda = nu+1, a plain ordinal
  std::vector<uint32_t> fully_extended;         // the fully extended index
  std::vector<std::vector<uint32_t>> extended;  // recorded extended indices (terminal segments)
};

// Registry of stage markers delta_lambda and their sequence aliases.
// Stage ids are 1-based; 0 is the pseudo-stage before any correction.
class ExtendedIndexRegistry {
 public:
  uint32_t stage_count() const { return static_cast<uint32_t>(stages_.size()); }
  const StageNames& stage(uint32_t lambda) const;  // lambda in [1, stage_count()]
  uint32_t marker_of(uint32_t lambda) const { return stage(lambda).delta; }

  std::optional<uint32_t> stage_of_marker(uint32_t value) const;
  bool is_marker(uint32_t value) const { return stage_of_marker(value).has_value(); }

  // Appends a stage; markers must be strictly increasing.
  void add_stage(StageNames s);

  // Top-level expansion used by the node ordering: a plain registered marker
  // becomes its fully extended index, anything else its own entry list.
  std::vector<uint32_t> expand(const NodeName& n) const;

  // Recursive entrywise expansion (every marker entry replaced by its fully
  // extended index).  Used by the branch-projection proposition.
  std::vector<uint32_t> fully_expand(const NodeName& n) const;

  // Maps an entry list back to a canonical name: a recorded alias of a marker
  // collapses to the plain marker, a singleton non-marker to a plain name.
  NodeName canonicalize(const std::vector<uint32_t>& entries) const;

  // A sequence name is well-formed if its entries are strictly increasing and
  // every entry except possibly the first is a registered marker.
  void require_well_formed(const NodeName& n) const;

  std::vector<uint32_t> all_markers() const;

 private:
  std::vector<StageNames> stages_;
};

}  // namespace itc
