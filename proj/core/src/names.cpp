#include "itc/names.hpp"

#include <algorithm>

namespace itc {

NodeName NodeName::seq(std::vector<uint32_t> entries) {
  if (entries.empty()) throw Error("NodeName::seq: empty entry list");
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] >= entries[i]) throw Error("NodeName::seq: entries not strictly increasing");
  return NodeName(true, std::move(entries));
}

NodeName NodeName::extended(uint32_t v) const {
  std::vector<uint32_t> e = entries_;
  if (v <= e.back()) throw Error("NodeName::extended: appended entry not larger");
  e.push_back(v);
  return NodeName(true, std::move(e));
}

size_t NodeName::hash() const {
  size_t h = seq_ ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  for (uint32_t v : entries_) h = h * 0x100000001b3ull ^ v;
  return h;
}

std::string NodeName::str() const {
  if (!seq_) return std::to_string(entries_[0]);
  std::string s = "<";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  s += ">";
  return s;
}

const StageNames& ExtendedIndexRegistry::stage(uint32_t lambda) const {
  if (lambda == 0 || lambda > stages_.size())
    throw InconsistentRegistry("no stage " + std::to_string(lambda));
  return stages_[lambda - 1];
}

std::optional<uint32_t> ExtendedIndexRegistry::stage_of_marker(uint32_t value) const {
  for (uint32_t i = 0; i < stages_.size(); ++i)
    if (stages_[i].delta == value) return i + 1;
  return std::nullopt;
}

void ExtendedIndexRegistry::add_stage(StageNames s) {
  if (!stages_.empty() && s.delta <= stages_.back().delta)
    throw InconsistentRegistry("stage markers must be strictly increasing");
  if (s.fully_extended.empty() || s.fully_extended.back() != s.delta)
    throw InconsistentRegistry("fully extended index must end in the marker");
  for (const auto& e : s.extended) {
    if (e.size() > s.fully_extended.size() ||
        !std::equal(e.rbegin(), e.rend(), s.fully_extended.rbegin()))
      throw InconsistentRegistry("extended index is not a terminal segment of the fully extended index");
  }
  stages_.push_back(std::move(s));
}

std::vector<uint32_t> ExtendedIndexRegistry::expand(const NodeName& n) const {
  if (n.is_plain()) {
    if (auto lam = stage_of_marker(n.plain_value())) return stage(*lam).fully_extended;
    return {n.plain_value()};
  }
  return n.entries();
}

std::vector<uint32_t> ExtendedIndexRegistry::fully_expand(const NodeName& n) const {
  std::vector<uint32_t> out;
  const std::vector<uint32_t> top = expand(n);
  // Entries are strictly increasing and a marker's fully extended index only
  // mentions smaller stages, so one left-to-right pass suffices.
  std::function<void(uint32_t)> emit = [&](uint32_t v) {
    if (auto lam = stage_of_marker(v)) {
      const auto& fe = stage(*lam).fully_extended;
      for (size_t i = 0; i + 1 < fe.size(); ++i) emit(fe[i]);
      out.push_back(v);
    } else {
      out.push_back(v);
    }
  };
  for (uint32_t v : top) emit(v);
  // Collapse duplicates introduced by overlapping expansions.
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NodeName ExtendedIndexRegistry::canonicalize(const std::vector<uint32_t>& entries) const {
  if (entries.empty()) throw Error("canonicalize: empty entry list");
  if (entries.size() == 1) return NodeName::plain(entries[0]);
  // A recorded alias of delta collapses to the plain marker.
  uint32_t tail = entries.back();
  if (auto lam = stage_of_marker(tail)) {
    const StageNames& s = stage(*lam);
    if (entries == s.fully_extended) return NodeName::plain(tail);
    for (const auto& e : s.extended)
      if (entries == e) return NodeName::plain(tail);
  }
  return NodeName::seq(entries);
}

void ExtendedIndexRegistry::require_well_formed(const NodeName& n) const {
  if (n.is_plain()) return;
  const auto& e = n.entries();
  for (size_t i = 1; i < e.size(); ++i) {
    if (e[i - 1] >= e[i]) throw InconsistentRegistry("sequence entries not strictly increasing: " + n.str());
    if (!is_marker(e[i]))
      throw InconsistentRegistry("non-initial entry " + std::to_string(e[i]) +
                                 " of " + n.str() + " is not a registered stage marker");
  }
}

std::vector<uint32_t> ExtendedIndexRegistry::all_markers() const {
  std::vector<uint32_t> out;
  out.reserve(stages_.size());
  for (const auto& s : stages_) out.push_back(s.delta);
  return out;
}

}  // namespace itc
