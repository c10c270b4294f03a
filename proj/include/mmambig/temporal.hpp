#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmambig/core.hpp"

namespace mmambig {

// Default separation threshold for the CloseBy relation, in time units.
inline constexpr std::int64_t kDefaultThreshold = 4;

// True when the intervals intersect or their nearest endpoints are closer
// than `threshold` (strict).
bool close_by(const TimeInterval& a, const TimeInterval& b, std::int64_t threshold);

enum class CooperationKind { Redundant, Complementary, Independent };

// Modality cooperation between two slots at the given threshold.
// Redundant: CloseBy, different modalities, overlapping concept sets.
// Complementary: CloseBy, disjoint concepts, and a deictic on one side or
// differing roles. Independent otherwise.
CooperationKind cooperation(const ElementSlot& a, const ElementSlot& b,
                            std::int64_t threshold);

struct DeicticBinding {
  int deictic_slot = -1;
  std::optional<int> bound_to;  // absent = Unbound
};

// Merges raw entries sharing (mod, repr, ts, te) into slots whose concept
// lists preserve input order. Marks slots with concept "deictic".
std::vector<ElementSlot> group_candidates(const std::vector<RawEntry>& raw);

// Associates each deictic slot with a non-deictic slot of another modality:
// greedy matching over candidate pairs by increasing separation (0 when the
// intervals intersect), ties by earlier deictic then candidate start. Every
// deictic gets exactly one entry; targets are never shared.
std::vector<DeicticBinding> bind_deictics(const std::vector<ElementSlot>& slots,
                                          std::int64_t threshold);

// Builds the time-ordered parse leaf sequence:
//  - a bound deictic whose interval intersects its element's becomes an
//    adjacent (deictic, element) pair at the pair's earliest start;
//  - same-role slots fuse into one leaf when they cooperate redundantly,
//    or intersect across modalities, or share an identical interval within
//    one modality; slots consumed by a deictic pair never fuse.
std::vector<Leaf> assemble_leaves(const std::vector<ElementSlot>& slots,
                                  const std::vector<DeicticBinding>& bindings,
                                  std::int64_t threshold);

}  // namespace mmambig
