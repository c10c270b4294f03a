#include "mmambig/temporal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace mmambig {

bool close_by(const TimeInterval& a, const TimeInterval& b, std::int64_t threshold) {
  if (a.intersects(b)) return true;
  return a.separation(b) < threshold;
}

namespace {

bool concepts_intersect(const ElementSlot& a, const ElementSlot& b) {
  for (const auto& c : a.concepts)
    if (b.has_concept(c)) return true;
  return false;
}

}  // namespace

CooperationKind cooperation(const ElementSlot& a, const ElementSlot& b,
                            std::int64_t threshold) {
  if (!close_by(a.time, b.time, threshold)) return CooperationKind::Independent;
  if (a.mod != b.mod && concepts_intersect(a, b)) return CooperationKind::Redundant;
  if (!concepts_intersect(a, b) && (a.deictic || b.deictic || a.role != b.role))
    return CooperationKind::Complementary;
  return CooperationKind::Independent;
}

std::vector<ElementSlot> group_candidates(const std::vector<RawEntry>& raw) {
  std::vector<ElementSlot> slots;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawEntry& entry = raw[i];
    ElementSlot* home = nullptr;
    for (auto& slot : slots) {
      if (slot.mod == entry.mod && slot.repr == entry.repr &&
          slot.time.start == entry.ts && slot.time.end == entry.te) {
        home = &slot;
        break;
      }
    }
    if (!home) {
      ElementSlot slot;
      slot.id = static_cast<int>(slots.size());
      slot.mod = entry.mod;
      slot.repr = entry.repr;
      slot.time = {entry.ts, entry.te};
      slot.input_index = static_cast<int>(i);
      if (!entry.role.empty()) slot.role = entry.role;
      slots.push_back(std::move(slot));
      home = &slots.back();
    } else if (!entry.role.empty() && !home->role.empty() && home->role != entry.role) {
      throw Error(ErrorCode::ConflictingRole,
                  "entries for `" + entry.repr + "` declare roles `" + home->role +
                      "` and `" + entry.role + "`");
    } else if (!entry.role.empty() && home->role.empty()) {
      home->role = entry.role;
    }
    if (!home->has_concept(entry.conc)) home->concepts.push_back(entry.conc);
    if (entry.conc == "deictic") home->deictic = true;
  }
  return slots;
}

std::vector<DeicticBinding> bind_deictics(const std::vector<ElementSlot>& slots,
                                          std::int64_t threshold) {
  struct Candidate {
    std::int64_t separation;
    std::int64_t deictic_start;
    std::int64_t target_start;
    int deictic_id;
    int target_id;
    bool operator<(const Candidate& other) const {
      return std::tie(separation, deictic_start, target_start, deictic_id, target_id) <
             std::tie(other.separation, other.deictic_start, other.target_start,
                      other.deictic_id, other.target_id);
    }
  };

  std::vector<Candidate> candidates;
  std::vector<int> deictic_ids;
  for (const auto& d : slots) {
    if (!d.deictic) continue;
    deictic_ids.push_back(d.id);
    for (const auto& t : slots) {
      if (t.deictic || t.mod == d.mod) continue;
      if (!close_by(d.time, t.time, threshold)) continue;
      candidates.push_back(Candidate{std::max<std::int64_t>(0, d.time.separation(t.time)),
                                     d.time.start, t.time.start, d.id, t.id});
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::map<int, int> chosen;  // deictic id -> target id
  std::set<int> taken;
  for (const auto& c : candidates) {
    if (chosen.count(c.deictic_id) || taken.count(c.target_id)) continue;
    chosen[c.deictic_id] = c.target_id;
    taken.insert(c.target_id);
  }

  std::vector<DeicticBinding> bindings;
  bindings.reserve(deictic_ids.size());
  for (int id : deictic_ids) {
    DeicticBinding b;
    b.deictic_slot = id;
    auto it = chosen.find(id);
    if (it != chosen.end()) b.bound_to = it->second;
    bindings.push_back(b);
  }
  return bindings;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<Leaf> assemble_leaves(const std::vector<ElementSlot>& slots,
                                  const std::vector<DeicticBinding>& bindings,
                                  std::int64_t threshold) {
  std::map<int, const ElementSlot*> by_id;
  std::map<int, std::size_t> index_of;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    by_id[slots[i].id] = &slots[i];
    index_of[slots[i].id] = i;
  }

  // A bound pair whose intervals intersect becomes an adjacent unit.
  std::map<int, int> unit_of_element;  // element slot id -> deictic slot id
  std::set<int> unit_members;
  for (const auto& b : bindings) {
    if (!b.bound_to) continue;
    const ElementSlot& d = *by_id.at(b.deictic_slot);
    const ElementSlot& t = *by_id.at(*b.bound_to);
    if (!d.time.intersects(t.time)) continue;
    if (unit_of_element.count(t.id)) continue;
    unit_of_element[t.id] = d.id;
    unit_members.insert(t.id);
    unit_members.insert(d.id);
  }

  // Fuse same-role slots that the grammar should see as one leaf.
  DisjointSets sets(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const ElementSlot& a = slots[i];
    if (a.deictic || unit_members.count(a.id)) continue;
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      const ElementSlot& b = slots[j];
      if (b.deictic || unit_members.count(b.id)) continue;
      if (a.role != b.role) continue;
      bool fuse = false;
      if (a.mod != b.mod) {
        fuse = a.time.intersects(b.time) ||
               cooperation(a, b, threshold) == CooperationKind::Redundant;
      } else {
        fuse = a.time == b.time;
      }
      if (fuse) sets.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }

  struct PendingLeaf {
    Leaf leaf;
    std::int64_t start = 0;
    int input_index = 0;
    int first_slot_id = 0;
    bool emitted = false;
  };
  std::vector<PendingLeaf> pending;
  std::map<int, std::size_t> leaf_of_slot;

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (sets.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
    PendingLeaf p;
    p.start = slots[i].time.start;
    p.input_index = slots[i].input_index;
    p.first_slot_id = slots[i].id;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (sets.find(static_cast<int>(j)) == static_cast<int>(i)) members.push_back(j);
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(slots[a].time.start, slots[a].input_index) <
             std::tie(slots[b].time.start, slots[b].input_index);
    });
    p.leaf.role = slots[members.front()].role;
    for (std::size_t m : members) {
      p.leaf.slot_ids.push_back(slots[m].id);
      p.start = std::min(p.start, slots[m].time.start);
      p.input_index = std::min(p.input_index, slots[m].input_index);
    }
    std::size_t leaf_index = pending.size();
    for (std::size_t m : members) leaf_of_slot[slots[m].id] = leaf_index;
    pending.push_back(std::move(p));
  }

  // Emission order: units sort at the pair's earliest start, deictic first.
  struct Emission {
    std::int64_t start;
    int input_index;
    std::vector<std::size_t> leaf_indices;
    bool operator<(const Emission& other) const {
      return std::tie(start, input_index) < std::tie(other.start, other.input_index);
    }
  };
  std::vector<Emission> emissions;
  for (const auto& [element_id, deictic_id] : unit_of_element) {
    std::size_t deictic_leaf = leaf_of_slot.at(deictic_id);
    std::size_t element_leaf = leaf_of_slot.at(element_id);
    if (pending[deictic_leaf].emitted || pending[element_leaf].emitted) continue;
    pending[deictic_leaf].emitted = true;
    pending[element_leaf].emitted = true;
    Emission e;
    e.start = std::min(pending[deictic_leaf].start, pending[element_leaf].start);
    e.input_index = std::min(pending[deictic_leaf].input_index, pending[element_leaf].input_index);
    e.leaf_indices = {deictic_leaf, element_leaf};
    emissions.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (pending[i].emitted) continue;
    emissions.push_back(Emission{pending[i].start, pending[i].input_index, {i}});
  }
  std::sort(emissions.begin(), emissions.end());

  std::vector<Leaf> leaves;
  for (const auto& e : emissions)
    for (std::size_t leaf_index : e.leaf_indices) leaves.push_back(pending[leaf_index].leaf);
  return leaves;
}

}  // namespace mmambig
