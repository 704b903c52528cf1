#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace c4free {

/// Dense id pool with O(1) uniform indexing and O(1) removal.
///
/// Starts holding 0..universe-1 in ascending order; removal swaps the last
/// element into the vacated slot. Ids are never re-inserted (the process
/// never re-opens a pair). The exact swap-remove arithmetic is part of the
/// engine-coupling contract, so both process engines share this type.
class IndexedSet {
 public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  explicit IndexedSet(std::uint32_t universe) : items_(universe), pos_(universe) {
    std::iota(items_.begin(), items_.end(), 0u);
    std::iota(pos_.begin(), pos_.end(), 0u);
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::uint32_t at(std::size_t index) const {
    assert(index < items_.size());
    return items_[index];
  }

  bool contains(std::uint32_t id) const { return pos_[id] != kAbsent; }

  std::uint32_t position(std::uint32_t id) const {
    assert(contains(id));
    return pos_[id];
  }

  void remove(std::uint32_t id) { remove_at(position(id)); }

  void remove_at(std::size_t index) {
    assert(index < items_.size());
    const std::uint32_t id = items_[index];
    const std::uint32_t last = items_.back();
    items_[index] = last;
    pos_[last] = static_cast<std::uint32_t>(index);
    items_.pop_back();
    pos_[id] = kAbsent;
  }

  const std::vector<std::uint32_t>& items() const { return items_; }

 private:
  std::vector<std::uint32_t> items_;
  std::vector<std::uint32_t> pos_;
};

}  // namespace c4free
