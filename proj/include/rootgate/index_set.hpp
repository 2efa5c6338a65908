#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rootgate/errors.hpp"

namespace rootgate {

// Small set of 1-based simple-root indices (1..31), stored as a bitmask.
// Used both for root supports and for the kept subset defining a parabolic.
class IndexSet {
 public:
  IndexSet() = default;

  static IndexSet of(std::initializer_list<int> indices) {
    IndexSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  // {1, ..., rank}
  static IndexSet full(int rank) {
    if (rank < 0 || rank > 31) throw Error("IndexSet: rank out of range");
    IndexSet s;
    s.bits_ = (rank == 0) ? 0u : ((1u << rank) - 1u);
    return s;
  }

  static IndexSet from_mask(std::uint32_t mask) {
    IndexSet s;
    s.bits_ = mask;
    return s;
  }

  void insert(int i) {
    if (i < 1 || i > 31) throw Error("IndexSet: index out of range");
    bits_ |= (1u << (i - 1));
  }

  void erase(int i) {
    if (i < 1 || i > 31) throw Error("IndexSet: index out of range");
    bits_ &= ~(1u << (i - 1));
  }

  bool contains(int i) const {
    if (i < 1 || i > 31) return false;
    return (bits_ >> (i - 1)) & 1u;
  }

  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint32_t mask() const { return bits_; }

  IndexSet without(IndexSet other) const { return from_mask(bits_ & ~other.bits_); }
  IndexSet with(int i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }

  friend IndexSet operator|(IndexSet a, IndexSet b) { return from_mask(a.bits_ | b.bits_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return from_mask(a.bits_ & b.bits_); }
  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(IndexSet a, IndexSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(IndexSet a, IndexSet b) { return a.bits_ < b.bits_; }

  // Ascending list of members.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= 31; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace rootgate
