#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "mvis/error.hpp"

#ifndef MVIS_MAX_VERTICES
#define MVIS_MAX_VERTICES 512
#endif

namespace mvis {

/// Upper limit on the order of any graph the library will build.
inline constexpr std::size_t kMaxVertices = MVIS_MAX_VERTICES;

using Vertex = std::size_t;

/**
 * Fixed-capacity bit vector over the vertex ids 0..capacity-1.
 *
 * Storage is inline (no allocation), so copies are cheap and the type can be
 * used freely inside search loops. Only the first ceil(capacity/64) words are
 * ever touched.
 */
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = (kMaxVertices + kWordBits - 1) / kWordBits;

  VertexSet() = default;

  explicit VertexSet(std::size_t capacity) : capacity_(capacity) {
    if (capacity > kMaxVertices) {
      throw CapacityExceeded("vertex set capacity " + std::to_string(capacity) +
                             " exceeds limit " + std::to_string(kMaxVertices));
    }
  }

  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
      : VertexSet(capacity) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet from_range(std::size_t capacity, const Range& members) {
    VertexSet s(capacity);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < s.words(); ++w) s.bits_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t words() const noexcept { return (capacity_ + kWordBits - 1) / kWordBits; }

  bool contains(Vertex v) const noexcept {
    return v < capacity_ && ((bits_[v / kWordBits] >> (v % kWordBits)) & 1u) != 0;
  }

  void insert(Vertex v) {
    check(v);
    bits_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    check(v);
    bits_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }

  void clear() noexcept { bits_.fill(0); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words(); ++w) c += static_cast<std::size_t>(std::popcount(bits_[w]));
    return c;
  }

  bool empty() const noexcept {
    for (std::size_t w = 0; w < words(); ++w)
      if (bits_[w] != 0) return false;
    return true;
  }

  bool any() const noexcept { return !empty(); }

  /// Smallest member, or capacity() when empty.
  Vertex first() const noexcept { return next_from(0); }

  /// Smallest member >= from, or capacity() when there is none.
  Vertex next_from(Vertex from) const noexcept {
    if (from >= capacity_) return capacity_;
    std::size_t w = from / kWordBits;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (from % kWordBits));
    const std::size_t nw = words();
    while (true) {
      if (word != 0) {
        Vertex v = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
        return v < capacity_ ? v : capacity_;
      }
      if (++w >= nw) return capacity_;
      word = bits_[w];
    }
  }

  VertexSet complement() const {
    VertexSet s(capacity_);
    for (std::size_t w = 0; w < words(); ++w) s.bits_[w] = ~bits_[w];
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words(); ++w)
      if ((bits_[w] & ~other.bits_[w]) != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words(); ++w)
      if ((bits_[w] & other.bits_[w]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words(); ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words(); ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words(); ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    if (a.capacity_ != b.capacity_) return false;
    for (std::size_t w = 0; w < a.words(); ++w)
      if (a.bits_[w] != b.bits_[w]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  std::uint64_t word(std::size_t w) const noexcept { return bits_[w]; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const noexcept { return at_; }
    const_iterator& operator++() noexcept {
      at_ = set_->next_from(at_ + 1);
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
      return a.at_ == b.at_;
    }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = 0;
  };

  const_iterator begin() const noexcept { return {this, first()}; }
  const_iterator end() const noexcept { return {this, capacity_}; }

 private:
  void check(Vertex v) const {
    if (v >= capacity_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside set of capacity " +
                            std::to_string(capacity_));
    }
  }

  void trim() noexcept {
    const std::size_t rem = capacity_ % kWordBits;
    if (rem != 0) bits_[capacity_ / kWordBits] &= (std::uint64_t{1} << rem) - 1;
    for (std::size_t w = words(); w < kWords; ++w) bits_[w] = 0;
  }

  std::size_t capacity_ = 0;
  std::array<std::uint64_t, kWords> bits_{};
};

}  // namespace mvis
