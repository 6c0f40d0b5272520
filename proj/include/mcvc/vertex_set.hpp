#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <string>
#include <vector>

namespace mcvc {

using Vertex = int;

/// Subset of the dense vertex range [0, universe).
///
/// Membership is O(1); set algebra is word-parallel. Iteration visits
/// members in ascending index order. Two sets are only comparable when
/// they share the same universe.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, const std::vector<Vertex>& members);

  static VertexSet full(int universe);
  /// Low `universe` bits of `mask` (universe <= 64).
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_.test(static_cast<std::size_t>(v));
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() { bits_.reset(); }

  /// Smallest member, or -1 when empty.
  Vertex first() const;

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const VertexSet& other) const { return bits_.is_proper_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  /// Total order: by universe, then lexicographic on ascending member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<Vertex> to_vector() const;
  /// Bit i set iff vertex i is a member (universe <= 64).
  std::uint64_t to_mask() const;
  std::size_t hash() const;

  /// Space-separated ascending members, e.g. "0 2 5".
  std::string to_string() const;

 private:
  Bits bits_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mcvc
