#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace wcw {

/// Vertices are dense 1-based indices.
using Vertex = int;

/**
 * Subset of {1..universe}, stored as a packed bitset.
 *
 * All binary operations require both operands to share the same universe.
 * Iteration visits members in increasing order.
 */
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    Vertex operator*() const { return current_; }
    iterator& operator++() {
      current_ = owner_->next(current_);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const { return current_ == other.current_; }

   private:
    friend class VertexSet;
    iterator(const VertexSet* owner, Vertex current) : owner_(owner), current_(current) {}
    const VertexSet* owner_ = nullptr;
    Vertex current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const;
  bool empty() const;

  /// Smallest member, or 0 when empty.
  Vertex first() const;
  /// Smallest member greater than `after`, or 0 when none.
  Vertex next(Vertex after) const;

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, 0); }

  std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  void check_vertex(Vertex v) const;
  void check_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic comparison of the sorted member sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// Size first, then lexicographic. This is the canonical order for lists of
/// maximal independent sets.
bool shortlex_less(const VertexSet& a, const VertexSet& b);

/// "{1,3,4}"; "{}" when empty.
std::string to_string(const VertexSet& s);

}  // namespace wcw
