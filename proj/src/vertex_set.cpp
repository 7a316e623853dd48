#include "wcw/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wcw {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int universe) {
  return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("negative vertex-set universe");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 1; v <= universe; ++v) s.insert(v);
  return s;
}

void VertexSet::check_vertex(Vertex v) const {
  if (v < 1 || v > universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(universe_));
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("vertex-set universe mismatch");
}

bool VertexSet::contains(Vertex v) const {
  if (v < 1 || v > universe_) return false;
  auto bit = static_cast<unsigned>(v - 1);
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  auto bit = static_cast<unsigned>(v - 1);
  words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  auto bit = static_cast<unsigned>(v - 1);
  words_[bit / kWordBits] &= ~(std::uint64_t{1} << (bit % kWordBits));
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const { return next(0); }

Vertex VertexSet::next(Vertex after) const {
  auto bit = static_cast<std::size_t>(std::max(after, 0));  // first candidate bit index
  std::size_t word = bit / kWordBits;
  if (word >= words_.size()) return 0;
  std::uint64_t masked = words_[word] & (~std::uint64_t{0} << (bit % kWordBits));
  while (true) {
    if (masked != 0) {
      return static_cast<Vertex>(word * kWordBits + static_cast<std::size_t>(std::countr_zero(masked))) + 1;
    }
    if (++word >= words_.size()) return 0;
    masked = words_[word];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  Vertex x = a.first();
  Vertex y = b.first();
  while (x != 0 && y != 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == 0 && y != 0;
}

bool shortlex_less(const VertexSet& a, const VertexSet& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace wcw
