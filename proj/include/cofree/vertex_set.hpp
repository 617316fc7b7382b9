#ifndef COFREE_VERTEX_SET_HPP
#define COFREE_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace cofree {

/// Dynamic bitset over the universe {0, ..., universe-1}.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
  static constexpr int npos = -1;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) set(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const { return (words_[word(v)] >> bit(v)) & 1u; }
  void set(int v) { words_[word(v)] |= mask(v); }
  void reset(int v) { words_[word(v)] &= ~mask(v); }
  void assign(int v, bool on) { on ? set(v) : reset(v); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or npos.
  int first() const { return next(0); }

  /// Smallest member >= from, or npos.
  int next(int from) const {
    if (from >= universe_) return npos;
    std::size_t wi = word(from);
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << bit(from));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet operator~() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

  private:
    const VertexSet* set_ = nullptr;
    int v_ = npos;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, npos}; }

private:
  static std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit(int v) { return static_cast<unsigned>(v) & 63u; }
  static std::uint64_t mask(int v) { return std::uint64_t{1} << bit(v); }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cofree

#endif  // COFREE_VERTEX_SET_HPP
