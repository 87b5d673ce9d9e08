#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sgraph {

/// A subset of the edges of one graph, stored as a bitset over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  EdgeSet(int universe, std::initializer_list<int> indices) : EdgeSet(universe) {
    for (int i : indices) set(i);
  }

  static EdgeSet full(int universe) {
    EdgeSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }
  /// Bits of `mask` select the first 64 edges.
  static EdgeSet from_mask(int universe, std::uint64_t mask) {
    EdgeSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask & s.tail_mask(0);
    return s;
  }
  static EdgeSet from_indices(int universe, const std::vector<int>& indices) {
    EdgeSet s(universe);
    for (int i : indices) s.set(i);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool test(int i) const noexcept {
    return i >= 0 && i < universe_ && (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1u);
  }
  bool contains(int i) const noexcept { return test(i); }
  EdgeSet& set(int i) {
    words_.at(static_cast<std::size_t>(i) >> 6) |= std::uint64_t{1} << (i & 63);
    return *this;
  }
  EdgeSet& reset(int i) {
    words_.at(static_cast<std::size_t>(i) >> 6) &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool subset_of(const EdgeSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.word(i)) return false;
    return true;
  }
  bool intersects(const EdgeSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.word(i)) return true;
    return false;
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.word(i);
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  EdgeSet& operator^=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.word(i);
    return *this;
  }
  EdgeSet& operator-=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }
  EdgeSet complement() const {
    EdgeSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i] & tail_mask(i);
    return s;
  }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic on the ascending index lists.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.indices() < b.indices(); }

 private:
  static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }
  std::uint64_t tail_mask(std::size_t i) const noexcept {
    int rem = universe_ - static_cast<int>(i * 64);
    return rem >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sgraph
