#pragma once
#include <algorithm>

#include <cstdint>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Dynamic bitset over vertex ids, sized to a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet all(int n) {
    VertexSet s(n);
    for (int i = 0; i < (n + 63) / 64; ++i) s.w_[i] = ~std::uint64_t{0};
    if (n % 64) s.w_.back() = (~std::uint64_t{0}) >> (64 - n % 64);
    if (n == 0) s.w_.clear();
    return s;
  }

  int capacity() const { return n_; }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += Graph::popcount(x);
    return c;
  }

  bool empty() const {
    for (std::uint64_t x : w_)
      if (x) return false;
    return true;
  }

  /// true iff other is a subset of this set.
  bool contains_all(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & w_[i]) return true;
    return false;
  }

  void and_with(const VertexSet& other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
  }
  void and_row(const std::uint64_t* row) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
  }
  void and_not(const VertexSet& other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
  }
  void and_not_raw(const std::uint64_t* m) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~m[i];
  }
  void or_with(const VertexSet& other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
  }

  /// Removes all members < v.
  void clear_below(int v) {
    if (v <= 0) return;
    int full = std::min(v >> 6, static_cast<int>(w_.size()));
    for (int i = 0; i < full; ++i) w_[i] = 0;
    if ((v >> 6) < static_cast<int>(w_.size()) && (v & 63))
      w_[v >> 6] &= ~std::uint64_t{0} << (v & 63);
  }

  /// Smallest member >= v, or -1.
  int first_at_least(int v) const {
    if (v >= n_) return -1;
    int wi = v >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return wi * 64 + Graph::ctz(cur);
      if (++wi >= static_cast<int>(w_.size())) return -1;
      cur = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        f(static_cast<int>(i * 64 + Graph::ctz(x)));
        x &= x - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  bool operator==(const VertexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : s.words()) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace spex
