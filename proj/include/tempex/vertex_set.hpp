#pragma once
// Dense set over vertex ids 0..n-1, backed by the runtime-dispatched word
// kernels. Bits above the universe size are kept zero so whole-word
// comparisons and counts stay valid.

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "tempex/kernels.hpp"

namespace tempex {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::uint32_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.mask_tail();
    return s;
  }

  static VertexSet of(std::uint32_t universe, std::initializer_list<std::uint32_t> ids) {
    VertexSet s(universe);
    for (std::uint32_t v : ids) s.set(v);
    return s;
  }

  std::uint32_t universe() const { return n_; }
  std::size_t word_count() const { return words_.size(); }
  std::uint64_t* words() { return words_.data(); }
  const std::uint64_t* words() const { return words_.data(); }

  bool test(std::uint32_t v) const {
    assert(v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(std::uint32_t v) {
    assert(v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(std::uint32_t v) {
    assert(v < n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::uint64_t count() const {
    return kernels::active_ops().popcount(words_.data(), words_.size());
  }
  bool empty() const { return count() == 0; }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    kernels::active_ops().or_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    kernels::active_ops().and_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  // set difference: *this \ o
  VertexSet& subtract(const VertexSet& o) {
    assert(n_ == o.n_);
    kernels::active_ops().andnot_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }

  std::uint64_t count_and(const VertexSet& o) const {
    assert(n_ == o.n_);
    return kernels::active_ops().popcount_and(words_.data(), o.words_.data(), words_.size());
  }
  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    return kernels::active_ops().intersects(words_.data(), o.words_.data(), words_.size());
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    return kernels::active_ops().is_subset(words_.data(), o.words_.data(), words_.size());
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ &&
           kernels::active_ops().equals(a.words_.data(), b.words_.data(), a.words_.size());
  }

  // smallest member, if any
  std::optional<std::uint32_t> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t v) { out.push_back(v); });
    return out;
  }

 private:
  void mask_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tempex
