#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gsp {

// Fixed-width bit set sized at construction. Word-level range queries are what
// the ordering verifiers need, which is why this is not std::vector<bool>.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  // First set index >= i, or npos.
  std::size_t find_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const Bitset& o) const { return is_subset_of(o) && *this != o; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Is some index in [lo, hi) set here?
  bool any_in_range(std::size_t lo, std::size_t hi) const { return any_in_range_excluding(nullptr, lo, hi); }

  // Is some index in [lo, hi) set here and clear in `other`?
  bool any_in_range_excluding(const Bitset& other, std::size_t lo, std::size_t hi) const {
    return any_in_range_excluding(&other, lo, hi);
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  bool any_in_range_excluding(const Bitset* other, std::size_t lo, std::size_t hi) const {
    if (hi > size_) hi = size_;
    if (lo >= hi) return false;
    std::size_t first = lo >> 6, last = (hi - 1) >> 6;
    for (std::size_t wi = first; wi <= last; ++wi) {
      std::uint64_t w = words_[wi];
      if (other) w &= ~other->words_[wi];
      if (wi == first) w &= ~std::uint64_t{0} << (lo & 63);
      if (wi == last && (hi & 63)) w &= (std::uint64_t{1} << (hi & 63)) - 1;
      if (w) return true;
    }
    return false;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gsp
