#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lfree {

// Dense bitmap over [0, size). All binary operations require equal sizes.
class Bitset {
 public:
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void set(std::size_t i) { words_[i / kWordBits] |= bit(i); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~bit(i); }
  bool test(std::size_t i) const { return i < size_ && (words_[i / kWordBits] & bit(i)) != 0; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // First set bit at position >= from, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (w) {
        std::size_t pos = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        return pos < size_ ? pos : size_;
      }
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  // Last set bit, or size() if empty.
  std::size_t find_last() const {
    for (std::size_t wi = words_.size(); wi-- > 0;) {
      if (words_[wi]) return wi * kWordBits + (kWordBits - 1 - std::countl_zero(words_[wi]));
    }
    return size_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // this &= (o >> shift), i.e. keep bit i only if o has bit i + shift.
  void and_shifted_down(const Bitset& o, std::size_t shift) {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t src = i + ws;
      std::uint64_t v = 0;
      if (src < n) {
        v = o.words_[src] >> bs;
        if (bs && src + 1 < n) v |= o.words_[src + 1] << (kWordBits - bs);
      }
      words_[i] &= v;
    }
  }

  // (o >> shift) ∩ this is nonempty.
  bool intersects_shifted_down(const Bitset& o, std::size_t shift) const {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = static_cast<unsigned>(shift % kWordBits);
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i + ws < n; ++i) {
      std::size_t src = i + ws;
      std::uint64_t v = o.words_[src] >> bs;
      if (bs && src + 1 < n) v |= o.words_[src + 1] << (kWordBits - bs);
      if (words_[i] & v) return true;
    }
    return false;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.size_ == b.size_ && a.words_ == b.words_; }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % kWordBits); }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace lfree
