#ifndef SILVERBIG_BITSET_HPP
#define SILVERBIG_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace silverbig {

// Runtime-sized bit set over 0..size-1; the workhorse for adjacency rows and
// candidate sets in the searches.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set_all() {
    for (auto &w : words_)
      w = ~std::uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  bool none() const { return !any(); }

  // Lowest set index at or after `from`, or -1.
  int next(int from = 0) const {
    if (from >= size_)
      return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w)
        return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size())
        return -1;
      w = words_[wi];
    }
  }

  int intersection_count(const Bitset &o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const Bitset &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i])
        return true;
    return false;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }

  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  // this &= ~o
  Bitset &subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  Bitset complement() const {
    Bitset r(*this);
    for (auto &w : r.words_)
      w = ~w;
    r.trim();
    return r;
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset &) const = default;

private:
  void trim() {
    if (size_ & 63)
      words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace silverbig

#endif
