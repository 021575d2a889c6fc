#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ucs {

// A member of a set system: a subset of a fixed finite universe, stored as a
// packed bit array. Indices refer to positions in the owning GroundSet.
class MemberSet {
 public:
  MemberSet() = default;
  explicit MemberSet(std::size_t universe_size)
      : nbits_(universe_size), words_((universe_size + 63) / 64, 0) {}
  MemberSet(std::size_t universe_size, std::initializer_list<std::size_t> indices)
      : MemberSet(universe_size) {
    for (std::size_t i : indices) add(i);
  }

  std::size_t universe_size() const { return nbits_; }
  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void add(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void remove(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  MemberSet& operator|=(const MemberSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  MemberSet& operator&=(const MemberSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  // Set difference.
  MemberSet& operator-=(const MemberSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend MemberSet operator|(MemberSet a, const MemberSet& b) { return a |= b; }
  friend MemberSet operator&(MemberSet a, const MemberSet& b) { return a &= b; }
  friend MemberSet operator-(MemberSet a, const MemberSet& b) { return a -= b; }

  // Complement within the universe.
  MemberSet complement() const {
    MemberSet r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  bool subset_of(const MemberSet& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const MemberSet& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  std::size_t intersection_count(const MemberSet& o) const {
    check_same(o);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  friend bool operator==(const MemberSet& a, const MemberSet& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  // Lexicographic order on the strictly increasing index lists. This is the
  // canonical member order used everywhere for deterministic output.
  friend bool lex_less(const MemberSet& a, const MemberSet& b) {
    a.check_same(b);
    std::size_t k = 0;
    while (k < a.words_.size() && a.words_[k] == b.words_[k]) ++k;
    if (k == a.words_.size()) return false;  // equal
    std::uint64_t diff = a.words_[k] ^ b.words_[k];
    std::size_t d = (k << 6) + static_cast<std::size_t>(std::countr_zero(diff));
    if (a.contains(d)) return b.any_above(d);
    return !a.any_above(d);
  }
  friend bool operator<(const MemberSet& a, const MemberSet& b) { return lex_less(a, b); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each_index([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each_index(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
        f(i);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }

  // First word; only meaningful for universes of at most 64 points.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

 private:
  bool any_above(std::size_t d) const {
    std::size_t k = d >> 6;
    std::uint64_t mask = ~((std::uint64_t{2} << (d & 63)) - 1);
    if (words_[k] & mask) return true;
    for (std::size_t j = k + 1; j < words_.size(); ++j)
      if (words_[j]) return true;
    return false;
  }
  void check_index(std::size_t i) const {
    if (i >= nbits_) throw std::out_of_range("member set: point index out of range");
  }
  void check_same(const MemberSet& o) const {
    if (nbits_ != o.nbits_)
      throw std::invalid_argument("member sets over different ground sets");
  }
  void trim() {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MemberSetHash {
  std::size_t operator()(const MemberSet& m) const { return m.hash(); }
};

}  // namespace ucs
