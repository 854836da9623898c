#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

/// Index of an element inside a finite ring or module.
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices.
///
/// Ideals, submodules and multiplicative sets are all stored as one of these.
/// Iteration is always in ascending index order, which is what makes every
/// decider in the library deterministic.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  template <class Range>
  static ElementSet of(std::size_t universe, const Range& elems) {
    ElementSet s(universe);
    for (auto x : elems) s.insert(static_cast<Elem>(x));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u) != 0;
  }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Complement inside the universe.
  ElementSet complement() const {
    ElementSet c(universe_);
    for (std::size_t i = 0; i < universe_; ++i)
      if (!contains(static_cast<Elem>(i))) c.insert(static_cast<Elem>(i));
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<Elem>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  /// Calls f on ascending elements until it returns true; reports whether it did.
  template <class F>
  bool any_of(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<unsigned>(std::countr_zero(bits));
        if (f(static_cast<Elem>(w * 64 + bit))) return true;
        bits &= bits - 1;
      }
    }
    return false;
  }

  template <class F>
  bool all_of(F&& f) const {
    return !any_of([&](Elem x) { return !f(x); });
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: by cardinality, then lexicographically by sorted elements.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const auto na = a.size(), nb = b.size();
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        const auto low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ringlab
