#pragma once

#include <span>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A multiplicatively closed subset that always contains 1.  Zero is allowed
/// but flagged: such a set makes every S-property hold trivially.
class MultiplicativeSet {
 public:
  MultiplicativeSet(RingPtr ring, ElementSet elements, std::vector<Elem> generators)
      : ring_(std::move(ring)), elements_(std::move(elements)), generators_(std::move(generators)) {
    contains_zero_ = elements_.contains(ring_->zero());
    all_units_ = elements_.subset_of(ring_->units());
  }

  const RingPtr& ring() const { return ring_; }
  const ElementSet& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  bool contains(Elem x) const { return elements_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  bool contains_zero() const { return contains_zero_; }
  bool all_units() const { return all_units_; }

  friend bool operator==(const MultiplicativeSet& a, const MultiplicativeSet& b) {
    return a.ring_->id() == b.ring_->id() && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  ElementSet elements_;
  std::vector<Elem> generators_;
  bool contains_zero_ = false;
  bool all_units_ = false;
};

namespace detail {
inline ElementSet multiplicative_closure(const FiniteRing& R, ElementSet seed) {
  seed.insert(R.one());
  std::vector<Elem> frontier = seed.elements();
  const auto gens = frontier;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : gens) {
        const Elem p = R.mul(x, g);
        if (!seed.contains(p)) {
          seed.insert(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return seed;
}
}  // namespace detail

/// Multiplicative closure of gens ∪ {1}.
inline MultiplicativeSet make_mult_set(const RingPtr& R, std::span<const Elem> gens) {
  ElementSet seed(R->order());
  for (Elem g : gens) {
    if (g >= R->order()) throw invalid_argument("multiplicative set generator out of range");
    seed.insert(g);
  }
  return MultiplicativeSet(R, detail::multiplicative_closure(*R, std::move(seed)),
                           std::vector<Elem>(gens.begin(), gens.end()));
}

inline MultiplicativeSet make_mult_set(const RingPtr& R, std::initializer_list<Elem> gens) {
  return make_mult_set(R, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Closure of an arbitrary element set; generators are recorded as given.
inline MultiplicativeSet mult_set_closure_of(const RingPtr& R, const ElementSet& elems) {
  return MultiplicativeSet(R, detail::multiplicative_closure(*R, elems), elems.elements());
}

inline MultiplicativeSet units_mult_set(const RingPtr& R) { return mult_set_closure_of(R, R->units()); }

}  // namespace ringlab
