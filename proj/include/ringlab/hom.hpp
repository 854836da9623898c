#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A verified unital ring homomorphism, stored as an element-index array.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  ElementSet image() const { return ElementSet::of(target_->order(), map_); }
  ElementSet image(const ElementSet& xs) const {
    ElementSet out(target_->order());
    xs.for_each([&](Elem x) { out.insert(map_[x]); });
    return out;
  }
  ElementSet preimage(const ElementSet& ys) const {
    ElementSet out(source_->order());
    for (Elem x = 0; x < map_.size(); ++x)
      if (ys.contains(map_[x])) out.insert(x);
    return out;
  }
  ElementSet kernel() const {
    ElementSet z(target_->order());
    z.insert(target_->zero());
    return preimage(z);
  }

  bool is_surjective() const { return image().size() == target_->order(); }
  bool is_injective() const { return kernel().size() == 1; }

 private:
  RingPtr source_, target_;
  std::vector<Elem> map_;
};

/// Exhaustive homomorphism check; reports the first failing law.
inline AxiomReport verify_hom(const FiniteRing& A, const FiniteRing& B, const std::vector<Elem>& map) {
  auto fail = [](std::string axiom, std::vector<Elem> w) {
    return AxiomReport{false, std::move(axiom), std::move(w)};
  };
  if (map.size() != A.order()) return fail("index range", {});
  for (Elem x = 0; x < map.size(); ++x)
    if (map[x] >= B.order()) return fail("index range", {x});
  if (map[A.zero()] != B.zero()) return fail("zero", {A.zero()});
  if (map[A.one()] != B.one()) return fail("unital", {A.one()});
  const auto N = static_cast<Elem>(A.order());
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      if (map[A.add(x, y)] != B.add(map[x], map[y])) return fail("additive", {x, y});
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y)
      if (map[A.mul(x, y)] != B.mul(map[x], map[y])) return fail("multiplicative", {x, y});
  return {};
}

inline RingHom make_hom(const RingPtr& A, const RingPtr& B, std::vector<Elem> map) {
  auto report = verify_hom(*A, *B, map);
  if (!report) throw axiom_violation(report.axiom, report.witness);
  return RingHom(A, B, std::move(map));
}

inline RingHom identity_hom(const RingPtr& R) {
  std::vector<Elem> map(R->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = x;
  return RingHom(R, R, std::move(map));
}

/// Z/nZ -> Z/mZ, x -> x mod m; requires m | n.
inline RingHom reduction_hom(const RingPtr& A, const RingPtr& B) {
  if (A->backend() != Backend::residue || B->backend() != Backend::residue)
    throw invalid_argument("reduce needs two residue rings");
  if (A->order() % B->order() != 0) throw invalid_argument("reduce needs the target modulus to divide the source");
  std::vector<Elem> map(A->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = static_cast<Elem>(x % B->order());
  return make_hom(A, B, std::move(map));
}

inline RingHom compose(const RingHom& g, const RingHom& f) {
  if (f.target()->id() != g.source()->id()) throw ring_mismatch("composition of non-composable homomorphisms");
  std::vector<Elem> map(f.source()->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return RingHom(f.source(), g.target(), std::move(map));
}

}  // namespace ringlab
