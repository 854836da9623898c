#pragma once

#include <span>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/module.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

/// A (finitely generated) ideal: its element set plus a generator list.
/// `elements` is always the closure of `generators`; the zero ideal may have
/// an empty generator list.
struct Ideal {
  RingPtr ring;
  ElementSet elements;
  std::vector<Elem> generators;

  bool contains(Elem x) const { return elements.contains(x); }
  std::size_t size() const { return elements.size(); }
  bool is_zero() const { return elements.size() == 1; }
  bool is_proper() const { return elements.size() < ring->order(); }
  bool subset_of(const Ideal& other) const { return elements.subset_of(other.elements); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring->id() == b.ring->id() && a.elements == b.elements;
  }
};

/// Sumset {x + y} inside R.
inline ElementSet sumset(const FiniteRing& R, const ElementSet& a, const ElementSet& b) {
  ElementSet out(R.order());
  a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.insert(R.add(x, y)); }); });
  return out;
}

inline ElementSet ideal_closure(const FiniteRing& R, std::span<const Elem> gens) {
  ElementSet span(R.order());
  span.insert(R.zero());
  for (Elem g : gens) {
    if (g >= R.order()) throw invalid_argument("ideal generator out of range");
    if (!span.contains(g)) span = sumset(R, span, R.multiples(g));
  }
  return span;
}

inline Ideal ideal_generated_by(const RingPtr& R, std::span<const Elem> gens) {
  return {R, ideal_closure(*R, gens), std::vector<Elem>(gens.begin(), gens.end())};
}

inline Ideal ideal_generated_by(const RingPtr& R, std::initializer_list<Elem> gens) {
  return ideal_generated_by(R, std::span<const Elem>(gens.begin(), gens.size()));
}

inline Ideal zero_ideal(const RingPtr& R) { return ideal_generated_by(R, std::span<const Elem>{}); }
inline Ideal unit_ideal(const RingPtr& R) { return ideal_generated_by(R, {R->one()}); }

/// Exhaustive ideal test: contains 0, closed under + and under R-multiples.
inline bool is_ideal_set(const FiniteRing& R, const ElementSet& s) {
  if (!s.contains(R.zero())) return false;
  return s.all_of([&](Elem x) {
    if (!s.all_of([&](Elem y) { return s.contains(R.add(x, y)); })) return false;
    return R.multiples(x).subset_of(s);
  });
}

/// A short generating list for a known ideal set: a single generator when one
/// exists, otherwise greedy ascending accumulation followed by a removal pass.
inline std::vector<Elem> generators_for(const FiniteRing& R, const ElementSet& s) {
  if (s.size() == 1) return {};
  std::vector<Elem> single;
  s.any_of([&](Elem a) {
    if (R.multiples(a) == s) {
      single.push_back(a);
      return true;
    }
    return false;
  });
  if (!single.empty()) return single;

  std::vector<Elem> gens;
  ElementSet span(R.order());
  span.insert(R.zero());
  s.for_each([&](Elem x) {
    if (!span.contains(x)) {
      gens.push_back(x);
      span = sumset(R, span, R.multiples(x));
    }
  });
  for (std::size_t i = 0; i < gens.size();) {
    auto trial = gens;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (ideal_closure(R, trial) == s)
      gens = std::move(trial);
    else
      ++i;
  }
  return gens;
}

/// Wraps a set that must already be an ideal.
inline Ideal ideal_from_set(const RingPtr& R, ElementSet s) {
  if (!is_ideal_set(*R, s)) throw invalid_argument("element set is not an ideal");
  auto gens = generators_for(*R, s);
  return {R, std::move(s), std::move(gens)};
}

/// The complete ideal lattice in canonical order (size, then elements).
/// Seeds with every principal ideal and closes under binary sums; generator
/// lists have minimal length.
inline std::vector<Ideal> all_ideals(const RingPtr& R) {
  check_order_bound(R->order(), "ideal enumeration over ring");
  std::vector<ElementSet> principal;
  principal.reserve(R->order());
  for (Elem a = 0; a < R->order(); ++a) principal.push_back(R->multiples(a));
  auto lattice = detail::lattice_closure(
      principal, [&](const ElementSet& a, const ElementSet& b) { return sumset(*R, a, b); });
  std::vector<Ideal> out;
  out.reserve(lattice.size());
  for (auto& [set, gens] : lattice) out.push_back({R, std::move(set), std::move(gens)});
  return out;
}

enum class Combine { sum, product, intersection };

inline Ideal combine(const Ideal& I, const Ideal& J, Combine kind) {
  require_same_ring(*I.ring, *J.ring);
  const auto& R = I.ring;
  switch (kind) {
    case Combine::sum: {
      auto gens = I.generators;
      gens.insert(gens.end(), J.generators.begin(), J.generators.end());
      return ideal_generated_by(R, gens);
    }
    case Combine::product: {
      std::vector<Elem> gens;
      for (Elem a : I.generators)
        for (Elem b : J.generators) gens.push_back(R->mul(a, b));
      return ideal_generated_by(R, gens);
    }
    case Combine::intersection:
      return ideal_from_set(R, I.elements & J.elements);
  }
  throw invalid_argument("unknown combine kind");
}

/// Scans a ∈ I ascending for Ra = I.
inline Report<PrincipalWitness> is_principal(const Ideal& I) {
  return timed([&] {
    Report<PrincipalWitness> r;
    const bool found = I.elements.any_of([&](Elem a) {
      if (I.ring->multiples(a) == I.elements) {
        r.witness = PrincipalWitness{a};
        return true;
      }
      return false;
    });
    r.verdict = found ? Verdict::yes : Verdict::no;
    if (!found) r.exhaustion = I.size();
    return r;
  });
}

/// I^e: the ideal of B generated by f(I).
inline Ideal extend(const Ideal& I, const RingHom& f) {
  if (I.ring->id() != f.source()->id()) throw ring_mismatch("extension along a hom from another ring");
  std::vector<Elem> gens;
  for (Elem g : I.generators) gens.push_back(f(g));
  return ideal_generated_by(f.target(), gens);
}

/// J^c = {a : f(a) ∈ J}.
inline Ideal contract(const Ideal& J, const RingHom& f) {
  if (J.ring->id() != f.target()->id()) throw ring_mismatch("contraction along a hom into another ring");
  return ideal_from_set(f.source(), f.preimage(J.elements));
}

/// ann(X) = {r : rx = 0 for all x ∈ X}.
inline Ideal annihilator(const RingPtr& R, const ElementSet& xs) {
  ElementSet ann(R->order());
  for (Elem r = 0; r < R->order(); ++r)
    if (xs.all_of([&](Elem x) { return R->mul(r, x) == R->zero(); })) ann.insert(r);
  return ideal_from_set(R, std::move(ann));
}

/// Proper, and xy ∈ P forces x ∈ P or y ∈ P (exhaustive).
inline bool is_prime(const Ideal& P) {
  if (!P.is_proper()) return false;
  const auto& R = *P.ring;
  for (Elem x = 0; x < R.order(); ++x) {
    if (P.contains(x)) continue;
    for (Elem y = x; y < R.order(); ++y)
      if (!P.contains(y) && P.contains(R.mul(x, y))) return false;
  }
  return true;
}

inline bool is_maximal(const Ideal& M, const std::vector<Ideal>& lattice) {
  if (!M.is_proper()) return false;
  for (const auto& J : lattice)
    if (M.subset_of(J) && J.is_proper() && !(J == M)) return false;
  return true;
}

}  // namespace ringlab
