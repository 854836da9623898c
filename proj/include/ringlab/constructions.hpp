#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "ringlab/multiplicative_set.hpp"

namespace ringlab {

namespace detail {
inline RingPtr derived_ring(RingTables t, std::string description, CodecPtr codec) {
  return std::make_shared<const FiniteRing>(std::move(t), Backend::derived, std::move(description), std::move(codec),
                                            kVerifyStructured);
}
}  // namespace detail

/// Closure of {f(s) : s ∈ S}.
inline MultiplicativeSet image_mult_set(const RingHom& f, const MultiplicativeSet& S) {
  if (S.ring()->id() != f.source()->id()) throw ring_mismatch("multiplicative set not over the source of the hom");
  std::vector<Elem> gens;
  for (Elem g : S.generators()) gens.push_back(f(g));
  auto closed = detail::multiplicative_closure(*f.target(), f.image(S.elements()));
  return MultiplicativeSet(f.target(), std::move(closed), std::move(gens));
}

// ---------------------------------------------------------------------------
// Direct product

struct ProductRing {
  RingPtr ring, left, right;

  Elem pair(Elem a, Elem b) const { return static_cast<Elem>(a * right->order() + b); }
  std::pair<Elem, Elem> split(Elem x) const {
    return {static_cast<Elem>(x / right->order()), static_cast<Elem>(x % right->order())};
  }

  RingHom proj1() const {
    std::vector<Elem> m(ring->order());
    for (Elem x = 0; x < m.size(); ++x) m[x] = split(x).first;
    return RingHom(ring, left, std::move(m));
  }
  RingHom proj2() const {
    std::vector<Elem> m(ring->order());
    for (Elem x = 0; x < m.size(); ++x) m[x] = split(x).second;
    return RingHom(ring, right, std::move(m));
  }

  Ideal ideal(const Ideal& I1, const Ideal& I2) const {
    ElementSet s(ring->order());
    I1.elements.for_each([&](Elem a) { I2.elements.for_each([&](Elem b) { s.insert(pair(a, b)); }); });
    return ideal_from_set(ring, std::move(s));
  }

  MultiplicativeSet mult_set(const MultiplicativeSet& S1, const MultiplicativeSet& S2) const {
    ElementSet s(ring->order());
    S1.elements().for_each([&](Elem a) { S2.elements().for_each([&](Elem b) { s.insert(pair(a, b)); }); });
    return MultiplicativeSet(ring, std::move(s), s.elements());
  }
};

inline ProductRing product(const RingPtr& R1, const RingPtr& R2) {
  const auto n1 = R1->order(), n2 = R2->order();
  check_order_bound(n1 * n2, "product");
  const auto n = n1 * n2;
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a1 = static_cast<Elem>(x / n2), b1 = static_cast<Elem>(x % n2);
      const auto a2 = static_cast<Elem>(y / n2), b2 = static_cast<Elem>(y % n2);
      t.add[x * n + y] = static_cast<Elem>(R1->add(a1, a2) * n2 + R2->add(b1, b2));
      t.mul[x * n + y] = static_cast<Elem>(R1->mul(a1, a2) * n2 + R2->mul(b1, b2));
    }
  t.zero = static_cast<Elem>(R1->zero() * n2 + R2->zero());
  t.one = static_cast<Elem>(R1->one() * n2 + R2->one());
  auto ring = detail::derived_ring(std::move(t), "product(" + R1->description() + ", " + R2->description() + ")",
                                   std::make_shared<PairCodec>(R1->codec_ptr(), R2->codec_ptr(), n2));
  return {std::move(ring), R1, R2};
}

/// a -> (a, a).
inline RingHom diagonal_hom(const ProductRing& P) {
  if (P.left->id() != P.right->id()) throw invalid_argument("diagonal needs a product of a ring with itself");
  std::vector<Elem> m(P.left->order());
  for (Elem a = 0; a < m.size(); ++a) m[a] = P.pair(a, a);
  return make_hom(P.left, P.ring, std::move(m));
}

// ---------------------------------------------------------------------------
// Quotient

struct QuotientRing {
  RingPtr ring, parent;
  Ideal ideal;
  RingHom projection;
  std::vector<Elem> representative;  // least parent index of each coset
};

/// R/I with least-index coset representatives.  I = R is rejected (the zero
/// ring has no nonzero identity).
inline QuotientRing quotient_ring(const RingPtr& R, const Ideal& I) {
  require_same_ring(*R, *I.ring);
  if (!I.is_proper()) throw invalid_argument("quotient by the unit ideal is the zero ring");
  std::vector<Elem> coset(R->order(), static_cast<Elem>(-1));
  std::vector<Elem> rep;
  for (Elem x = 0; x < R->order(); ++x) {
    if (coset[x] != static_cast<Elem>(-1)) continue;
    const auto idx = static_cast<Elem>(rep.size());
    rep.push_back(x);
    I.elements.for_each([&](Elem i) { coset[R->add(x, i)] = idx; });
  }
  const auto n = rep.size();
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = coset[R->add(rep[a], rep[b])];
      t.mul[a * n + b] = coset[R->mul(rep[a], rep[b])];
    }
  t.zero = coset[R->zero()];
  t.one = coset[R->one()];
  auto ring = detail::derived_ring(std::move(t), "quotient(" + R->description() + ")",
                                   std::make_shared<ParentCodec>(R->codec_ptr(), rep, coset));
  RingHom proj(R, ring, coset);
  return {ring, R, I, std::move(proj), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Trivial extension A ∝ E

/// A ∝ E: pairs (a, m) with (a,m)(b,n) = (ab, an + bm); index a*|E| + m.
struct TrivialExtension {
  RingPtr ring, base;
  ModulePtr module;

  Elem pair(Elem a, Elem m) const { return static_cast<Elem>(a * module->order() + m); }
  std::pair<Elem, Elem> split(Elem x) const {
    return {static_cast<Elem>(x / module->order()), static_cast<Elem>(x % module->order())};
  }

  /// (a, m) -> a.
  RingHom projection() const {
    std::vector<Elem> m(ring->order());
    for (Elem x = 0; x < m.size(); ++x) m[x] = split(x).first;
    return RingHom(ring, base, std::move(m));
  }
  /// a -> (a, 0).
  RingHom inclusion() const {
    std::vector<Elem> m(base->order());
    for (Elem a = 0; a < m.size(); ++a) m[a] = pair(a, module->zero());
    return RingHom(base, ring, std::move(m));
  }

  /// S0 ∝ 0.
  MultiplicativeSet lift_zero(const MultiplicativeSet& S0) const { return lift(S0, false); }
  /// S0 ∝ E.
  MultiplicativeSet lift_full(const MultiplicativeSet& S0) const { return lift(S0, true); }

  /// {a : (a, e) ∈ X for some e}.
  ElementSet first_projection(const ElementSet& xs) const {
    ElementSet out(base->order());
    xs.for_each([&](Elem x) { out.insert(split(x).first); });
    return out;
  }

  /// I ∝ F; requires IE ⊆ F.
  Ideal homogeneous_ideal(const ElementSet& I, const ElementSet& F) const {
    ElementSet s(ring->order());
    I.for_each([&](Elem a) { F.for_each([&](Elem m) { s.insert(pair(a, m)); }); });
    return ideal_from_set(ring, std::move(s));
  }

  /// 0 ∝ F.
  Ideal zero_times(const Submodule& F) const {
    ElementSet zero(base->order());
    zero.insert(base->zero());
    return homogeneous_ideal(zero, F.elements);
  }

 private:
  MultiplicativeSet lift(const MultiplicativeSet& S0, bool full) const {
    if (S0.ring()->id() != base->id()) throw ring_mismatch("multiplicative set not over the base ring");
    ElementSet s(ring->order());
    S0.elements().for_each([&](Elem a) {
      if (full)
        for (Elem m = 0; m < module->order(); ++m) s.insert(pair(a, m));
      else
        s.insert(pair(a, module->zero()));
    });
    return MultiplicativeSet(ring, std::move(s), full ? s.elements() : std::vector<Elem>{});
  }
};

inline TrivialExtension trivial_extension(const RingPtr& A, const ModulePtr& E) {
  if (E->ring()->id() != A->id()) throw ring_mismatch("module is not over the base ring");
  const auto na = A->order(), ne = E->order();
  check_order_bound(na * ne, "trivial extension");
  const auto n = na * ne;
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = static_cast<Elem>(x / ne), m = static_cast<Elem>(x % ne);
      const auto b = static_cast<Elem>(y / ne), k = static_cast<Elem>(y % ne);
      t.add[x * n + y] = static_cast<Elem>(A->add(a, b) * ne + E->add(m, k));
      t.mul[x * n + y] = static_cast<Elem>(A->mul(a, b) * ne + E->add(E->act(a, k), E->act(b, m)));
    }
  t.zero = static_cast<Elem>(A->zero() * ne + E->zero());
  t.one = static_cast<Elem>(A->one() * ne + E->zero());
  auto ring = detail::derived_ring(std::move(t), "trivext(" + A->description() + ", " + E->description() + ")",
                                   std::make_shared<PairCodec>(A->codec_ptr(), E->codec_ptr(), ne));
  return {std::move(ring), A, E};
}

struct HomogeneousDecomposition {
  bool homogeneous = false;
  ElementSet first;   // I = first projection of L
  ElementSet module;  // F = {e : (0, e) ∈ L}
};

/// L = I ∝ F with IE ⊆ F, where I and F are read off L.
inline HomogeneousDecomposition is_homogeneous(const TrivialExtension& T, const Ideal& L) {
  require_same_ring(*T.ring, *L.ring);
  HomogeneousDecomposition d;
  d.first = T.first_projection(L.elements);
  d.module = ElementSet(T.module->order());
  for (Elem m = 0; m < T.module->order(); ++m)
    if (L.contains(T.pair(T.base->zero(), m))) d.module.insert(m);
  const bool product_shape = d.first.all_of([&](Elem i) { return L.contains(T.pair(i, T.module->zero())); });
  const bool ie_in_f = d.first.all_of([&](Elem i) {
    for (Elem e = 0; e < T.module->order(); ++e)
      if (!d.module.contains(T.module->act(i, e))) return false;
    return true;
  });
  d.homogeneous = product_shape && ie_in_f;
  return d;
}

// ---------------------------------------------------------------------------
// Amalgamation A ⋈^f J

/// {(a, f(a) + j) : a ∈ A, j ∈ J} ⊆ A × B, indexed by (a, rank of j).
struct Amalgamation {
  RingPtr ring, A, B;
  RingHom f;
  Ideal J;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> lookup;  // a * |B| + b -> index, or -1

  static constexpr Elem npos = static_cast<Elem>(-1);

  Elem index_of(Elem a, Elem b) const { return lookup[a * B->order() + b]; }

  /// (a, b) -> a; always surjective.
  RingHom projection() const {
    std::vector<Elem> m(ring->order());
    for (Elem x = 0; x < m.size(); ++x) m[x] = pairs[x].first;
    return RingHom(ring, A, std::move(m));
  }
  /// a -> (a, f(a)).
  RingHom inclusion() const {
    std::vector<Elem> m(A->order());
    for (Elem a = 0; a < m.size(); ++a) m[a] = index_of(a, f(a));
    return RingHom(A, ring, std::move(m));
  }

  /// S0 ⋈^f 0 = {(s, f(s))}.
  MultiplicativeSet lift_zero(const MultiplicativeSet& S0) const {
    check_base(S0);
    ElementSet s(ring->order());
    S0.elements().for_each([&](Elem a) { s.insert(index_of(a, f(a))); });
    return MultiplicativeSet(ring, std::move(s), {});
  }
  /// S0 ⋈^f J = {(s, f(s) + j)}.
  MultiplicativeSet lift_full(const MultiplicativeSet& S0) const {
    check_base(S0);
    ElementSet s(ring->order());
    S0.elements().for_each(
        [&](Elem a) { J.elements.for_each([&](Elem j) { s.insert(index_of(a, B->add(f(a), j))); }); });
    return MultiplicativeSet(ring, std::move(s), {});
  }

  ElementSet first_projection(const ElementSet& xs) const {
    ElementSet out(A->order());
    xs.for_each([&](Elem x) { out.insert(pairs[x].first); });
    return out;
  }

  /// I ⋈^f J = {(i, f(i) + j) : i ∈ I, j ∈ J}.
  ElementSet homogeneous_set(const ElementSet& I) const {
    ElementSet s(ring->order());
    I.for_each([&](Elem i) { J.elements.for_each([&](Elem j) { s.insert(index_of(i, B->add(f(i), j))); }); });
    return s;
  }

  /// L = I ⋈^f J for I the first projection of L.
  bool is_homogeneous(const Ideal& L) const {
    require_same_ring(*ring, *L.ring);
    return homogeneous_set(first_projection(L.elements)) == L.elements;
  }

 private:
  void check_base(const MultiplicativeSet& S0) const {
    if (S0.ring()->id() != A->id()) throw ring_mismatch("multiplicative set not over A");
  }
};

inline Amalgamation amalgamation(const RingPtr& A, const RingPtr& B, const RingHom& f, const Ideal& J,
                                 std::string description = {}) {
  if (f.source()->id() != A->id() || f.target()->id() != B->id()) throw ring_mismatch("hom does not map A to B");
  require_same_ring(*B, *J.ring);
  check_order_bound(A->order() * J.size(), "amalgamation");
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> lookup(A->order() * B->order(), Amalgamation::npos);
  for (Elem a = 0; a < A->order(); ++a)
    J.elements.for_each([&](Elem j) {
      const Elem b = B->add(f(a), j);
      lookup[a * B->order() + b] = static_cast<Elem>(pairs.size());
      pairs.emplace_back(a, b);
    });
  const auto n = pairs.size();
  auto at = [&](Elem a, Elem b) {
    const Elem idx = lookup[a * B->order() + b];
    if (idx == Amalgamation::npos) throw axiom_violation("subring closure", {a, b});
    return idx;
  };
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a1, b1] = pairs[x];
      const auto [a2, b2] = pairs[y];
      t.add[x * n + y] = at(A->add(a1, a2), B->add(b1, b2));
      t.mul[x * n + y] = at(A->mul(a1, a2), B->mul(b1, b2));
    }
  t.zero = at(A->zero(), B->zero());
  t.one = at(A->one(), B->one());
  if (description.empty()) description = "amalg(" + A->description() + ", " + B->description() + ")";
  auto ring = detail::derived_ring(std::move(t), std::move(description),
                                   std::make_shared<PairListCodec>(A->codec_ptr(), B->codec_ptr(), pairs));
  return {std::move(ring), A, B, f, J, std::move(pairs), std::move(lookup)};
}

/// A ⋈ I = A ⋈^{id} I.
inline Amalgamation duplication(const RingPtr& A, const Ideal& I) {
  return amalgamation(A, A, identity_hom(A), I, "dup(" + A->description() + ")");
}

// ---------------------------------------------------------------------------
// Localization

/// S^{-1}R for finite R, realised as the corner ring eR where e is the stable
/// idempotent power of the product of S.  When 0 ∈ S the result is the zero
/// ring: `degenerate` is set and `ring`/`hom` are empty.
struct Localization {
  RingPtr parent;
  Elem idempotent = 0;
  bool degenerate = false;
  RingPtr ring;
  std::optional<RingHom> hom;
  std::vector<Elem> embedding;  // index in eR -> parent element
};

/// The idempotent t^k with t^k = t^{2k}.
inline Elem stable_idempotent(const FiniteRing& R, Elem t) {
  Elem power = t;
  for (std::size_t k = 1; k <= 2 * R.order() + 1; ++k) {
    if (R.mul(power, power) == power) return power;
    power = R.mul(power, t);
  }
  throw axiom_violation("power sequence without idempotent", {t});
}

inline Localization localize(const RingPtr& R, const MultiplicativeSet& S) {
  if (S.ring()->id() != R->id()) throw ring_mismatch("multiplicative set over another ring");
  Elem t = R->one();
  S.elements().for_each([&](Elem s) { t = R->mul(t, s); });
  Localization L;
  L.parent = R;
  L.idempotent = stable_idempotent(*R, t);
  const Elem e = L.idempotent;
  if (e == R->zero()) {
    L.degenerate = true;
    return L;
  }

  std::vector<Elem> index_of(R->order(), static_cast<Elem>(-1));
  for (Elem r = 0; r < R->order(); ++r) {
    const Elem er = R->mul(e, r);
    if (index_of[er] == static_cast<Elem>(-1)) {
      index_of[er] = 0;
    }
  }
  for (Elem r = 0; r < R->order(); ++r)
    if (index_of[r] != static_cast<Elem>(-1)) {
      index_of[r] = static_cast<Elem>(L.embedding.size());
      L.embedding.push_back(r);
    }
  const auto n = L.embedding.size();
  RingTables tab;
  tab.order = n;
  tab.add.resize(n * n);
  tab.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      tab.add[x * n + y] = index_of[R->add(L.embedding[x], L.embedding[y])];
      tab.mul[x * n + y] = index_of[R->mul(L.embedding[x], L.embedding[y])];
    }
  tab.zero = index_of[R->zero()];
  tab.one = index_of[e];
  std::vector<Elem> from_parent(R->order());
  for (Elem r = 0; r < R->order(); ++r) from_parent[r] = index_of[R->mul(e, r)];
  L.ring = detail::derived_ring(std::move(tab), "localize(" + R->description() + ")",
                                std::make_shared<ParentCodec>(R->codec_ptr(), L.embedding, from_parent));
  L.hom = RingHom(R, L.ring, from_parent);

  // Postconditions: S maps into the units, and the kernel is
  // {r : sr = 0 for some s ∈ S}.
  S.elements().for_each([&](Elem s) {
    if (!L.ring->is_unit((*L.hom)(s))) throw axiom_violation("localization inverts S", {s});
  });
  const auto kernel = L.hom->kernel();
  for (Elem r = 0; r < R->order(); ++r) {
    const bool killed = S.elements().any_of([&](Elem s) { return R->mul(s, r) == R->zero(); });
    if (killed != kernel.contains(r)) throw axiom_violation("localization kernel", {r});
  }
  return L;
}

/// Z/nZ -> R, k -> k·1; valid when n·1 = 0 in R.
inline RingHom canonical_hom(const RingPtr& Zn, const RingPtr& R) {
  if (Zn->backend() != Backend::residue) throw invalid_argument("canonical hom needs a residue ring source");
  std::vector<Elem> m(Zn->order());
  Elem acc = R->zero();
  for (Elem k = 0; k < m.size(); ++k) {
    m[k] = acc;
    acc = R->add(acc, R->one());
  }
  return make_hom(Zn, R, std::move(m));
}

}  // namespace ringlab
