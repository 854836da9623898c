#pragma once

#include <unordered_set>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/multiplicative_set.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

inline constexpr const char* kDegenerateFlag = "degenerate multiplicative set (contains 0)";

/// One S-principality witness per ideal of a lattice.
struct IdealWitness {
  Ideal ideal;
  SPrincipalWitness witness;
};
using LatticeWitness = std::vector<IdealWitness>;

inline ElementSet scaled(const FiniteRing& R, Elem s, const ElementSet& xs) {
  ElementSet out(R.order());
  xs.for_each([&](Elem x) { out.insert(R.mul(s, x)); });
  return out;
}

/// Replays sI ⊆ Ra ⊆ I.
inline bool check_s_principal(const Ideal& I, const SPrincipalWitness& w) {
  const auto& R = *I.ring;
  return I.contains(w.a) && R.multiples(w.a).subset_of(I.elements) &&
         scaled(R, w.s, I.elements).subset_of(R.multiples(w.a));
}

/// Searches s ∈ S, then a ∈ I, both ascending, for sI ⊆ Ra ⊆ I.  Since Ra ⊆ I
/// forces a ∈ I the candidates are restricted to I.
inline Report<SPrincipalWitness> is_S_principal(const Ideal& I, const MultiplicativeSet& S) {
  return timed([&] {
    if (I.ring->id() != S.ring()->id()) throw ring_mismatch("ideal and multiplicative set over different rings");
    const auto& R = *I.ring;
    Report<SPrincipalWitness> r;
    if (S.contains_zero()) r.flag(kDegenerateFlag);
    const bool found = S.elements().any_of([&](Elem s) {
      const auto sI = scaled(R, s, I.elements);
      return I.elements.any_of([&](Elem a) {
        if (sI.subset_of(R.multiples(a))) {
          r.witness = SPrincipalWitness{s, a};
          return true;
        }
        return false;
      });
    });
    r.verdict = found ? Verdict::yes : Verdict::no;
    if (!found) r.exhaustion = static_cast<std::uint64_t>(S.size()) * I.size();
    return r;
  });
}

/// Is there J ⊆ I generated by at most k elements of I and s ∈ S with
/// sI ⊆ J?  For k at least the recorded generator count the answer is the
/// trivial witness (1, generators of I).
inline Report<SFiniteWitness> is_S_finite(const Ideal& I, const MultiplicativeSet& S, std::size_t k) {
  return timed([&] {
    if (I.ring->id() != S.ring()->id()) throw ring_mismatch("ideal and multiplicative set over different rings");
    const auto& R = *I.ring;
    Report<SFiniteWitness> r;
    if (S.contains_zero()) r.flag(kDegenerateFlag);
    if (k >= I.generators.size()) {
      r.verdict = Verdict::yes;
      r.witness = SFiniteWitness{R.one(), I.generators};
      return r;
    }

    // Distinct subideals of I generated by <= k elements, level by level.
    std::vector<Ideal> candidates{zero_ideal(I.ring)};
    std::unordered_set<ElementSet, ElementSetHash> seen{candidates.front().elements};
    std::vector<std::size_t> level{0};
    for (std::size_t depth = 0; depth < k; ++depth) {
      std::vector<std::size_t> next;
      for (auto idx : level) {
        I.elements.for_each([&](Elem a) {
          const auto& base = candidates[idx];
          if (base.contains(a)) return;
          auto gens = base.generators;
          gens.push_back(a);
          auto set = sumset(R, base.elements, R.multiples(a));
          if (seen.insert(set).second) {
            candidates.push_back({I.ring, std::move(set), std::move(gens)});
            next.push_back(candidates.size() - 1);
          }
        });
      }
      level = std::move(next);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Ideal& a, const Ideal& b) { return canonical_less(a.elements, b.elements); });

    const bool found = S.elements().any_of([&](Elem s) {
      const auto sI = scaled(R, s, I.elements);
      for (const auto& J : candidates)
        if (sI.subset_of(J.elements)) {
          r.witness = SFiniteWitness{s, J.generators};
          return true;
        }
      return false;
    });
    r.verdict = found ? Verdict::yes : Verdict::no;
    if (!found) r.exhaustion = static_cast<std::uint64_t>(S.size()) * candidates.size();
    return r;
  });
}

enum class BezoutMode { all_ideals, two_generated };

/// Checks every ideal of `lattice` (or only the <= 2-generated ones) for
/// S-principality.  A failure reports the least offending ideal.
inline Report<LatticeWitness, Ideal> is_S_bezout(const std::vector<Ideal>& lattice, const MultiplicativeSet& S,
                                                 BezoutMode mode = BezoutMode::all_ideals) {
  return timed([&] {
    Report<LatticeWitness, Ideal> r;
    if (S.contains_zero()) r.flag(kDegenerateFlag);
    LatticeWitness witnesses;
    for (const auto& I : lattice) {
      if (mode == BezoutMode::two_generated && I.generators.size() > 2) continue;
      auto sub = is_S_principal(I, S);
      if (!sub) {
        r.verdict = Verdict::no;
        r.counterexample = I;
        r.exhaustion = sub.exhaustion;
        return r;
      }
      witnesses.push_back({I, *sub.witness});
    }
    r.verdict = Verdict::yes;
    r.witness = std::move(witnesses);
    return r;
  });
}

inline Report<LatticeWitness, Ideal> is_S_bezout(const RingPtr& R, const MultiplicativeSet& S,
                                                 BezoutMode mode = BezoutMode::all_ideals) {
  if (R->id() != S.ring()->id()) throw ring_mismatch("multiplicative set over another ring");
  return is_S_bezout(all_ideals(R), S, mode);
}

/// Every ideal principal.  Witnesses are recorded with s = 1.
inline Report<LatticeWitness, Ideal> is_bezout(const std::vector<Ideal>& lattice) {
  return timed([&] {
    Report<LatticeWitness, Ideal> r;
    LatticeWitness witnesses;
    for (const auto& I : lattice) {
      auto sub = is_principal(I);
      if (!sub) {
        r.verdict = Verdict::no;
        r.counterexample = I;
        r.exhaustion = sub.exhaustion;
        return r;
      }
      witnesses.push_back({I, SPrincipalWitness{I.ring->one(), sub.witness->generator}});
    }
    r.verdict = Verdict::yes;
    r.witness = std::move(witnesses);
    return r;
  });
}

inline Report<LatticeWitness, Ideal> is_bezout(const RingPtr& R) { return is_bezout(all_ideals(R)); }

/// Every ideal S-principal.  Coincides with is_S_bezout on finite rings, where
/// every ideal is finitely generated.
inline Report<LatticeWitness, Ideal> is_S_pir(const std::vector<Ideal>& lattice, const MultiplicativeSet& S) {
  return timed([&] {
    Report<LatticeWitness, Ideal> r;
    if (S.contains_zero()) r.flag(kDegenerateFlag);
    LatticeWitness witnesses;
    for (const auto& I : lattice) {
      auto sub = is_S_principal(I, S);
      if (!sub) {
        r.verdict = Verdict::no;
        r.counterexample = I;
        r.exhaustion = sub.exhaustion;
        return r;
      }
      witnesses.push_back({I, *sub.witness});
    }
    r.verdict = Verdict::yes;
    r.witness = std::move(witnesses);
    return r;
  });
}

inline Report<LatticeWitness, Ideal> is_S_pir(const RingPtr& R, const MultiplicativeSet& S) {
  if (R->id() != S.ring()->id()) throw ring_mismatch("multiplicative set over another ring");
  return is_S_pir(all_ideals(R), S);
}

class not_prime : public invalid_argument {
 public:
  not_prime() : invalid_argument("ideal is not prime") {}
};

/// R - P for a prime P.
inline MultiplicativeSet prime_complement(const Ideal& P) {
  if (!is_prime(P)) throw not_prime();
  return MultiplicativeSet(P.ring, P.elements.complement(), P.elements.complement().elements());
}

/// R is (R - P)-Bézout.  P is verified prime.
inline Report<LatticeWitness, Ideal> is_P_bezout(const std::vector<Ideal>& lattice, const Ideal& P) {
  return is_S_bezout(lattice, prime_complement(P));
}

inline Report<LatticeWitness, Ideal> is_P_bezout(const RingPtr& R, const Ideal& P) {
  require_same_ring(*R, *P.ring);
  return is_P_bezout(all_ideals(R), P);
}

}  // namespace ringlab
