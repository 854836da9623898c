#pragma once

#include <optional>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/s_bezout.hpp"

namespace ringlab {

class not_phi_ring : public invalid_argument {
 public:
  not_phi_ring() : invalid_argument("ring is not a phi-ring (Nil(R) is not a divided prime)") {}
};

/// The nilpotent elements; checked to be an ideal.
inline Ideal nilradical(const RingPtr& R) {
  ElementSet nil(R->order());
  for (Elem x = 0; x < R->order(); ++x) {
    Elem p = x;
    for (std::size_t k = 1; k <= R->order(); ++k) {
      if (p == R->zero()) {
        nil.insert(x);
        break;
      }
      p = R->mul(p, x);
    }
  }
  return ideal_from_set(R, std::move(nil));
}

/// Z(R): x with xy = 0 for some y ≠ 0 (includes 0).
inline ElementSet zero_divisors(const FiniteRing& R) {
  ElementSet z(R.order());
  for (Elem x = 0; x < R.order(); ++x)
    for (Elem y = 0; y < R.order(); ++y)
      if (y != R.zero() && R.mul(x, y) == R.zero()) {
        z.insert(x);
        break;
      }
  return z;
}

inline bool is_domain(const FiniteRing& R) { return zero_divisors(R).size() == 1; }

/// P prime and P ⊆ Rx for every x ∉ P.
inline bool is_divided_prime(const Ideal& P) {
  if (!is_prime(P)) return false;
  const auto& R = *P.ring;
  for (Elem x = 0; x < R.order(); ++x)
    if (!P.contains(x) && !P.elements.subset_of(R.multiples(x))) return false;
  return true;
}

inline bool is_phi_ring(const RingPtr& R) { return is_divided_prime(nilradical(R)); }

/// The image of R in R_{Nil(R)} with the canonical map x -> x/1.
struct PhiImage {
  RingPtr ring;
  RingHom hom;
  Localization total_quotient;  // T(R): localization at R \ Z(R)
  Localization nil_localization;  // K = R_{Nil(R)}
};

struct PhiRingAnalysis {
  Ideal nilradical;
  bool is_phi = false;
  ElementSet zero_divisors;
  std::optional<PhiImage> phi_image;
};

inline PhiImage phi_image(const RingPtr& R) {
  const auto nil = nilradical(R);
  if (!is_divided_prime(nil)) throw not_phi_ring();
  const auto Z = zero_divisors(*R);
  auto T = localize(R, mult_set_closure_of(R, Z.complement()));
  auto K = localize(R, MultiplicativeSet(R, nil.elements.complement(), {}));
  // x -> x/1 lands on all of eR, so phi(R) is the corner ring itself.
  RingHom hom = *K.hom;
  if (!hom.is_surjective()) throw axiom_violation("phi image", {});
  const auto phiR = K.ring;
  // Nil(phi(R)) = Z(phi(R)).
  if (!(nilradical(phiR).elements == zero_divisors(*phiR)))
    throw axiom_violation("Nil(phi(R)) = Z(phi(R))", {});
  return {phiR, std::move(hom), std::move(T), std::move(K)};
}

inline PhiRingAnalysis analyze_phi(const RingPtr& R) {
  PhiRingAnalysis a{nilradical(R), false, zero_divisors(*R), std::nullopt};
  a.is_phi = is_divided_prime(a.nilradical);
  if (a.is_phi) a.phi_image = phi_image(R);
  return a;
}

/// Nonnil ideals I ⊆ P where P is S-principal but I is not.
struct NonnilPair {
  Ideal smaller;
  Ideal larger;
};

/// Among nonnil ideals, S-principality descends from an ideal to its
/// subideals.  Defined for phi-rings only.  The witness lists the nonnil
/// ideals that are S-principal.
inline Report<LatticeWitness, NonnilPair> is_nonnil_S_bezout(const std::vector<Ideal>& lattice,
                                                             const MultiplicativeSet& S) {
  return timed([&] {
    const auto& R = S.ring();
    const auto nil = nilradical(R);
    if (!is_divided_prime(nil)) throw not_phi_ring();
    Report<LatticeWitness, NonnilPair> r;
    if (S.contains_zero()) r.flag(kDegenerateFlag);
    std::vector<const Ideal*> nonnil;
    std::vector<std::optional<SPrincipalWitness>> sp;
    for (const auto& I : lattice) {
      if (I.subset_of(nil)) continue;
      nonnil.push_back(&I);
      auto rep = is_S_principal(I, S);
      sp.push_back(rep.witness);
    }
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < nonnil.size(); ++i) {
      for (std::size_t p = 0; p < nonnil.size(); ++p) {
        if (!nonnil[i]->subset_of(*nonnil[p])) continue;
        ++pairs;
        if (sp[p] && !sp[i]) {
          r.verdict = Verdict::no;
          r.counterexample = NonnilPair{*nonnil[i], *nonnil[p]};
          return r;
        }
      }
    }
    LatticeWitness w;
    for (std::size_t i = 0; i < nonnil.size(); ++i)
      if (sp[i]) w.push_back({*nonnil[i], *sp[i]});
    r.verdict = Verdict::yes;
    r.witness = std::move(w);
    r.exhaustion = pairs;
    r.flag("nonnil ideals: " + std::to_string(nonnil.size()));
    return r;
  });
}

inline Report<LatticeWitness, NonnilPair> is_nonnil_S_bezout(const RingPtr& R, const MultiplicativeSet& S) {
  if (R->id() != S.ring()->id()) throw ring_mismatch("multiplicative set over another ring");
  return is_nonnil_S_bezout(all_ideals(R), S);
}

struct NilQuotientCheck {
  bool domain = false;
  Report<LatticeWitness, Ideal> s_bezout;
  bool holds() const { return domain && s_bezout.holds(); }
};

/// R/Nil(R) is a domain and S'-Bézout for S' = S + Nil(R).
inline NilQuotientCheck quotient_by_nil_check(const RingPtr& R, const MultiplicativeSet& S) {
  if (R->id() != S.ring()->id()) throw ring_mismatch("multiplicative set over another ring");
  const auto nil = nilradical(R);
  if (!is_divided_prime(nil)) throw not_phi_ring();
  auto Q = quotient_ring(R, nil);
  auto S1 = image_mult_set(Q.projection, S);
  return {is_domain(*Q.ring), is_S_bezout(Q.ring, S1)};
}

/// Ideals totally ordered by inclusion.
inline bool is_chained(const std::vector<Ideal>& lattice) {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      if (!lattice[i].subset_of(lattice[j]) && !lattice[j].subset_of(lattice[i])) return false;
  return true;
}

inline bool is_chained(const RingPtr& R) { return is_chained(all_ideals(R)); }

/// Nonnil ideals totally ordered by inclusion.
inline bool is_nonnil_chained(const std::vector<Ideal>& lattice) {
  if (lattice.empty()) return true;
  const auto nil = nilradical(lattice.front().ring);
  std::vector<const Ideal*> nonnil;
  for (const auto& I : lattice)
    if (!I.subset_of(nil)) nonnil.push_back(&I);
  for (std::size_t i = 0; i < nonnil.size(); ++i)
    for (std::size_t j = i + 1; j < nonnil.size(); ++j)
      if (!nonnil[i]->subset_of(*nonnil[j]) && !nonnil[j]->subset_of(*nonnil[i])) return false;
  return true;
}

inline bool is_nonnil_chained(const RingPtr& R) { return is_nonnil_chained(all_ideals(R)); }

inline std::vector<Ideal> primes(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& I : lattice)
    if (is_prime(I)) out.push_back(I);
  return out;
}

inline std::vector<Ideal> primes(const RingPtr& R) { return primes(all_ideals(R)); }

inline std::vector<Ideal> maximal_ideals(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& I : lattice)
    if (is_maximal(I, lattice)) out.push_back(I);
  return out;
}

/// R_P = (R - P)^{-1} R.
inline Localization localize_at_prime(const RingPtr& R, const Ideal& P) {
  require_same_ring(*R, *P.ring);
  return localize(R, prime_complement(P));
}

}  // namespace ringlab
