#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ringlab/constructions.hpp"
#include "ringlab/nonnil.hpp"
#include "ringlab/s_bezout.hpp"
#include "ringlab/zext.hpp"

namespace ringlab::harness {

inline constexpr int kGeneratorVersion = 1;

struct Profile {
  std::string name = "default";
  std::size_t max_order = 32;
  std::size_t target_hits = 100;
  std::size_t max_attempts = 2000;
  int max_depth = 2;
};

inline Profile profile_named(const std::string& name) {
  Profile p;
  p.name = name;
  if (name == "default") return p;
  if (name == "quick") {
    p.target_hits = 15;
    p.max_attempts = 300;
    return p;
  }
  if (name == "wide") {
    p.max_order = 48;
    return p;
  }
  throw invalid_argument("unknown profile '" + name + "' (expected default, quick or wide)");
}

/// Everything a constructor produced on the way to an instance.
struct Trace {
  std::vector<ModulePtr> modules;
  std::vector<RingHom> homs;
  std::vector<RingPtr> rings;
};

struct Instance {
  std::uint64_t seed = 0;
  std::string shape;
  RingPtr ring;
  std::vector<Elem> s_generators;
  std::optional<MultiplicativeSet> S;
  Trace trace;

  std::string describe() const;
};

inline std::string format_elems(const FiniteRing& R, const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + R.format(xs[i]);
  return out + "}";
}

inline std::string format_set(const FiniteRing& R, const ElementSet& xs) { return format_elems(R, xs.elements()); }

inline std::string describe_set(const MultiplicativeSet& S) {
  return "closure " + format_elems(*S.ring(), S.generators());
}

inline std::string Instance::describe() const {
  return ring->description() + " | S = closure " + format_elems(*ring, s_generators);
}

class Generator {
 public:
  Generator(std::uint64_t seed, Profile profile) : rng_(seed), profile_(std::move(profile)) {}

  const Profile& profile() const { return profile_; }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  /// zmod n, GF(p^k) or F_p[t]/(t^k) of order <= budget.
  RingPtr base_ring(std::size_t budget, std::string& shape) {
    budget = std::min(budget, profile_.max_order);
    struct Spec {
      int kind;
      long long p;
      int k;
    };
    std::vector<Spec> zmod, gf, poly;
    for (long long n = 2; n <= static_cast<long long>(budget); ++n) zmod.push_back({0, n, 1});
    for (long long p = 2; p <= static_cast<long long>(budget); ++p) {
      if (!detail::is_prime(p)) continue;
      long long q = p * p;
      for (int k = 2; q <= static_cast<long long>(budget); ++k, q *= p) {
        gf.push_back({1, p, k});
        poly.push_back({2, p, k});
      }
    }
    std::vector<const std::vector<Spec>*> kinds{&zmod};
    if (!gf.empty()) kinds.push_back(&gf);
    if (!poly.empty()) kinds.push_back(&poly);
    const auto& s = pick(*kinds[below(kinds.size())]);
    switch (s.kind) {
      case 0:
        shape = "zmod";
        return make_zmod(s.p);
      case 1:
        shape = "gf";
        return make_gf(s.p, s.k);
      default: {
        shape = "polyquot";
        std::vector<long long> f(static_cast<std::size_t>(s.k) + 1, 0);
        f.back() = 1;
        return make_poly_quotient(s.p, f);
      }
    }
  }

  /// A finite local ring of order <= budget.
  RingPtr local_ring(std::size_t budget, Trace& trace, std::string& shape) {
    budget = std::min(budget, profile_.max_order);
    const auto roll = below(5);
    if (roll == 3 && budget >= 8) {
      auto A = local_ring(budget / 2, trace, shape);
      const auto M = maximal_ideals(all_ideals(A)).front();
      auto Q = quotient_ring(A, M);
      std::size_t r = 1;
      while (r < 3 && A->order() * pow_size(Q.ring->order(), r + 1) <= budget && chance(0.5)) ++r;
      if (A->order() * pow_size(Q.ring->order(), r) > budget) return A;
      auto E = restrict_scalars(make_free_module(Q.ring, r), Q.projection);
      auto T = trivial_extension(A, E);
      trace.modules.push_back(E);
      trace.homs.push_back(Q.projection);
      shape = "trivext(" + shape + ")";
      return T.ring;
    }
    if (roll == 4 && budget >= 8) {
      auto A = local_ring(budget / 2, trace, shape);
      const auto L = all_ideals(A);
      std::vector<Ideal> inside;
      const auto M = maximal_ideals(L).front();
      for (const auto& I : L)
        if (I.subset_of(M) && A->order() * I.size() <= budget) inside.push_back(I);
      auto D = duplication(A, pick(inside));
      trace.homs.push_back(D.projection());
      shape = "dup(" + shape + ")";
      return D.ring;
    }
    std::vector<std::pair<long long, int>> prime_powers;
    for (long long p = 2; p <= static_cast<long long>(budget); ++p) {
      if (!detail::is_prime(p)) continue;
      long long q = p;
      for (int k = 1; q <= static_cast<long long>(budget); ++k, q *= p) prime_powers.emplace_back(p, k);
    }
    const auto [p, k] = pick(prime_powers);
    switch (roll % 3) {
      case 0: {
        shape = "zmod";
        long long n = 1;
        for (int i = 0; i < k; ++i) n *= p;
        return make_zmod(n);
      }
      case 1:
        shape = "gf";
        return make_gf(p, k);
      default: {
        shape = "polyquot";
        std::vector<long long> f(static_cast<std::size_t>(k) + 1, 0);
        f.back() = 1;
        return make_poly_quotient(p, f);
      }
    }
  }

  /// A ring of order <= budget built from base rings and up to `depth`
  /// nested constructions.
  RingPtr ring(std::size_t budget, int depth, Trace& trace, std::string& shape) {
    budget = std::min(budget, profile_.max_order);
    if (depth <= 0 || budget < 4 || chance(0.2)) {
      auto R = base_ring(budget, shape);
      trace.rings.push_back(R);
      return R;
    }
    RingPtr out;
    switch (below(6)) {
      case 0: {
        std::string s1, s2;
        auto R1 = ring(budget / 2, depth - 1, trace, s1);
        auto R2 = ring(budget / R1->order(), depth - 1, trace, s2);
        auto P = product(R1, R2);
        trace.homs.push_back(P.proj1());
        trace.homs.push_back(P.proj2());
        shape = "product(" + s1 + "," + s2 + ")";
        out = P.ring;
        break;
      }
      case 1: {
        std::string s;
        auto R = ring(budget, depth - 1, trace, s);
        const auto L = all_ideals(R);
        std::vector<Ideal> mid;
        for (const auto& I : L)
          if (!I.is_zero() && I.is_proper()) mid.push_back(I);
        if (mid.empty()) {
          shape = s;
          return R;
        }
        auto Q = quotient_ring(R, pick(mid));
        trace.homs.push_back(Q.projection);
        shape = "quotient(" + s + ")";
        out = Q.ring;
        break;
      }
      case 2: {
        std::string s;
        auto A = ring(budget / 2, depth - 1, trace, s);
        auto E = module_over(A, budget / A->order(), trace);
        if (!E) {
          shape = s;
          return A;
        }
        auto T = trivial_extension(A, E);
        trace.homs.push_back(T.projection());
        trace.homs.push_back(T.inclusion());
        shape = "trivext(" + s + ")";
        out = T.ring;
        break;
      }
      case 3: {
        std::string s;
        auto A = ring(budget / 2, depth - 1, trace, s);
        auto D = duplication(A, small_ideal(all_ideals(A), budget / A->order(), true));
        trace.homs.push_back(D.projection());
        trace.homs.push_back(D.inclusion());
        shape = "dup(" + s + ")";
        out = D.ring;
        break;
      }
      case 4: {
        std::string s;
        auto A = ring(budget / 2, depth - 1, trace, s);
        auto f = hom_out_of(A, trace);
        const auto J = small_ideal(all_ideals(f.target()), budget / A->order(), false);
        auto G = amalgamation(A, f.target(), f, J);
        trace.homs.push_back(f);
        trace.homs.push_back(G.projection());
        trace.homs.push_back(G.inclusion());
        shape = "amalg(" + s + ")";
        out = G.ring;
        break;
      }
      default: {
        std::string s;
        auto R = ring(budget, depth - 1, trace, s);
        auto L = localize(R, mult_set(R));
        if (L.degenerate || L.ring->order() < 2) {
          shape = s;
          return R;
        }
        trace.homs.push_back(*L.hom);
        shape = "localize(" + s + ")";
        out = L.ring;
        break;
      }
    }
    trace.rings.push_back(out);
    return out;
  }

  /// A module E over A with |E| <= cap: free over A or free over a quotient
  /// A/I viewed through the projection.  Null when cap < 2.
  ModulePtr module_over(const RingPtr& A, std::size_t cap, Trace& trace) {
    if (cap < 2) return nullptr;
    std::vector<Ideal> options;
    for (const auto& I : all_ideals(A))
      if (I.is_proper() && A->order() / I.size() <= cap) options.push_back(I);
    if (options.empty()) return nullptr;
    const auto I = pick(options);
    const std::size_t q = A->order() / I.size();
    std::size_t r = 1;
    while (r < 3 && pow_size(q, r + 1) <= cap && chance(0.4)) ++r;
    ModulePtr E;
    if (I.is_zero()) {
      E = make_free_module(A, r);
    } else {
      auto Q = quotient_ring(A, I);
      trace.homs.push_back(Q.projection);
      E = restrict_scalars(make_free_module(Q.ring, r), Q.projection);
    }
    trace.modules.push_back(E);
    return E;
  }

  /// A hom out of A: a quotient projection, the inclusion into a trivial
  /// extension, or a reduction between residue rings.
  RingHom hom_out_of(const RingPtr& A, Trace& trace) {
    const auto roll = below(3);
    if (roll == 0) {
      std::vector<Ideal> proper;
      for (const auto& I : all_ideals(A))
        if (I.is_proper()) proper.push_back(I);
      return quotient_ring(A, pick(proper)).projection;
    }
    if (roll == 1) {
      if (auto E = module_over(A, 4, trace)) return trivial_extension(A, E).inclusion();
    }
    if (A->backend() == Backend::residue) {
      std::vector<long long> divisors;
      const auto n = static_cast<long long>(A->order());
      for (long long m = 2; m <= n; ++m)
        if (n % m == 0) divisors.push_back(m);
      return reduction_hom(A, make_zmod(pick(divisors)));
    }
    return identity_hom(A);
  }

  /// A random ideal with |I| <= cap (the zero ideal always qualifies).
  Ideal small_ideal(const std::vector<Ideal>& L, std::size_t cap, bool proper) {
    std::vector<Ideal> ok;
    for (const auto& I : L)
      if (I.size() <= cap && (!proper || I.is_proper())) ok.push_back(I);
    std::vector<Ideal> nonzero;
    for (const auto& I : ok)
      if (!I.is_zero()) nonzero.push_back(I);
    if (!nonzero.empty() && chance(0.8)) return pick(nonzero);
    return pick(ok);
  }

  Ideal proper_ideal(const std::vector<Ideal>& L) {
    std::vector<Ideal> proper;
    for (const auto& I : L)
      if (I.is_proper()) proper.push_back(I);
    return pick(proper);
  }

  /// Closure of at most two random generators; with probability `unit_bias`
  /// the generators are units.
  MultiplicativeSet mult_set(const RingPtr& R, double unit_bias = 0.25) {
    const auto count = below(3);
    const bool units = chance(unit_bias);
    const auto pool = units ? R->units().elements() : R->all().elements();
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(pick(pool));
    return make_mult_set(R, gens);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static std::size_t pow_size(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
  }

  std::mt19937_64 rng_;
  Profile profile_;
};

inline int pick_depth(Generator& g) {
  const auto roll = g.below(4);
  return std::min<int>(g.profile().max_depth, roll == 0 ? 0 : (roll == 3 ? 2 : 1));
}

/// A deterministic pseudo-random instance: a ring from base rings and at most
/// `max_depth` constructions, plus a multiplicative set from <= 2 generators.
inline Instance random_instance(std::uint64_t seed, const Profile& profile) {
  Generator g(seed, profile);
  Instance inst;
  inst.seed = seed;
  inst.ring = g.ring(profile.max_order, pick_depth(g), inst.trace, inst.shape);
  auto S = g.mult_set(inst.ring);
  inst.s_generators = S.generators();
  inst.S = std::move(S);
  return inst;
}

// ---------------------------------------------------------------------------
// Property registry

struct CaseResult {
  bool hit = false;
  bool antecedent = false;
  std::vector<std::string> parts;
  std::vector<std::string> flags;
  std::optional<std::string> violation;
  std::string instance;
};

using PropertyFn = std::function<CaseResult(Generator&)>;

struct PropertySpec {
  std::string id;
  std::string statement;
  bool claimed = true;      // a stated result, not a converse probe
  bool conditional = false;  // has standing hypotheses beyond the ring itself
  bool fixed = false;        // a single scripted instance
  PropertyFn fn;
};

namespace detail {

inline bool sb(const std::vector<Ideal>& L, const MultiplicativeSet& S) { return is_S_bezout(L, S).holds(); }
inline bool sb(const RingPtr& R, const MultiplicativeSet& S) { return is_S_bezout(R, S).holds(); }
inline bool bez(const std::vector<Ideal>& L) { return is_bezout(L).holds(); }

inline std::string yn(bool b) { return b ? "true" : "false"; }

inline void fail(CaseResult& c, std::string why) {
  if (!c.violation) c.violation = std::move(why);
}

inline CaseResult instance_case(Generator& g, Instance& inst) {
  inst.ring = g.ring(g.profile().max_order, pick_depth(g), inst.trace, inst.shape);
  auto S = g.mult_set(inst.ring);
  inst.s_generators = S.generators();
  inst.S = std::move(S);
  CaseResult c;
  c.instance = inst.describe();
  if (inst.S->contains_zero()) c.flags.push_back("degenerate S");
  return c;
}

/// I^{ce} = I for every ideal I of the target.
inline bool contraction_extends_back(const RingHom& f) {
  for (const auto& J : all_ideals(f.target()))
    if (!(extend(contract(J, f), f) == J)) return false;
  return true;
}

/// IB ∩ A = I for every ideal I of the source.
inline bool extension_contracts_back(const RingHom& f) {
  for (const auto& I : all_ideals(f.source()))
    if (!(contract(extend(I, f), f) == I)) return false;
  return true;
}

struct HomCase {
  std::optional<RingHom> f;
  std::string kind;
};

/// Homs of the shapes that occur in the constructions.
inline HomCase random_hom(Generator& g, bool injective_only) {
  Trace trace;
  std::string shape;
  const std::size_t budget = g.profile().max_order;
  const std::vector<std::string> surjective{"quotient", "proj1", "trivext-projection", "dup-projection",
                                            "localization", "reduction"};
  const std::vector<std::string> injective{"trivext-inclusion", "diagonal", "dup-inclusion", "canonical",
                                           "identity"};
  std::vector<std::string> kinds = injective;
  if (!injective_only) kinds.insert(kinds.end(), surjective.begin(), surjective.end());
  const auto kind = g.pick(kinds);
  HomCase out{std::nullopt, kind};
  if (kind == "quotient") {
    auto A = g.ring(budget, 1, trace, shape);
    out.f = quotient_ring(A, g.proper_ideal(all_ideals(A))).projection;
  } else if (kind == "proj1") {
    auto A1 = g.ring(budget / 2, 1, trace, shape);
    auto A2 = g.ring(budget / A1->order(), 1, trace, shape);
    out.f = product(A1, A2).proj1();
  } else if (kind == "trivext-projection" || kind == "trivext-inclusion") {
    auto A = g.ring(budget / 2, 1, trace, shape);
    auto E = g.module_over(A, budget / A->order(), trace);
    if (!E) E = make_free_module(A, 1);
    auto T = trivial_extension(A, E);
    out.f = kind == "trivext-projection" ? T.projection() : T.inclusion();
  } else if (kind == "dup-projection" || kind == "dup-inclusion") {
    auto A = g.ring(budget / 2, 1, trace, shape);
    auto D = duplication(A, g.small_ideal(all_ideals(A), budget / A->order(), true));
    out.f = kind == "dup-projection" ? D.projection() : D.inclusion();
  } else if (kind == "localization") {
    auto A = g.ring(budget, 1, trace, shape);
    auto L = localize(A, g.mult_set(A));
    if (L.degenerate || L.ring->order() < 2) return random_hom(g, injective_only);
    out.f = *L.hom;
  } else if (kind == "reduction") {
    const auto n = g.between(2, static_cast<long long>(budget));
    std::vector<long long> divisors;
    for (long long m = 2; m <= n; ++m)
      if (n % m == 0) divisors.push_back(m);
    out.f = reduction_hom(make_zmod(n), make_zmod(g.pick(divisors)));
  } else if (kind == "diagonal") {
    auto A = g.ring(8, 1, trace, shape);
    out.f = diagonal_hom(product(A, A));
  } else if (kind == "canonical") {
    auto R = g.ring(budget, 1, trace, shape);
    Elem acc = R->one();
    long long n = 1;
    while (acc != R->zero()) {
      acc = R->add(acc, R->one());
      ++n;
    }
    out.f = canonical_hom(make_zmod(n), R);
  } else {
    out.f = identity_hom(g.ring(budget, 1, trace, shape));
  }
  return out;
}

inline std::string hom_label(const HomCase& h) {
  return h.kind + ": " + h.f->source()->description() + " -> " + h.f->target()->description();
}

// P1
inline CaseResult two_generated(Generator& g) {
  Instance inst;
  auto c = instance_case(g, inst);
  c.hit = true;
  const auto L = all_ideals(inst.ring);
  const auto all = is_S_bezout(L, *inst.S, BezoutMode::all_ideals);
  const auto two = is_S_bezout(L, *inst.S, BezoutMode::two_generated);
  c.antecedent = all.holds();
  if (all.holds() != two.holds())
    fail(c, "all-ideals mode " + yn(all.holds()) + ", two-generated mode " + yn(two.holds()));
  if (all.witness)
    for (const auto& w : *all.witness)
      if (!check_s_principal(w.ideal, w.witness)) fail(c, "witness does not replay");
  return c;
}

// P2
inline CaseResult s_finite(Generator& g) {
  Instance inst;
  auto c = instance_case(g, inst);
  c.hit = true;
  const auto L = all_ideals(inst.ring);
  const bool bezout = sb(L, *inst.S);
  c.antecedent = bezout;
  bool every_s_finite_principal = true;
  for (const auto& I : L) {
    const bool principal = is_S_principal(I, *inst.S).holds();
    for (std::size_t k = 0; k <= I.generators.size(); ++k)
      if (is_S_finite(I, *inst.S, k).holds() && !principal) every_s_finite_principal = false;
  }
  if (bezout != every_s_finite_principal)
    fail(c, "S-Bezout " + yn(bezout) + " but every S-finite ideal S-principal " + yn(every_s_finite_principal));
  return c;
}

// P3 and P4
inline CaseResult localization(Generator& g, bool equivalence) {
  Instance inst;
  auto c = instance_case(g, inst);
  c.hit = true;
  const bool bezout = sb(inst.ring, *inst.S);
  c.antecedent = bezout;
  const auto Loc = localize(inst.ring, *inst.S);
  bool loc_bezout = true;
  if (Loc.degenerate)
    c.flags.push_back("degenerate localization");
  else
    loc_bezout = is_bezout(Loc.ring).holds();
  if (bezout && !loc_bezout) fail(c, "S-Bezout but the localization is not Bezout");
  if (equivalence && !bezout && loc_bezout) fail(c, "localization Bezout but R not S-Bezout");
  return c;
}

// P5
inline CaseResult units_case(Generator& g) {
  Instance inst;
  inst.ring = g.ring(g.profile().max_order, pick_depth(g), inst.trace, inst.shape);
  auto S = g.mult_set(inst.ring, 0.6);
  inst.s_generators = S.generators();
  inst.S = std::move(S);
  CaseResult c;
  c.instance = inst.describe();
  c.hit = inst.S->all_units();
  if (!c.hit) return c;
  const auto L = all_ideals(inst.ring);
  const bool s_bezout = sb(L, *inst.S), bezout = bez(L);
  c.antecedent = s_bezout;
  if (s_bezout != bezout) fail(c, "S inside the units but S-Bezout " + yn(s_bezout) + ", Bezout " + yn(bezout));
  const auto Loc = localize(inst.ring, *inst.S);
  if (Loc.ring->order() != inst.ring->order()) fail(c, "localization at units changed the ring");
  if (is_bezout(Loc.ring).holds() != s_bezout) fail(c, "localization Bezout differs from S-Bezout");
  return c;
}

// P6
inline CaseResult pir(Generator& g) {
  Instance inst;
  auto c = instance_case(g, inst);
  c.hit = true;
  const auto L = all_ideals(inst.ring);
  const bool bezout = bez(L);
  c.antecedent = bezout;
  bool all_principal = true;
  for (const auto& I : L) all_principal = all_principal && is_principal(I).holds();
  const bool pir = is_S_pir(L, make_mult_set(inst.ring, {})).holds();
  if (bezout && !(all_principal && pir)) fail(c, "Bezout but some ideal is not principal");
  return c;
}

// P7
inline CaseResult semilocal(Generator& g) {
  Instance inst;
  auto c = instance_case(g, inst);
  c.hit = true;
  const auto L = all_ideals(inst.ring);
  const bool bezout = bez(L);
  c.antecedent = bezout;
  bool all_primes = true, all_maximal = true;
  for (const auto& P : primes(L)) all_primes = all_primes && is_P_bezout(L, P).holds();
  for (const auto& M : maximal_ideals(L)) all_maximal = all_maximal && is_P_bezout(L, M).holds();
  if (bezout != all_primes || bezout != all_maximal)
    fail(c, "Bezout " + yn(bezout) + ", P-Bezout for all primes " + yn(all_primes) + ", M-Bezout for all maximals " +
                yn(all_maximal));
  return c;
}

// P8 and its unconditional converse probe
inline CaseResult quotient_case(Generator& g, bool probe) {
  Instance inst;
  auto c = instance_case(g, inst);
  const auto& R = inst.ring;
  const auto& S = *inst.S;
  const auto L = all_ideals(R);
  Ideal I = g.proper_ideal(L);
  if (g.chance(0.5)) {
    // Bias toward ideals killed by some s0 ∈ S.
    const auto s = g.pick(S.elements().elements());
    const auto ann = annihilator(R, ElementSet::of(R->order(), std::vector<Elem>{s}));
    std::vector<Ideal> inside;
    for (const auto& J : L)
      if (J.is_proper() && J.subset_of(ann)) inside.push_back(J);
    if (!inside.empty()) I = g.pick(inside);
  }
  c.instance += " | I = " + format_set(*R, I.elements);
  const auto Q = quotient_ring(R, I);
  const auto SI = image_mult_set(Q.projection, S);
  const bool upstairs = sb(L, S), downstairs = sb(Q.ring, SI);
  const bool killed = S.elements().any_of([&](Elem s0) {
    return I.elements.all_of([&](Elem i) { return R->mul(s0, i) == R->zero(); });
  });
  if (probe) {
    c.hit = !killed;
    c.antecedent = downstairs;
    if (c.hit && downstairs && !upstairs) fail(c, "R/I is (S+I)-Bezout but R is not S-Bezout");
    return c;
  }
  c.hit = true;
  c.antecedent = upstairs;
  if (killed) c.parts.push_back("converse (s0 I = 0)");
  if (upstairs && !downstairs) fail(c, "R S-Bezout but R/I not (S+I)-Bezout");
  if (killed && downstairs && !upstairs) fail(c, "s0 I = 0 and R/I (S+I)-Bezout but R not S-Bezout");
  return c;
}

// P9 and its probe without the I^{ce} = I hypothesis
inline CaseResult hom_case(Generator& g, bool probe) {
  const auto h = random_hom(g, false);
  const auto& f = *h.f;
  const auto S = g.mult_set(f.source());
  CaseResult c;
  c.instance = hom_label(h) + " | S = " + describe_set(S);
  const bool hyp = contraction_extends_back(f);
  c.hit = probe ? !hyp : hyp;
  if (!c.hit) return c;
  const bool source = sb(f.source(), S);
  c.antecedent = source;
  if (source && !sb(f.target(), image_mult_set(f, S)))
    fail(c, "A S-Bezout but B not f(S)-Bezout");
  return c;
}

// P10
inline CaseResult product_case(Generator& g) {
  Trace trace;
  std::string s1, s2;
  const auto budget = g.profile().max_order;
  auto R1 = g.ring(budget / 2, 1, trace, s1);
  auto R2 = g.ring(budget / R1->order(), 1, trace, s2);
  auto S1 = g.mult_set(R1), S2 = g.mult_set(R2);
  auto P = product(R1, R2);
  const auto S = P.mult_set(S1, S2);
  CaseResult c;
  c.instance = P.ring->description() + " | S1 = " + describe_set(S1) + " | S2 = " + describe_set(S2);
  c.hit = true;
  const auto L1 = all_ideals(R1), L2 = all_ideals(R2), L = all_ideals(P.ring);
  const bool whole = sb(L, S), parts = sb(L1, S1) && sb(L2, S2);
  c.antecedent = parts;
  if (whole != parts) fail(c, "product S-Bezout " + yn(whole) + ", factors " + yn(parts));
  if (L.size() != L1.size() * L2.size()) fail(c, "product lattice is not the product of the factor lattices");
  return c;
}

// P11
inline CaseResult subring_case(Generator& g) {
  const auto h = random_hom(g, true);
  const auto& f = *h.f;
  const auto S = g.mult_set(f.source());
  CaseResult c;
  c.instance = hom_label(h) + " | S = " + describe_set(S);
  if (!f.is_injective()) {
    fail(c, "generated hom is not injective");
    return c;
  }
  c.hit = extension_contracts_back(f);
  if (!c.hit) return c;
  const bool over = sb(f.target(), image_mult_set(f, S));
  c.antecedent = over;
  if (over && !sb(f.source(), S)) fail(c, "B S-Bezout but the subring A is not");
  return c;
}

struct TrivextCase {
  std::optional<TrivialExtension> T;
  std::optional<MultiplicativeSet> S0;
  std::string instance;
};

inline TrivextCase trivext_instance(Generator& g) {
  Trace trace;
  std::string shape;
  const auto budget = g.profile().max_order;
  auto A = g.ring(budget / 2, 1, trace, shape);
  auto E = g.module_over(A, budget / A->order(), trace);
  if (!E) E = make_free_module(A, 1);
  TrivextCase out;
  out.T = trivial_extension(A, E);
  out.S0 = g.mult_set(A);
  out.instance = out.T->ring->description() + " | S0 = " + describe_set(*out.S0);
  return out;
}

// P12 and its probe without homogeneity
inline CaseResult trivext_case(Generator& g, bool probe) {
  auto tc = trivext_instance(g);
  const auto& T = *tc.T;
  const auto& S0 = *tc.S0;
  const auto S = T.lift_full(S0);
  CaseResult c;
  c.instance = tc.instance;
  const auto LT = all_ideals(T.ring);
  bool homogeneous = true;
  for (const auto& Lid : LT) homogeneous = homogeneous && is_homogeneous(T, Lid).homogeneous;
  const bool top = sb(LT, S), base = sb(T.base, S0);
  bool cyclic = true;
  for (const auto& F : all_submodules(T.module)) {
    const bool f_cyclic = is_S_cyclic(F, S0).holds();
    cyclic = cyclic && f_cyclic;
    if (!probe && f_cyclic != is_S_principal(T.zero_times(F), S).holds())
      fail(c, "F S-cyclic " + yn(f_cyclic) + " disagrees with 0 x F being S-principal");
  }
  if (probe) {
    c.hit = !homogeneous;
    c.antecedent = base && cyclic;
    if (c.hit && base && cyclic && !top) fail(c, "A S0-Bezout and every F S0-cyclic but R not S-Bezout");
    return c;
  }
  c.hit = true;
  c.antecedent = top;
  if (top && !(base && cyclic)) fail(c, "R S-Bezout but base " + yn(base) + ", submodules cyclic " + yn(cyclic));
  if (homogeneous) {
    c.parts.push_back("converse (all ideals homogeneous)");
    if (base && cyclic && !top) fail(c, "all ideals homogeneous, A S0-Bezout, F S0-cyclic, R not S-Bezout");
  }
  return c;
}

// P13
inline CaseResult local_trivext_case(Generator& g) {
  Trace trace;
  std::string shape;
  const auto budget = g.profile().max_order;
  auto A = g.local_ring(budget / 2, trace, shape);
  const auto LA = all_ideals(A);
  const auto M = maximal_ideals(LA).front();
  auto Q = quotient_ring(A, M);
  // E = (A/M)^r viewed over A, so ME = 0.
  std::size_t r = 1, size = Q.ring->order();
  while (r < 3 && A->order() * size * Q.ring->order() <= budget && g.chance(0.5)) {
    ++r;
    size *= Q.ring->order();
  }
  auto E = restrict_scalars(make_free_module(Q.ring, r), Q.projection);
  auto T = trivial_extension(A, E);
  std::vector<Elem> gens;
  if (g.chance(0.85) && M.size() > 1) {
    auto inside = M.elements.elements();
    gens.push_back(g.pick(inside));
  }
  if (g.chance(0.5)) gens.push_back(static_cast<Elem>(g.below(A->order())));
  const auto S0 = make_mult_set(A, gens);
  const auto S = T.lift_full(S0);
  CaseResult c;
  c.instance = T.ring->description() + " | S0 = " + describe_set(S0);
  const bool top = sb(T.ring, S), base = sb(LA, S0);
  c.antecedent = top;
  if (top && !base) fail(c, "R S-Bezout but A not S0-Bezout");
  c.hit = !S0.all_units();
  if (!c.hit) return c;
  if (S0.contains_zero()) c.flags.push_back("degenerate S0");
  if (top != base) fail(c, "local A with ME = 0: R S-Bezout " + yn(top) + ", A S0-Bezout " + yn(base));
  return c;
}

struct AmalgCase {
  std::optional<Amalgamation> G;
  std::optional<MultiplicativeSet> S0;
  std::string instance;
  bool meets = false;      // f(S0) ∩ J nonempty
  bool annihilator = false;  // J = ann(f(S0))
};

inline AmalgCase amalg_instance(Generator& g) {
  Trace trace;
  std::string shape;
  const auto budget = g.profile().max_order;
  auto A = g.ring(budget / 2, 1, trace, shape);
  auto f = g.chance(0.3) ? identity_hom(A) : g.hom_out_of(A, trace);
  const auto& B = f.target();
  const auto LB = all_ideals(B);
  AmalgCase out;
  const auto roll = g.below(3);
  auto S0 = g.mult_set(A);
  std::optional<Ideal> J;
  if (roll == 0) {
    const auto ann = annihilator(B, f.image(S0.elements()));
    if (ann.is_proper() && A->order() * ann.size() <= budget) J = ann;
  }
  if (!J) J = g.small_ideal(LB, budget / A->order(), false);
  if (roll == 1) {
    // Put an element of f^{-1}(J) into S0.
    const auto pre = f.preimage(J->elements).elements();
    auto gens = S0.generators();
    gens.push_back(g.pick(pre));
    S0 = make_mult_set(A, gens);
  }
  out.G = amalgamation(A, B, f, *J);
  out.meets = f.image(S0.elements()).any_of([&](Elem b) { return J->contains(b); });
  out.annihilator = annihilator(B, f.image(S0.elements())) == *J;
  out.S0 = std::move(S0);
  out.instance = out.G->ring->description() + " | J = " + format_set(*B, J->elements) + " | S0 = " + describe_set(*out.S0);
  return out;
}

// P14 and the probe with S0 ⋈ 0 in part (2)
inline CaseResult amalg_case(Generator& g, bool probe) {
  auto ac = amalg_instance(g);
  const auto& G = *ac.G;
  const auto& S0 = *ac.S0;
  CaseResult c;
  c.instance = ac.instance;
  const auto LR = all_ideals(G.ring);
  const bool base = sb(G.A, S0);
  const bool full = sb(LR, G.lift_full(S0));
  if (probe) {
    c.hit = ac.meets;
    c.antecedent = base;
    if (c.hit && base && !sb(LR, G.lift_zero(S0))) fail(c, "f(S0) meets J, A S0-Bezout, R not (S0 x 0)-Bezout");
    return c;
  }
  c.hit = true;
  c.antecedent = full;
  if (full && !base) fail(c, "R S'-Bezout but A not S0-Bezout");
  if (ac.meets) {
    c.parts.push_back("part 2 (f(S0) meets J)");
    if (full != base) fail(c, "f(S0) meets J: R S'-Bezout " + yn(full) + ", A S0-Bezout " + yn(base));
  } else if (ac.annihilator) {
    bool homogeneous = true;
    for (const auto& L : LR)
      if (L.is_proper()) homogeneous = homogeneous && G.is_homogeneous(L);
    if (homogeneous) {
      c.parts.push_back("part 3 (J = ann f(S0), homogeneous)");
      const bool zero = sb(LR, G.lift_zero(S0));
      if (zero != base || full != base)
        fail(c, "part 3: R (S0 x 0)-Bezout " + yn(zero) + ", R S'-Bezout " + yn(full) + ", A S0-Bezout " + yn(base));
    }
  }
  return c;
}

inline RingPtr phi_candidate(Generator& g, std::string& shape) {
  Trace trace;
  if (g.chance(0.75)) return g.local_ring(g.profile().max_order, trace, shape);
  return g.ring(g.profile().max_order, pick_depth(g), trace, shape);
}

// P15
inline CaseResult nonnil_case(Generator& g) {
  std::string shape;
  auto R = phi_candidate(g, shape);
  const auto S = g.mult_set(R);
  CaseResult c;
  c.instance = R->description() + " | S = " + describe_set(S);
  c.hit = is_phi_ring(R);
  if (!c.hit) return c;
  const auto L = all_ideals(R);
  const auto nil = nilradical(R);
  for (const auto& P : primes(L))
    if (!nil.subset_of(P)) fail(c, "nilradical outside a prime");
  for (const auto& I : L)
    if (!I.subset_of(nil) && !nil.subset_of(I)) fail(c, "nonnil ideal not containing Nil(R)");
  const bool direct = is_nonnil_S_bezout(L, S).holds();
  const bool quotient = quotient_by_nil_check(R, S).holds();
  c.antecedent = direct;
  if (direct != quotient) fail(c, "nonnil S-Bezout " + yn(direct) + ", R/Nil check " + yn(quotient));
  return c;
}

// P16
inline CaseResult phi_case(Generator& g) {
  std::string shape;
  auto R = phi_candidate(g, shape);
  const auto S = g.mult_set(R);
  CaseResult c;
  c.instance = R->description() + " | S = " + describe_set(S);
  c.hit = is_phi_ring(R);
  if (!c.hit) return c;
  const auto img = phi_image(R);
  const bool here = is_nonnil_S_bezout(R, S).holds();
  const bool there = is_nonnil_S_bezout(img.ring, image_mult_set(img.hom, S)).holds();
  c.antecedent = here;
  if (here != there) fail(c, "nonnil S-Bezout " + yn(here) + " but phi image " + yn(there));
  return c;
}

// P17
inline CaseResult chained_case(Generator& g) {
  std::string shape;
  auto R = phi_candidate(g, shape);
  CaseResult c;
  c.instance = R->description();
  c.hit = is_phi_ring(R);
  if (!c.hit) return c;
  const auto L = all_ideals(R);
  bool one = true, two = true, three = true;
  for (const auto& P : primes(L)) {
    one = one && is_nonnil_S_bezout(L, prime_complement(P)).holds();
    two = two && is_nonnil_chained(localize_at_prime(R, P).ring);
  }
  for (const auto& M : maximal_ideals(L)) three = three && is_nonnil_chained(localize_at_prime(R, M).ring);
  c.antecedent = one;
  if (one != two || two != three)
    fail(c, "nonnil P-Bezout " + yn(one) + ", R_P nonnil chained " + yn(two) + ", R_M nonnil chained " + yn(three));
  return c;
}

struct ZExtCase {
  std::optional<ZExtRing> Z;
  ZExtIdeal J;
  std::string instance;
};

inline ZExtCase zext_instance(Generator& g, long long q) {
  const std::size_t max_rank = q == 2 ? 4 : (q == 3 ? 3 : 2);
  const auto k = 1 + g.below(max_rank);
  ZExtCase out;
  out.Z.emplace(make_free_module(make_zmod(q), k));
  const auto& M = *out.Z->module();
  const auto n = 1 + g.below(3);
  const bool module_only = g.chance(0.3);
  for (std::size_t i = 0; i < n; ++i) {
    const long long a = module_only || g.chance(0.25) ? 0 : g.between(-12, 12);
    out.J.generators.push_back({a, static_cast<Elem>(g.below(M.order()))});
  }
  out.instance = "zext (Z/" + std::to_string(q) + ")^" + std::to_string(k) + " | J = <";
  for (std::size_t i = 0; i < n; ++i) out.instance += (i ? ", " : "") + out.Z->format(out.J.generators[i]);
  out.instance += ">";
  return out;
}

// P18: with b the exponent of M, (b,0)J ⊆ R(d,e) ⊆ J for every (d,e) ∈ J
// whose ring part generates the first projection.
inline CaseResult zext_case(Generator& g) {
  const long long q = 2 + static_cast<long long>(g.below(3));
  auto zc = zext_instance(g, q);
  const auto& Z = *zc.Z;
  CaseResult c;
  c.instance = zc.instance + " | b = " + std::to_string(q);
  c.hit = true;
  const ZExtPowerSet S{q, 3};
  const auto rep = zx_is_S_principal(Z, zc.J, S);
  c.antecedent = rep.holds();
  if (!rep.holds()) fail(c, "no witness found");
  if (rep.witness && !zx_check_witness(Z, zc.J, *rep.witness)) fail(c, "witness does not replay");
  const auto d = zx_first_projection(zc.J);
  const ZExtElement s{q, Z.module()->zero()};
  if (d == 0) {
    c.parts.push_back("I = 0");
    if (!zx_check_witness(Z, zc.J, {1, s, {0, Z.module()->zero()}})) fail(c, "(b,0) with (0,0) fails for I = 0");
  } else {
    c.parts.push_back("I != 0");
    for (const auto& a : zx_fiber(Z, zc.J, d))
      if (!zx_check_witness(Z, zc.J, {1, s, a})) fail(c, "(b,0) with " + Z.format(a) + " fails");
  }
  return c;
}

// Probe: bases that need not annihilate M.
inline CaseResult zext_base_probe(Generator& g) {
  const long long q = 2 + static_cast<long long>(g.below(3));
  const long long b = 2 + static_cast<long long>(g.below(3));
  auto zc = zext_instance(g, q);
  CaseResult c;
  c.instance = zc.instance + " | b = " + std::to_string(b);
  c.hit = true;
  const auto rep = zx_is_S_principal(*zc.Z, zc.J, {b, 4});
  c.antecedent = rep.holds();
  if (rep.verdict == Verdict::no) fail(c, "exhaustively not S-principal for this base");
  if (rep.verdict == Verdict::not_found) c.flags.push_back("not found within bounds");
  return c;
}

/// Z/4 × (F2 ∝ F2^2) with S = closure{(1,0)}.
struct ProductExample {
  std::optional<ProductRing> P;
  std::optional<TrivialExtension> T;
  std::optional<MultiplicativeSet> S;
};

inline ProductExample product_example() {
  ProductExample ex;
  auto F2 = make_zmod(2);
  ex.T = trivial_extension(F2, make_free_module(F2, 2));
  ex.P = product(make_zmod(4), ex.T->ring);
  ex.S = make_mult_set(ex.P->ring, {ex.P->pair(1, ex.T->ring->zero())});
  return ex;
}

// P19
inline CaseResult product_example_case(Generator&) {
  auto ex = product_example();
  const auto& P = *ex.P;
  CaseResult c;
  c.instance = P.ring->description() + " | S = closure {(1,0)}";
  c.hit = true;
  const auto L = all_ideals(P.ring);
  if (L.size() != 18) fail(c, "expected 18 ideals, found " + std::to_string(L.size()));
  const auto all = is_S_bezout(L, *ex.S, BezoutMode::all_ideals);
  const auto two = is_S_bezout(L, *ex.S, BezoutMode::two_generated);
  c.antecedent = all.holds();
  if (!all.holds() || !two.holds()) fail(c, "expected S-Bezout in both modes");
  const Elem s10 = P.pair(1, ex.T->ring->zero());
  if (all.witness)
    for (const auto& w : *all.witness) {
      if (!check_s_principal(w.ideal, w.witness)) fail(c, "witness does not replay");
      const auto [a1, a2] = P.split(w.witness.a);
      const auto I1 = P.proj1().image(w.ideal.elements);
      if (w.witness.s != s10 || a2 != ex.T->ring->zero() || !(P.left->multiples(a1) == I1))
        fail(c, "witness is not of the form ((1,0), (a1,0))");
    }
  const auto b = is_bezout(L);
  const Submodule whole{ex.T->module, ElementSet::full(ex.T->module->order()), {}};
  const auto expected = P.ideal(zero_ideal(P.left), ex.T->zero_times(whole));
  if (b.holds()) fail(c, "expected not Bezout");
  if (b.counterexample && !(*b.counterexample == expected)) fail(c, "Bezout counterexample is not 0 x (0 x E)");
  return c;
}

}  // namespace detail

inline const std::vector<PropertySpec>& registry() {
  using namespace detail;
  static const std::vector<PropertySpec> specs{
      {"P1", "S-Bezout over all ideals agrees with S-Bezout over 2-generated ideals", true, false, false,
       two_generated},
      {"P2", "S-Bezout iff every S-finite ideal is S-principal", true, false, false, s_finite},
      {"P3", "S-Bezout implies the localization at S is Bezout", true, false, false,
       [](Generator& g) { return localization(g, false); }},
      {"P4", "on finite rings, S-Bezout iff the localization at S is Bezout", true, false, false,
       [](Generator& g) { return localization(g, true); }},
      {"P5", "for S inside the units, S-Bezout iff Bezout", true, true, false, units_case},
      {"P6", "a finite Bezout ring has every ideal principal", true, false, false, pir},
      {"P7", "Bezout iff P-Bezout for every prime iff M-Bezout for every maximal ideal", true, false, false,
       semilocal},
      {"P8", "S-Bezout passes to R/I with S+I; back when some s0 in S kills I", true, false, false,
       [](Generator& g) { return quotient_case(g, false); }},
      {"P9", "S-Bezout transfers along f when every ideal of the target satisfies I^ce = I", true, true, false,
       [](Generator& g) { return hom_case(g, false); }},
      {"P10", "a product is (S1 x S2)-Bezout iff each factor is Si-Bezout", true, false, false, product_case},
      {"P11", "S-Bezout descends to a subring A with IB n A = I for all I", true, true, false, subring_case},
      {"P12", "A x E: S0 x E-Bezout gives S0-Bezout base and S0-cyclic submodules; converse when homogeneous",
       true, false, false, [](Generator& g) { return trivext_case(g, false); }},
      {"P13", "A x E over local A with ME = 0 and S0 not in the units: S-Bezout iff A S0-Bezout", true, true, false,
       local_trivext_case},
      {"P14", "amalgamation transfer, parts 1 to 3", true, false, false,
       [](Generator& g) { return amalg_case(g, false); }},
      {"P15", "phi-ring: nonnil S-Bezout iff R/Nil(R) is an S'-Bezout domain", true, true, false, nonnil_case},
      {"P16", "phi-ring: nonnil S-Bezout iff phi(R) is nonnil phi(S)-Bezout", true, true, false, phi_case},
      {"P17", "phi-ring: nonnil P-Bezout for all P iff R_P nonnil chained for all P iff R_M for all M", true, true,
       false, chained_case},
      {"P18", "Z x M with b the exponent of M: (b,0)J lies in R(d,e) inside J", true, false, false, zext_case},
      {"P19", "Z/4 x (F2 x F2^2) is closure{(1,0)}-Bezout and not Bezout", true, false, true, product_example_case},
      {"C8", "probe: R/I (S+I)-Bezout implies R S-Bezout without s0 I = 0", false, true, false,
       [](Generator& g) { return quotient_case(g, true); }},
      {"C9", "probe: transfer along f without I^ce = I", false, true, false,
       [](Generator& g) { return hom_case(g, true); }},
      {"C12", "probe: A x E converse without homogeneity", false, true, false,
       [](Generator& g) { return trivext_case(g, true); }},
      {"C14", "probe: amalgamation part 2 with S0 x 0 in place of S0 x J", false, true, false,
       [](Generator& g) { return amalg_case(g, true); }},
      {"C18", "probe: Z x M with a base b that need not kill M", false, false, false, zext_base_probe},
  };
  return specs;
}

inline const PropertySpec& find_property(const std::string& id) {
  for (const auto& p : registry())
    if (p.id == id) return p;
  throw invalid_argument("unknown property id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Running

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// The seed of attempt `n` of property `id` in a suite seeded with `seed`.
inline std::uint64_t case_seed(std::uint64_t seed, const std::string& id, std::uint64_t n) {
  return splitmix64(splitmix64(seed ^ fnv1a(id)) + n);
}

/// One case, reproducible from its seed.
inline CaseResult run_case(const PropertySpec& spec, std::uint64_t seed, const Profile& profile) {
  Generator g(seed, profile);
  try {
    return spec.fn(g);
  } catch (const error& e) {
    CaseResult c;
    c.hit = true;
    c.violation = std::string("error: ") + e.what();
    return c;
  }
}

inline CaseResult run_property(const std::string& id, std::uint64_t seed, const Profile& profile) {
  return run_case(find_property(id), seed, profile);
}

struct Violation {
  std::uint64_t seed = 0;
  std::string instance;
  std::string detail;
};

struct PropertyVerdict {
  std::string id;
  std::string statement;
  bool claimed = true;
  bool conditional = false;
  std::size_t attempts = 0;
  std::size_t hits = 0;
  std::size_t antecedents = 0;
  std::map<std::string, std::size_t> parts;
  std::map<std::string, std::size_t> flags;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few, for replay
  std::chrono::nanoseconds elapsed{0};

  double hit_rate() const { return attempts ? static_cast<double>(hits) / static_cast<double>(attempts) : 0.0; }
};

inline constexpr std::size_t kKeptViolations = 5;

inline PropertyVerdict empty_verdict(const PropertySpec& spec) {
  PropertyVerdict v;
  v.id = spec.id;
  v.statement = spec.statement;
  v.claimed = spec.claimed;
  v.conditional = spec.conditional;
  return v;
}

inline void record(PropertyVerdict& v, const CaseResult& c, std::uint64_t seed) {
  ++v.attempts;
  if (!c.hit) return;
  ++v.hits;
  if (c.antecedent) ++v.antecedents;
  for (const auto& p : c.parts) ++v.parts[p];
  for (const auto& f : c.flags) ++v.flags[f];
  if (c.violation) {
    ++v.violation_count;
    if (v.violations.size() < kKeptViolations) v.violations.push_back({seed, c.instance, *c.violation});
  }
}

/// Runs attempts until `target_hits` cases meet the hypotheses or the
/// attempt cap is reached.  Scripted properties run once.
inline PropertyVerdict run_property_suite(const PropertySpec& spec, const Profile& profile, std::uint64_t seed,
                                          std::optional<std::size_t> target = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  auto v = empty_verdict(spec);
  const std::size_t want = spec.fixed ? 1 : target.value_or(profile.target_hits);
  for (std::uint64_t n = 0; v.hits < want && v.attempts < profile.max_attempts; ++n) {
    const auto s = case_seed(seed, spec.id, n);
    record(v, run_case(spec, s, profile), s);
  }
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

/// Mines `budget` cases for violations.
inline PropertyVerdict counterexample_search(const std::string& id, std::size_t budget, std::uint64_t seed,
                                             const Profile& profile) {
  const auto& spec = find_property(id);
  const auto start = std::chrono::steady_clock::now();
  auto v = empty_verdict(spec);
  const std::size_t runs = spec.fixed ? 1 : budget;
  for (std::uint64_t n = 0; n < runs; ++n) {
    const auto s = case_seed(seed, spec.id, n);
    record(v, run_case(spec, s, profile), s);
  }
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

struct SuiteReport {
  Profile profile;
  std::uint64_t seed = 0;
  std::vector<PropertyVerdict> properties;
  std::chrono::nanoseconds elapsed{0};

  /// Violations of claimed properties; probes never count.
  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& p : properties)
      if (p.claimed) n += p.violation_count;
    return n;
  }
};

inline SuiteReport run_suite(const Profile& profile, std::uint64_t seed, bool probes = true) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r{profile, seed, {}, {}};
  for (const auto& spec : registry())
    if (spec.claimed || probes) r.properties.push_back(run_property_suite(spec, profile, seed));
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline double elapsed_ms(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

inline nlohmann::json to_json(const PropertyVerdict& v, bool timing) {
  nlohmann::json j;
  j["id"] = v.id;
  j["statement"] = v.statement;
  j["claimed"] = v.claimed;
  j["conditional"] = v.conditional;
  j["attempts"] = v.attempts;
  j["hypothesis_hits"] = v.hits;
  j["hit_rate"] = std::round(v.hit_rate() * 1e4) / 1e4;
  j["antecedent_hits"] = v.antecedents;
  j["parts"] = v.parts;
  j["flags"] = v.flags;
  j["violation_count"] = v.violation_count;
  auto vs = nlohmann::json::array();
  for (const auto& x : v.violations)
    vs.push_back({{"seed", x.seed}, {"instance", x.instance}, {"detail", x.detail}});
  j["violations"] = vs;
  if (!v.claimed) j["note"] = "converse probe: not a stated result; counterexamples are findings, not failures";
  if (timing) j["elapsed_ms"] = elapsed_ms(v.elapsed);
  return j;
}

inline nlohmann::json to_json(const SuiteReport& r, bool timing) {
  nlohmann::json j;
  j["generator_version"] = kGeneratorVersion;
  j["seed"] = r.seed;
  j["profile"] = {{"name", r.profile.name},
                  {"max_order", r.profile.max_order},
                  {"target_hits", r.profile.target_hits},
                  {"max_attempts", r.profile.max_attempts},
                  {"max_depth", r.profile.max_depth}};
  auto props = nlohmann::json::array();
  for (const auto& p : r.properties) props.push_back(to_json(p, timing));
  j["properties"] = props;
  j["violations"] = r.violations();
  if (timing) j["elapsed_ms"] = elapsed_ms(r.elapsed);
  return j;
}

}  // namespace ringlab::harness
