#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;

namespace {

struct Case {
  RingPtr R;
  MultiplicativeSet S;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  harness::Profile p;
  p.max_order = 16;
  for (std::uint64_t s = 1; s <= 60; ++s) {
    auto inst = harness::random_instance(s, p);
    out.push_back({inst.ring, *inst.S});
  }
  auto Z12 = make_zmod(12);
  out.push_back({Z12, make_mult_set(Z12, {2})});
  out.push_back({Z12, make_mult_set(Z12, {3})});
  out.push_back({Z12, make_mult_set(Z12, {1})});
  return out;
}

std::vector<Elem> members(const MultiplicativeSet& S) { return S.elements().elements(); }

}  // namespace

TEST(MultSet, ClosureMatchesOracle) {
  auto R = make_zmod(20);
  for (std::vector<Elem> gens : {std::vector<Elem>{2}, {3, 4}, {}, {5}, {10, 3}}) {
    auto S = make_mult_set(R, gens);
    auto expect = oracle::closure(*R, gens);
    EXPECT_EQ(members(S), std::vector<Elem>(expect.begin(), expect.end()));
  }
  EXPECT_FALSE(make_mult_set(R, {5}).contains_zero());
  EXPECT_TRUE(make_mult_set(R, {10}).contains_zero());
  EXPECT_TRUE(make_mult_set(R, {2, 5}).contains_zero());
  EXPECT_TRUE(make_mult_set(R, {3, 7}).all_units());
}

TEST(SPrincipal, MatchesOracleAndWitnessReplays) {
  for (const auto& c : cases()) {
    const auto S = members(c.S);
    for (const auto& I : all_ideals(c.R)) {
      const auto rep = is_S_principal(I, c.S);
      EXPECT_EQ(rep.holds(), oracle::s_principal(*c.R, oracle::mask_of(I.elements), S)) << c.R->description();
      if (rep.witness) {
        const auto& R = *c.R;
        const auto Ra = R.multiples(rep.witness->a);
        EXPECT_TRUE(c.S.contains(rep.witness->s));
        EXPECT_TRUE(Ra.subset_of(I.elements));
        I.elements.for_each([&](Elem x) { EXPECT_TRUE(Ra.contains(R.mul(rep.witness->s, x))); });
      } else {
        EXPECT_EQ(rep.exhaustion, c.S.size() * I.size());
      }
    }
  }
}

TEST(SPrincipal, ZeroInSMakesEverythingSPrincipal) {
  auto R = make_zmod(12);
  auto S = make_mult_set(R, {2, 3});
  ASSERT_TRUE(S.contains_zero());
  const auto r = is_S_bezout(R, S);
  EXPECT_TRUE(r.holds());
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), std::string(kDegenerateFlag)), r.flags.end());
}

TEST(SBezout, MatchesOracle) {
  for (const auto& c : cases()) {
    bool expect = true;
    for (auto mask : oracle::ideals(*c.R)) expect = expect && oracle::s_principal(*c.R, mask, members(c.S));
    EXPECT_EQ(is_S_bezout(c.R, c.S).holds(), expect) << c.R->description();
  }
}

TEST(SBezout, TrivialSIsBezout) {
  for (const auto& c : cases()) {
    auto one = make_mult_set(c.R, {c.R->one()});
    EXPECT_EQ(is_S_bezout(c.R, one).holds(), is_bezout(c.R).holds());
  }
}

TEST(SBezout, CounterexampleIsNotSPrincipal) {
  auto F = make_zmod(2);
  auto T = trivial_extension(F, make_free_module(F, 2));
  const auto r = is_bezout(T.ring);
  ASSERT_FALSE(r.holds());
  ASSERT_TRUE(r.counterexample);
  EXPECT_FALSE(is_principal(*r.counterexample).holds());
  EXPECT_EQ(r.counterexample->size(), 4u);
}

TEST(SBezout, ProductExample) {
  auto F = make_zmod(2);
  auto T = trivial_extension(F, make_free_module(F, 2));
  auto P = product(make_zmod(4), T.ring);
  auto S = make_mult_set(P.ring, {P.pair(1, T.pair(0, 0))});
  EXPECT_EQ(P.ring->order(), 32u);
  EXPECT_EQ(all_ideals(P.ring).size(), 18u);
  EXPECT_TRUE(is_S_bezout(P.ring, S).holds());
  EXPECT_TRUE(is_S_bezout(P.ring, S, BezoutMode::two_generated).holds());
  const auto b = is_bezout(P.ring);
  EXPECT_FALSE(b.holds());
  // 0 × (0 ∝ E)
  std::set<Elem> expect;
  for (Elem m = 0; m < 4; ++m) expect.insert(P.pair(0, T.pair(0, m)));
  const auto got = b.counterexample->elements.elements();
  EXPECT_EQ(std::set<Elem>(got.begin(), got.end()), expect);
}

TEST(SFinite, AgreesWithSPrincipalAtOne) {
  for (const auto& c : cases())
    for (const auto& I : all_ideals(c.R)) {
      EXPECT_EQ(is_S_finite(I, c.S, 1).holds(), is_S_principal(I, c.S).holds());
      EXPECT_TRUE(is_S_finite(I, c.S, std::max<std::size_t>(I.generators.size(), 1)).holds());
    }
}

TEST(SPir, UnitSetMeansPir) {
  for (long long n : {4, 6, 12, 30}) {
    auto R = make_zmod(n);
    EXPECT_TRUE(is_S_pir(R, units_mult_set(R)).holds());
  }
  auto F = make_zmod(2);
  auto T = trivial_extension(F, make_free_module(F, 2));
  EXPECT_FALSE(is_S_pir(T.ring, units_mult_set(T.ring)).holds());
}

TEST(PBezout, PrimeComplement) {
  auto R = make_zmod(12);
  auto P = ideal_generated_by(R, {2});
  auto S = prime_complement(P);
  for (Elem x = 0; x < 12; ++x) EXPECT_EQ(S.contains(x), x % 2 == 1);
  EXPECT_TRUE(is_P_bezout(R, P).holds());
  EXPECT_THROW(prime_complement(ideal_generated_by(R, {4})), invalid_argument);
}

TEST(SBezout, RingMismatch) {
  auto A = make_zmod(6), B = make_zmod(6);
  EXPECT_THROW(is_S_bezout(A, make_mult_set(B, {5})), ring_mismatch);
  EXPECT_THROW(is_S_principal(unit_ideal(A), make_mult_set(B, {5})), ring_mismatch);
}
