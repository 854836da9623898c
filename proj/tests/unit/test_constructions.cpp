#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;

TEST(Product, OrderProjectionsAndLattice) {
  auto A = make_zmod(4), B = make_gf(2, 2);
  auto P = product(A, B);
  EXPECT_EQ(P.ring->order(), 16u);
  EXPECT_NO_THROW(make_hom(P.ring, A, [&] {
    std::vector<Elem> m;
    for (Elem x = 0; x < 16; ++x) m.push_back(P.proj1()(x));
    return m;
  }()));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      const auto x = P.pair(a, b);
      EXPECT_EQ(P.split(x), std::make_pair(a, b));
      EXPECT_EQ(P.proj2()(x), b);
    }
  EXPECT_EQ(all_ideals(P.ring).size(), all_ideals(A).size() * all_ideals(B).size());
  EXPECT_EQ(P.ring->units().size(), A->units().size() * B->units().size());
}

TEST(Quotient, ZmodQuotients) {
  auto Z12 = make_zmod(12);
  auto Q = quotient_ring(Z12, ideal_generated_by(Z12, {4}));
  EXPECT_EQ(Q.ring->order(), 4u);
  EXPECT_EQ(Q.projection.kernel().elements(), (std::vector<Elem>{0, 4, 8}));
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(Q.representative[x], x);
  EXPECT_THROW(quotient_ring(Z12, unit_ideal(Z12)), error);
}

TEST(TrivialExtension, SquareZeroModule) {
  auto Z4 = make_zmod(4);
  auto E = make_free_module(Z4, 1);
  auto T = trivial_extension(Z4, E);
  EXPECT_EQ(T.ring->order(), 16u);
  for (Elem m = 0; m < 4; ++m)
    for (Elem k = 0; k < 4; ++k) EXPECT_EQ(T.ring->mul(T.pair(0, m), T.pair(0, k)), T.ring->zero());
  EXPECT_EQ(T.ring->mul(T.pair(3, 1), T.pair(2, 1)), T.pair(2, 1));  // (3,1)(2,1) = (6, 3+2)
}

TEST(TrivialExtension, HomogeneityNeedsElementwiseSplit) {
  // A = F2[x]/(x^3), E = A/(x); R(x, e) is not I ∝ F.
  auto A = make_poly_quotient(2, {0, 0, 0, 1});
  auto M = ideal_generated_by(A, {2});
  auto Q = quotient_ring(A, M);
  auto T = trivial_extension(A, restrict_scalars(make_free_module(Q.ring, 1), Q.projection));
  auto L = ideal_generated_by(T.ring, {T.pair(2, 1)});
  const auto d = is_homogeneous(T, L);
  EXPECT_FALSE(d.homogeneous);
  EXPECT_EQ(d.first, M.elements);
  auto H = T.homogeneous_ideal(M.elements, ElementSet::full(2));
  EXPECT_TRUE(is_homogeneous(T, H).homogeneous);
  std::size_t homogeneous = 0;
  for (const auto& I : all_ideals(T.ring)) homogeneous += is_homogeneous(T, I).homogeneous;
  EXPECT_LT(homogeneous, all_ideals(T.ring).size());
}

TEST(TrivialExtension, LiftedSets) {
  auto F = make_zmod(3);
  auto T = trivial_extension(F, make_free_module(F, 1));
  auto S0 = make_mult_set(F, {2});
  EXPECT_EQ(T.lift_zero(S0).size(), 2u);
  EXPECT_EQ(T.lift_full(S0).size(), 6u);
}

TEST(Amalgamation, DuplicationOrder) {
  auto Z4 = make_zmod(4);
  auto D = duplication(Z4, ideal_generated_by(Z4, {2}));
  EXPECT_EQ(D.ring->order(), 8u);
  for (Elem x = 0; x < D.ring->order(); ++x) {
    const auto [a, b] = D.pairs[x];
    EXPECT_EQ((b + 4 - a) % 2, 0u);
  }
}

TEST(Amalgamation, OrderIsAtimesJ) {
  auto Z4 = make_zmod(4), Z2 = make_zmod(2);
  auto f = reduction_hom(Z4, Z2);
  for (const auto& J : all_ideals(Z2)) {
    auto G = amalgamation(Z4, Z2, f, J);
    EXPECT_EQ(G.ring->order(), Z4->order() * J.size());
    EXPECT_TRUE(G.is_homogeneous(unit_ideal(G.ring)));
  }
}

TEST(Localization, Z12) {
  auto Z12 = make_zmod(12);
  auto L2 = localize(Z12, make_mult_set(Z12, {2}));
  EXPECT_FALSE(L2.degenerate);
  EXPECT_EQ(L2.ring->order(), 3u);
  EXPECT_EQ(L2.ring->units().size(), 2u);
  auto L3 = localize(Z12, make_mult_set(Z12, {3}));
  EXPECT_EQ(L3.ring->order(), 4u);
  auto L0 = localize(Z12, make_mult_set(Z12, {2, 3}));
  EXPECT_TRUE(L0.degenerate);
  auto Lu = localize(Z12, units_mult_set(Z12));
  EXPECT_EQ(Lu.ring->order(), 12u);
  ASSERT_TRUE(L2.hom);
  for (Elem s : make_mult_set(Z12, {2}).elements().elements()) EXPECT_TRUE(L2.ring->is_unit((*L2.hom)(s)));
}

TEST(Localization, UniversalOnRandomRings) {
  harness::Profile p;
  for (std::uint64_t s = 1; s <= 30; ++s) {
    auto inst = harness::random_instance(s, p);
    auto L = localize(inst.ring, *inst.S);
    if (L.degenerate) {
      EXPECT_TRUE(inst.S->contains_zero());
      continue;
    }
    inst.S->elements().for_each([&](Elem x) { EXPECT_TRUE(L.ring->is_unit((*L.hom)(x))); });
    // Kernel: x/1 = 0 iff sx = 0 for some s ∈ S.
    for (Elem x = 0; x < inst.ring->order(); ++x) {
      const bool killed = inst.S->elements().any_of([&](Elem t) { return inst.ring->mul(t, x) == inst.ring->zero(); });
      EXPECT_EQ((*L.hom)(x) == L.ring->zero(), killed);
    }
  }
}

TEST(Constructions, CanonicalHom) {
  auto F = make_gf(2, 2);
  EXPECT_NO_THROW(canonical_hom(make_zmod(2), F));
  EXPECT_NO_THROW(canonical_hom(make_zmod(12), F));
  EXPECT_THROW(canonical_hom(make_zmod(3), F), error);
  EXPECT_THROW(canonical_hom(F, make_zmod(2)), invalid_argument);
}
