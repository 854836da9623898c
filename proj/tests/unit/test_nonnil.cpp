#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;

namespace {

std::vector<RingPtr> rings() {
  std::vector<RingPtr> out{make_zmod(6), make_zmod(8), make_zmod(9), make_zmod(12), make_gf(2, 3),
                           make_poly_quotient(2, {0, 0, 1})};
  harness::Profile p;
  for (std::uint64_t s = 1; s <= 50; ++s) out.push_back(harness::random_instance(s, p).ring);
  return out;
}

}  // namespace

TEST(Nonnil, NilradicalAndZeroDivisors) {
  for (const auto& R : rings()) {
    const auto N = nilradical(R);
    const auto Z = zero_divisors(*R);
    for (Elem x = 0; x < R->order(); ++x) {
      EXPECT_EQ(N.contains(x), oracle::nilpotent(*R, x));
      bool zd = false;
      for (Elem y = 1; y < R->order() && !zd; ++y) zd = y != R->zero() && R->mul(x, y) == R->zero();
      EXPECT_EQ(Z.contains(x), zd || x == R->zero());
    }
  }
}

TEST(Nonnil, FinitePhiRingsAreLocal) {
  for (const auto& R : rings()) EXPECT_EQ(is_phi_ring(R), oracle::local(*R)) << R->description();
}

TEST(Nonnil, Examples) {
  EXPECT_FALSE(is_phi_ring(make_zmod(6)));
  EXPECT_TRUE(is_phi_ring(make_zmod(9)));
  auto F = make_zmod(2);
  auto T = trivial_extension(F, make_free_module(F, 2));
  EXPECT_TRUE(is_phi_ring(T.ring));
  EXPECT_FALSE(is_chained(T.ring));
  EXPECT_TRUE(is_nonnil_chained(T.ring));
  EXPECT_TRUE(is_chained(make_zmod(8)));
  EXPECT_FALSE(is_chained(make_zmod(6)));
  EXPECT_THROW(phi_image(make_zmod(6)), not_phi_ring);
}

TEST(Nonnil, PhiImageOfLocalRingIsItself) {
  for (const auto& R : rings()) {
    if (!is_phi_ring(R)) continue;
    const auto im = phi_image(R);
    EXPECT_EQ(im.ring->order(), R->order());
    EXPECT_TRUE(im.hom.is_injective());
  }
}

TEST(Nonnil, NonnilSBezoutMatchesOracle) {
  harness::Profile p;
  p.max_order = 16;
  for (std::uint64_t s = 1; s <= 80; ++s) {
    auto inst = harness::random_instance(s, p);
    if (!is_phi_ring(inst.ring)) {
      EXPECT_THROW(is_nonnil_S_bezout(inst.ring, *inst.S), not_phi_ring);
      continue;
    }
    const auto& R = *inst.ring;
    const auto nil = oracle::mask_of(nilradical(inst.ring).elements);
    const auto S = inst.S->elements().elements();
    std::vector<std::uint32_t> nonnil;
    for (auto m : oracle::ideals(R))
      if ((m & ~nil) != 0) nonnil.push_back(m);
    bool expect = true;
    for (auto small : nonnil)
      for (auto big : nonnil)
        if ((small & ~big) == 0 && oracle::s_principal(R, big, S) && !oracle::s_principal(R, small, S)) expect = false;
    EXPECT_EQ(is_nonnil_S_bezout(inst.ring, *inst.S).holds(), expect);
  }
}

TEST(Nonnil, QuotientByNil) {
  auto R = make_zmod(8);
  const auto c = quotient_by_nil_check(R, make_mult_set(R, {3}));
  EXPECT_TRUE(c.domain);
  EXPECT_TRUE(c.holds());
}
