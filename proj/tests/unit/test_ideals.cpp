#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;

namespace {

std::vector<RingPtr> small_rings() {
  std::vector<RingPtr> out{make_zmod(2),  make_zmod(6),  make_zmod(8), make_zmod(12), make_zmod(16),
                           make_gf(2, 2), make_gf(3, 2), make_poly_quotient(2, {0, 0, 1}),
                           make_poly_quotient(2, {1, 0, 1}), make_poly_quotient(2, {0, 0, 0, 1})};
  harness::Profile p;
  p.max_order = 16;
  for (std::uint64_t s = 1; s <= 40; ++s) out.push_back(harness::random_instance(s, p).ring);
  return out;
}

}  // namespace

TEST(Ideals, ZmodCountIsDivisorCount) {
  for (long long n = 2; n <= 60; ++n) EXPECT_EQ(all_ideals(make_zmod(n)).size(), oracle::divisor_count(n)) << n;
}

TEST(Ideals, LatticeMatchesSubsetScan) {
  for (const auto& R : small_rings()) {
    ASSERT_LE(R->order(), 16u);
    std::set<std::uint32_t> got;
    for (const auto& I : all_ideals(R)) got.insert(oracle::mask_of(I.elements));
    EXPECT_EQ(got, oracle::ideals(*R)) << R->description();
  }
}

TEST(Ideals, GeneratorsGenerate) {
  for (const auto& R : small_rings())
    for (const auto& I : all_ideals(R)) EXPECT_EQ(ideal_generated_by(R, I.generators).elements, I.elements);
}

TEST(Ideals, CanonicalOrder) {
  for (const auto& R : small_rings()) {
    const auto L = all_ideals(R);
    EXPECT_TRUE(L.front().is_zero());
    EXPECT_EQ(L.back().size(), R->order());
    for (std::size_t i = 1; i < L.size(); ++i) EXPECT_TRUE(canonical_less(L[i - 1].elements, L[i].elements));
  }
}

TEST(Ideals, PrincipalMatchesOracle) {
  for (const auto& R : small_rings())
    for (const auto& I : all_ideals(R)) {
      bool expect = false;
      for (Elem a = 0; a < R->order() && !expect; ++a) {
        std::uint32_t Ra = 0;
        for (Elem r : oracle::multiples(*R, a)) Ra |= 1u << r;
        expect = Ra == oracle::mask_of(I.elements);
      }
      const auto rep = is_principal(I);
      EXPECT_EQ(rep.holds(), expect);
      if (rep.witness) {
        EXPECT_EQ(R->multiples(rep.witness->generator), I.elements);
      }
    }
}

TEST(Ideals, PrimeAndMaximalInZmod) {
  auto R = make_zmod(30);
  const auto L = all_ideals(R);
  std::vector<std::size_t> prime_index;
  for (const auto& I : L) {
    if (!I.is_proper()) continue;
    const Elem g = I.generators.empty() ? 0 : static_cast<Elem>(30 / I.size());
    const bool p = g == 2 || g == 3 || g == 5;
    EXPECT_EQ(is_prime(I), p);
    EXPECT_EQ(is_maximal(I, L), p);
  }
  auto Z = make_zmod(9);
  for (const auto& I : all_ideals(Z)) EXPECT_EQ(is_prime(I), I.size() == 3);
}

TEST(Ideals, CombineAndAnnihilator) {
  auto R = make_zmod(12);
  auto I = ideal_generated_by(R, {4}), J = ideal_generated_by(R, {6});
  EXPECT_EQ(combine(I, J, Combine::sum).elements, ideal_generated_by(R, {2}).elements);
  EXPECT_EQ(combine(I, J, Combine::product).elements, ideal_generated_by(R, {0}).elements);
  EXPECT_EQ(combine(I, J, Combine::intersection).elements, ideal_generated_by(R, {0}).elements);
  EXPECT_EQ(annihilator(R, ElementSet::of(12, std::vector<Elem>{4})).elements, ideal_generated_by(R, {3}).elements);
  EXPECT_THROW(combine(I, ideal_generated_by(make_zmod(12), {1}), Combine::sum), ring_mismatch);
}

TEST(Ideals, ExtendContract) {
  auto Z12 = make_zmod(12), Z4 = make_zmod(4);
  auto f = reduction_hom(Z12, Z4);
  auto I = ideal_generated_by(Z12, {3});
  EXPECT_EQ(extend(I, f).size(), 4u);
  auto J = ideal_generated_by(Z4, {2});
  EXPECT_EQ(contract(J, f).elements, ideal_generated_by(Z12, {2}).elements);
}

TEST(Ideals, RejectsNonIdealSet) {
  auto R = make_zmod(6);
  EXPECT_THROW(ideal_from_set(R, ElementSet::of(6, std::vector<Elem>{0, 1})), invalid_argument);
}
