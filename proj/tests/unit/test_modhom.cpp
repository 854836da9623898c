#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;

TEST(Hom, ReductionKernel) {
  auto Z12 = make_zmod(12), Z4 = make_zmod(4);
  auto f = reduction_hom(Z12, Z4);
  EXPECT_EQ(f.kernel().elements(), (std::vector<Elem>{0, 4, 8}));
  EXPECT_TRUE(f.is_surjective());
  EXPECT_FALSE(f.is_injective());
  EXPECT_THROW(reduction_hom(Z4, Z12), invalid_argument);
}

TEST(Hom, MakeHomVerifies) {
  auto Z4 = make_zmod(4), Z2 = make_zmod(2);
  EXPECT_NO_THROW(make_hom(Z4, Z2, {0, 1, 0, 1}));
  EXPECT_THROW(make_hom(Z4, Z2, {0, 1, 1, 0}), axiom_violation);
  EXPECT_THROW(make_hom(Z4, Z2, {0, 0, 0, 0}), axiom_violation);  // 1 -> 0
}

TEST(Hom, ComposeAndIdentity) {
  auto Z12 = make_zmod(12), Z6 = make_zmod(6), Z3 = make_zmod(3);
  auto g = reduction_hom(Z6, Z3), f = reduction_hom(Z12, Z6);
  auto h = compose(g, f);
  for (Elem x = 0; x < 12; ++x) EXPECT_EQ(h(x), x % 3);
  auto id = identity_hom(Z12);
  for (Elem x = 0; x < 12; ++x) EXPECT_EQ(id(x), x);
  EXPECT_THROW(compose(f, g), ring_mismatch);
}

TEST(Hom, ImageAndPreimage) {
  auto Z6 = make_zmod(6), Z2 = make_zmod(2);
  auto f = reduction_hom(Z6, Z2);
  auto pre = f.preimage(ElementSet::of(2, std::vector<Elem>{1}));
  EXPECT_EQ(pre.elements(), (std::vector<Elem>{1, 3, 5}));
}

TEST(Module, FreeModuleAxiomsAndFormat) {
  auto Z3 = make_zmod(3);
  auto M = make_free_module(Z3, 2);
  EXPECT_EQ(M->order(), 9u);
  EXPECT_EQ(M->format(5), "[1,2]");
  for (Elem r = 0; r < 3; ++r)
    for (Elem m = 0; m < 9; ++m) {
      const auto a = M->act(r, m);
      EXPECT_EQ(a / 3, (r * (m / 3)) % 3);
      EXPECT_EQ(a % 3, (r * (m % 3)) % 3);
    }
}

TEST(Module, TableModuleRejectsNonModule) {
  auto Z2 = make_zmod(2);
  ModuleTables t{2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0};
  EXPECT_NO_THROW(make_module(Z2, t));
  ModuleTables bad{2, {0, 1, 1, 0}, {0, 1, 0, 1}, 0};  // 0·m != 0
  EXPECT_THROW(make_module(Z2, bad), axiom_violation);
}

TEST(Module, SubmodulesMatchBruteForce) {
  // Subgroups closed under scalars, scanned over all subsets.
  for (auto [R, k] : std::vector<std::pair<RingPtr, std::size_t>>{
           {make_zmod(2), 2}, {make_zmod(4), 1}, {make_zmod(2), 3}, {make_zmod(6), 1}, {make_zmod(4), 2}}) {
    auto M = make_free_module(R, k);
    std::size_t expect = 0;
    const auto n = M->order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      auto in = [&](Elem x) { return (mask >> x) & 1u; };
      if (!in(M->zero())) continue;
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        if (!in(x)) continue;
        for (Elem y = 0; y < n && ok; ++y)
          if (in(y) && !in(M->add(x, y))) ok = false;
        for (Elem r = 0; r < R->order() && ok; ++r)
          if (!in(M->act(r, x))) ok = false;
      }
      expect += ok;
    }
    EXPECT_EQ(all_submodules(M).size(), expect) << R->description() << " rank " << k;
  }
}

TEST(Module, RestrictionOfScalars) {
  auto Z4 = make_zmod(4), Z2 = make_zmod(2);
  auto E = make_free_module(Z2, 1);
  auto EA = restrict_scalars(E, reduction_hom(Z4, Z2));
  EXPECT_EQ(EA->ring()->id(), Z4->id());
  EXPECT_EQ(EA->act(2, 1), 0);
  EXPECT_EQ(EA->act(3, 1), 1);
  EXPECT_THROW(restrict_scalars(E, identity_hom(Z4)), ring_mismatch);
}

TEST(Module, SCyclic) {
  auto Z2 = make_zmod(2);
  auto M = make_free_module(Z2, 2);
  auto S = make_mult_set(Z2, {1});
  for (const auto& F : all_submodules(M)) EXPECT_EQ(is_S_cyclic(F, S).holds(), F.size() <= 2);
  auto S0 = make_mult_set(Z2, {0});
  for (const auto& F : all_submodules(M)) EXPECT_TRUE(is_S_cyclic(F, S0).holds());
}
