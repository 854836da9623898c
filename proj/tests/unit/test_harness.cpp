#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ringlab;
using namespace ringlab::harness;

TEST(Harness, RegistryIds) {
  std::set<std::string> ids;
  for (const auto& p : registry()) {
    EXPECT_TRUE(ids.insert(p.id).second) << p.id;
    EXPECT_EQ(p.claimed, p.id[0] == 'P');
  }
  for (int i = 1; i <= 19; ++i) EXPECT_TRUE(ids.count("P" + std::to_string(i)));
  EXPECT_THROW(find_property("P99"), invalid_argument);
}

TEST(Harness, SeedsAreStable) {
  EXPECT_EQ(case_seed(7, "P1", 0), case_seed(7, "P1", 0));
  EXPECT_NE(case_seed(7, "P1", 0), case_seed(7, "P1", 1));
  EXPECT_NE(case_seed(7, "P1", 0), case_seed(7, "P2", 0));
  EXPECT_NE(case_seed(7, "P1", 0), case_seed(8, "P1", 0));
  EXPECT_EQ(fnv1a(""), 14695981039346656037ull);
}

TEST(Harness, InstancesAreDeterministic) {
  Profile p;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto a = random_instance(s, p), b = random_instance(s, p);
    EXPECT_EQ(a.describe(), b.describe());
    EXPECT_EQ(a.ring->order(), b.ring->order());
    EXPECT_LE(a.ring->order(), p.max_order);
  }
}

TEST(Harness, PropertyRunsAreDeterministic) {
  const auto p = profile_named("quick");
  for (const auto& spec : registry()) {
    const auto a = to_json(run_property_suite(spec, p, 7), false);
    const auto b = to_json(run_property_suite(spec, p, 7), false);
    EXPECT_EQ(a.dump(), b.dump()) << spec.id;
  }
}

TEST(Harness, QuickSuiteHasNoViolations) {
  const auto r = run_suite(profile_named("quick"), 11);
  EXPECT_EQ(r.violations(), 0u);
  for (const auto& p : r.properties) {
    if (p.claimed) {
      EXPECT_GT(p.hits, 0u) << p.id;
    }
  }
}

TEST(Harness, ScriptedProductExample) {
  const auto c = run_property("P19", 1, profile_named("default"));
  EXPECT_TRUE(c.hit);
  EXPECT_FALSE(c.violation) << *c.violation;
}

TEST(Harness, ProbeFindsHomogeneityMatters) {
  const auto v = counterexample_search("C12", 300, 7, profile_named("default"));
  EXPECT_FALSE(v.claimed);
  EXPECT_GT(v.violation_count, 0u);
}

TEST(Harness, JsonShape) {
  const auto j = to_json(run_suite(profile_named("quick"), 7, false), false);
  EXPECT_EQ(j["generator_version"], kGeneratorVersion);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  for (const auto& p : j["properties"]) {
    EXPECT_TRUE(p["claimed"].get<bool>());
    EXPECT_FALSE(p.contains("elapsed_ms"));
  }
}

TEST(Harness, UnknownProfile) { EXPECT_THROW(profile_named("huge"), invalid_argument); }
