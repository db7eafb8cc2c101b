#include <gtest/gtest.h>

#include "elliptica/casebook.hpp"
#include "elliptica/error.hpp"
#include "elliptica/serialize.hpp"

using namespace elliptica;

TEST(Casebook, ExceptionalLists) {
  ExceptionalLists got = exceptional_lists();
  ExceptionalLists want = expected_exceptional_lists();
  EXPECT_EQ(got.sector8, want.sector8);
  EXPECT_EQ(got.sector10, want.sector10);
  EXPECT_EQ(got.sector12, want.sector12);
  EXPECT_EQ(want.sector8.size() + want.sector10.size() + want.sector12.size(), 6u);
  EXPECT_EQ(to_json(got).dump(), to_json(exceptional_lists(3)).dump());
}

TEST(Casebook, ExamplesLedger) {
  ExampleLedger l = worked_examples();
  EXPECT_TRUE(l.all_pass());
  for (const auto& e : l.entries) EXPECT_TRUE(e.pass) << e.name << ": " << e.detail;
  EXPECT_GE(l.entries.size(), 6u);
}

TEST(Casebook, SweepSmall) {
  SweepReport r = sweep_halperin(4, 10, 1);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.results.size(), 4u);
  EXPECT_EQ(r.total_samples(), 40);
  EXPECT_EQ(r.sampling_failure_count(), 0);
  EXPECT_NE(r.header.find("do not verify"), std::string::npos);
}

TEST(Casebook, SweepDeterministicAcrossJobs) {
  SweepOptions one, four;
  one.check_invariants = four.check_invariants = true;
  four.jobs = 4;
  SweepReport a = sweep_halperin(8, 3, 9, one);
  SweepReport b = sweep_halperin(8, 3, 9, four);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_TRUE(a.invariants_hold());
}

TEST(Casebook, SweepSeedsDiffer) {
  DegreeType dt = make_degree_type({2, 2}, {4, 4});
  EXPECT_NE(sample_seed(1, dt, 0), sample_seed(1, dt, 1));
  EXPECT_NE(sample_seed(1, dt, 0), sample_seed(2, dt, 0));
  EXPECT_EQ(sample_seed(1, dt, 0), sample_seed(1, dt, 0));
}

TEST(Casebook, SweepPreconditions) {
  EXPECT_THROW(sweep_halperin(22, 1, 0), Error);
  EXPECT_THROW(sweep_halperin(4, 0, 0), Error);
}

TEST(Casebook, SamplingFailuresAreReported) {
  SweepReport r = sweep_types({make_degree_type({2, 4}, {4, 10})}, 2, 0);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].samples, 0);
  EXPECT_EQ(r.results[0].sampling_failures.size(), 2u);
  EXPECT_TRUE(r.all_pass());
}

TEST(Serialize, HalperinSchema) {
  auto ctx = GradedContext::make({2, 4, 6});
  auto x = [&](int i) { return Polynomial::variable(ctx, i); };
  Presentation p(ctx, {pow(x(0), 3) + x(2), x(1) * x(1) + pow(x(0), 4), x(2) * x(2)});
  json j = to_json(halperin_check(p));
  ASSERT_TRUE(j.contains("degrees"));
  EXPECT_TRUE(j["degrees"].contains("-2"));
  EXPECT_TRUE(j["degrees"]["-2"].contains("lift_dim"));
  EXPECT_TRUE(j["degrees"]["-2"].contains("trivial_dim"));
  EXPECT_TRUE(j["degrees"]["-2"].contains("induced_dim"));
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Serialize, CatalogSchema) {
  json c = catalog(enumerate_degree_types(4));
  ASSERT_EQ(c.size(), 3u);
  for (const auto& e : c) {
    for (const char* key : {"A", "B", "fd", "sac", "verdict", "citations"}) EXPECT_TRUE(e.contains(key)) << key;
    EXPECT_EQ(e["fd"], 4);
    EXPECT_EQ(e["sac"], true);
  }
  EXPECT_EQ(c[2]["A"], json::array({2, 2}));
}
