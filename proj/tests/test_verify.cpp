#include "support.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

const SuiteReport& default_report() {
  static const SuiteReport r = run_invariant_suite();
  return r;
}

}  // namespace

TEST(Verify, DefaultSuitePasses) {
  const auto& r = default_report();
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
}

TEST(Verify, CoversEveryProperty) {
  const auto& r = default_report();
  for (const char* name :
       {"gf.tables", "toricset.group_closure", "toricset.kernel_count", "toricset.polytope_bijection",
        "mpoly.gb_canonical_shuffle", "mpoly.binomial_preservation", "ideals.nonzerodivisors",
        "ideals.generators_vanish", "ideals.saturation_certification", "hilbert.degree_sum",
        "hilbert.rank_vs_gb", "hilbert.shape", "codes.distance_shape", "codes.graph_bound_q2",
        "zlat.delta_ratio", "graphs.structure_theorem", "graphs.length_formula",
        "ideals.binomial_variety"})
    EXPECT_NE(r.find(name), nullptr) << name;
}

TEST(Verify, FaultInjectionIsCaught) {
  SuiteOptions opt;
  opt.inject_gf_fault = true;
  opt.configs = {bundled_configurations().front()};
  opt.random_graphs = 5;
  const auto r = run_invariant_suite(opt);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("gf.tables"), nullptr);
  EXPECT_FALSE(r.find("gf.tables")->passed);
  EXPECT_EQ(r.find("gf.tables")->detail.rfind("FAIL", 0), 0u);
}

TEST(Verify, SameSeedSameReport) {
  SuiteOptions opt;
  opt.configs = {bundled_configurations()[0], bundled_configurations()[1]};
  opt.random_graphs = 10;
  opt.seed = 7;
  EXPECT_EQ(run_invariant_suite(opt).to_json(), run_invariant_suite(opt).to_json());
}

TEST(Verify, JsonShape) {
  const auto j = default_report().to_json();
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), default_report().checks.size());
  EXPECT_TRUE(j["checks"][0].contains("detail"));
}
