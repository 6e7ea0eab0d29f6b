#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ohg/battery.hpp"

using namespace ohg;

TEST(Ensembles, StructuralInstancesAreConnectedAndDeterministic) {
  auto a = battery::structural_ensemble(200, 1), b = battery::structural_ensemble(200, 1);
  ASSERT_EQ(a.size(), 200u);
  std::set<battery::Family> families;
  std::size_t balanced = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].instance, b[i].instance);
    EXPECT_TRUE(oracle::connected(a[i].instance.structure()));
    families.insert(a[i].family);
    balanced += oracle::balanced_by_definition(a[i].instance);
  }
  EXPECT_EQ(families.size(), 3u);
  EXPECT_GT(balanced, 20u);
  EXPECT_LT(balanced, 180u);
}

TEST(Ensembles, EvenUniformInstances) {
  auto s = battery::even_uniform_ensemble(100, 2);
  ASSERT_EQ(s.size(), 100u);
  std::size_t graphs = 0;
  for (const auto& x : s) {
    auto k = x.instance.structure().uniformity();
    ASSERT_TRUE(k);
    EXPECT_EQ(*k % 2, 0u);
    graphs += *k == 2;
    EXPECT_TRUE(oracle::connected(x.instance.structure()));
  }
  EXPECT_EQ(graphs, 50u);
}

TEST(Ensembles, SwitchedPositiveFamilyIsBalanced) {
  for (const auto& x : battery::structural_ensemble(60, 3))
    if (x.family == battery::Family::switched_positive) {
      EXPECT_TRUE(oracle::balanced_by_definition(x.instance));
    }
}

TEST(OrientationSweep, CoversEveryOrientation) {
  auto h = build(4, {{1, 2, 3}, {2, 3, 4}, {1, 4}}).structure();
  auto all = battery::orientation_sweep(h);
  ASSERT_EQ(all.size(), 256u);
  std::set<std::string> distinct;
  std::size_t balanced = 0;
  for (const auto& g : all) {
    std::string key;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (Sign s : g.orientations(e)) key += s == Sign::positive ? '+' : '-';
    distinct.insert(key);
    const bool b = oracle::balanced_by_definition(g);
    balanced += b;
    EXPECT_EQ(is_balanced(incidence_balance(g)), b);
  }
  EXPECT_EQ(distinct.size(), 256u);
  // orbit of the all-positive orientation: 2^(n+m) switchings, and switching everything is the identity
  EXPECT_EQ(balanced, 64u);
}

TEST(Checks, CleanRun) {
  auto s = battery::run(60, 40, 7);
  EXPECT_TRUE(s.clean());
  EXPECT_EQ(s.structural_instances, 60u);
  EXPECT_EQ(s.tensor_instances, 40u);
}

TEST(Checks, EveryFaultIsCaught) {
  for (auto f : {OracleFault::cycle_signs, OracleFault::spectral_target, OracleFault::parity_rhs})
    EXPECT_FALSE(battery::run(60, 40, 7, f).clean());
}

TEST(Checks, IdentitiesOnEnsemble) {
  for (const auto& x : battery::structural_ensemble(100, 5)) {
    auto c = battery::check_structural(x.instance);
    EXPECT_TRUE(c.passed()) << x.seed;
  }
}
