#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ohg/balance.hpp"
#include "ohg/generate.hpp"
#include "ohg/switching.hpp"

using namespace ohg;

TEST(VertexSwitch, MinimalInstanceBecomesAllPositive) {
  EXPECT_EQ(vertex_switch(fixtures::e1(), 1), all_positive_variant(fixtures::e1()));
}

TEST(VertexSwitch, Involution) {
  auto g = fixtures::ex();
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(vertex_switch(vertex_switch(g, v), v), g);
}

TEST(VertexSwitch, IsolatedVertexUnchanged) {
  auto g = build(3, {{1, -2}});
  EXPECT_EQ(vertex_switch(g, 2), g);
}

TEST(EdgeSwitch, FlipsEveryIncidence) {
  auto s = edge_switch(fixtures::e1(), 0);
  EXPECT_EQ(s.orientation(0, 0), Sign::negative);
  EXPECT_EQ(s.orientation(0, 1), Sign::positive);
}

TEST(ApplySwitches, EmptyCertificateIsIdentity) {
  auto g = fixtures::ex();
  EXPECT_EQ(apply_switches(g, {}), g);
}

TEST(ApplySwitches, AllVerticesOnMinimalInstance) {
  auto s = apply_switches(fixtures::e1(), {{0, 1}, {}});
  EXPECT_EQ(s.orientation(0, 0), Sign::negative);
  EXPECT_EQ(s.orientation(0, 1), Sign::positive);
}

TEST(ApplySwitches, OrderDoesNotMatter) {
  auto g = fixtures::ex();
  EXPECT_EQ(apply_switches(g, {{0, 3, 5}, {2, 0}}), apply_switches(g, {{5, 0, 3}, {0, 2}}));
}

TEST(ApplySwitches, RejectsUnknownIds) {
  EXPECT_THROW(apply_switches(fixtures::e1(), {{4}, {}}), Error);
  EXPECT_THROW(apply_switches(fixtures::e1(), {{}, {4}}), Error);
}

TEST(ApplySwitches, EdgeSwitchChangesSignOnlyForOddEdges) {
  auto g = build(5, {{1, 2, 3}, {3, 4}});
  auto before = induced_signed(g);
  auto after = induced_signed(apply_switches(g, {{}, {0, 1}}));
  EXPECT_EQ(after.gamma(0), -before.gamma(0));
  EXPECT_EQ(after.gamma(1), before.gamma(1));
}

TEST(ApplySwitches, VertexSwitchMatchesSignedSwitch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = fixtures::random_connected(rng);
    auto cert = random_certificate(g.structure(), rng());
    cert.edges.clear();
    EXPECT_EQ(induced_signed(apply_switches(g, cert)), apply_vertex_switches(induced_signed(g), {cert.vertices}));
  }
}

TEST(OrientedEquivalence, SelfGivesEmptyCertificate) {
  auto r = oriented_switch_equivalent(fixtures::ex(), fixtures::ex());
  ASSERT_TRUE(std::holds_alternative<SwitchCertificate>(r));
  EXPECT_TRUE(std::get<SwitchCertificate>(r).empty());
}

TEST(OrientedEquivalence, MinimalInstanceToAllPositive) {
  auto r = oriented_switch_equivalent(fixtures::e1(), all_positive_variant(fixtures::e1()));
  ASSERT_TRUE(std::holds_alternative<SwitchCertificate>(r));
  const auto& c = std::get<SwitchCertificate>(r);
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{1}));
  EXPECT_TRUE(c.edges.empty());
}

TEST(OrientedEquivalence, UnbalancedTriangleNotEquivalent) {
  auto g = fixtures::triangle_neg();
  auto r = oriented_switch_equivalent(g, all_positive_variant(g));
  ASSERT_TRUE(std::holds_alternative<OrientedNotEquivalent>(r));
  const auto& w = std::get<OrientedNotEquivalent>(r).cycle;
  EXPECT_TRUE(is_cycle(w, g));
  EXPECT_EQ(incidence_sign_of(w, g), Sign::negative);
}

TEST(OrientedEquivalence, StructureMismatchThrows) {
  try {
    oriented_switch_equivalent(fixtures::e1(), fixtures::triangle_pos());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::structure_mismatch);
  }
}

TEST(OrientedEquivalence, RecoversRandomSwitchings) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_connected(rng);
    auto h = apply_switches(g, random_certificate(g.structure(), rng()));
    auto r = oriented_switch_equivalent(h, g);
    ASSERT_TRUE(std::holds_alternative<SwitchCertificate>(r));
    const auto& c = std::get<SwitchCertificate>(r);
    EXPECT_EQ(apply_switches(g, c), h);
    EXPECT_EQ(apply_switches(h, c), g);
  }
}

TEST(OrientedEquivalence, NegativeCycleWitnessIsValid) {
  std::mt19937_64 rng(31);
  int witnessed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_connected(rng);
    auto plus = all_positive_variant(g);
    auto r = oriented_switch_equivalent(g, plus);
    if (auto* bad = std::get_if<OrientedNotEquivalent>(&r)) {
      ++witnessed;
      EXPECT_TRUE(is_cycle(bad->cycle, g));
      EXPECT_EQ(incidence_sign_of(bad->cycle, g), Sign::negative);
      EXPECT_EQ(canonical_cycle(bad->cycle), bad->cycle);
    }
  }
  EXPECT_GT(witnessed, 0);
}

TEST(SignedEquivalence, SelfGivesEmptySet) {
  auto s = induced_signed(fixtures::ex());
  auto r = signed_switch_equivalent(s, s);
  ASSERT_TRUE(std::holds_alternative<SignedSwitchCertificate>(r));
  EXPECT_TRUE(std::get<SignedSwitchCertificate>(r).vertices.empty());
}

TEST(SignedEquivalence, ExampleAgainstAllPositiveFails) {
  auto g = fixtures::ex();
  auto r = signed_switch_equivalent(induced_signed(g), induced_signed(all_positive_variant(g)));
  ASSERT_TRUE(std::holds_alternative<SignedNotEquivalent>(r));
  EXPECT_EQ(std::get<SignedNotEquivalent>(r).edges, (std::vector<EdgeId>{0, 1, 2}));
  auto sys = signed_switch_system(induced_signed(g), induced_signed(all_positive_variant(g)));
  EXPECT_TRUE(linalg::verifies(sys, {std::get<SignedNotEquivalent>(r).edges}));
}

TEST(SignedEquivalence, SingleEvenEdgeSameSign) {
  auto h = fixtures::single_edge(4).structure();
  auto r = signed_switch_equivalent(SignedHypergraph::uniform(h, Sign::negative),
                                    SignedHypergraph::uniform(h, Sign::negative));
  ASSERT_TRUE(std::holds_alternative<SignedSwitchCertificate>(r));
  EXPECT_TRUE(std::get<SignedSwitchCertificate>(r).vertices.empty());
}

TEST(SignedEquivalence, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = induced_signed(fixtures::random_connected(rng));
    std::vector<Sign> gamma(a.gammas().begin(), a.gammas().end());
    for (auto& s : gamma)
      if (rng() % 3 == 0) s = -s;
    SignedHypergraph b(a.structure(), gamma);
    auto r = signed_switch_equivalent(a, b);
    EXPECT_EQ(std::holds_alternative<SignedSwitchCertificate>(r), oracle::signed_equivalent_by_search(a, b));
    if (auto* c = std::get_if<SignedSwitchCertificate>(&r)) {
      EXPECT_EQ(apply_vertex_switches(a, *c), b);
    }
  }
}
