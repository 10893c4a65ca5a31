#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tpolar;
using tpolar::testing::kKapranov;
using tpolar::testing::P;

TEST(FundamentalIncidence, Examples) {
  EXPECT_EQ(fundamental_incidence(P(kKapranov)), 2);
  EXPECT_EQ(fundamental_incidence(P("x0^4 + x1^4 + x2^4")), 0);
  EXPECT_EQ(fundamental_incidence(P("x0*x1 + x1*x2 + x0*x2")), 3);
  EXPECT_THROW(fundamental_incidence(P("x0*x1 + x0*x2")), PreconditionError);
  EXPECT_THROW(fundamental_incidence(P("x0 + x1", 2)), PreconditionError);
}

TEST(Tangency, Examples) {
  EXPECT_EQ(tangency_contribution(P(kKapranov)), 3);
  EXPECT_EQ(tangency_contribution(P("x0^2 + x1^2 + x2^2")), 0);
  Polynomial q2 = P("x1^2 + x0*x1 + x0*x2");
  auto counts = coordinate_line_point_counts(q2);
  // x0 = 0: x1^2 (one point); x1 = 0: x0*x2 (two); x2 = 0: x1*(x1 + x0) (two).
  EXPECT_EQ(counts, (std::array<int, 3>{1, 2, 2}));
  EXPECT_EQ(tangency_contribution(q2), 1);
}

TEST(MilnorAtPoint, NodeCuspSmooth) {
  Polynomial nodal = P("x1^2*x2 - x0^2*(x0 + x2)");
  EXPECT_EQ(milnor_at_point(nodal, {0, 0, 1}), 1);
  EXPECT_EQ(milnor_at_point(P("x1^2*x2 - x0^3"), {0, 0, 1}), 2);
  // (1 : 0 : -1) is a smooth point of the nodal cubic.
  EXPECT_EQ(nodal.evaluate(std::vector<Residue>{1, 0, nodal.field().from_int(-1)}), 0u);
  EXPECT_EQ(milnor_at_point(nodal, {1, 0, -1}), 0);
}

TEST(MilnorAtPoint, HigherSingularities) {
  // Chart x2 = 1: u*v*(u - v) + u^4 + v^4 is an ordinary triple point (D4),
  // v^2 - u^4 a tacnode (A3).
  EXPECT_EQ(milnor_at_point(P("x0*x1*(x0 - x1)*x2 + x0^4 + x1^4"), {0, 0, 1}), 4);
  EXPECT_EQ(milnor_at_point(P("x1^2*x2^2 - x0^4"), {0, 0, 1}), 3);
}

TEST(MilnorAtPoint, Errors) {
  EXPECT_THROW(milnor_at_point(P("x0^2 + x1^2 + x2^2"), {1, 0, 0}), PreconditionError);
  EXPECT_THROW(milnor_at_point(P("x0^2*x2"), {0, 1, 0}), PreconditionError);
  EXPECT_THROW(milnor_at_point(P("x0*x1 - x2^2"), {0, 0, 0}), PreconditionError);
}

TEST(TotalMilnor, Examples) {
  EXPECT_EQ(total_milnor(P(kKapranov)), 2);
  EXPECT_EQ(total_milnor(P("x0^3 + x1^3 + x2^3")), 0);
  EXPECT_EQ(total_milnor(P("x1^2*x2 - x0^2*(x0 + x2)")), 1);
  EXPECT_THROW(total_milnor(P("(x0 + x1 + x2)^2 * x0")), PreconditionError);
}

TEST(TotalMilnor, MatchesSumOverRationalSingularPoints) {
  // Three lines through general points: three nodes at the pairwise
  // intersections, all rational.
  Polynomial f = P("(x0 + x1 + x2)*(x0 + 2*x1 + 3*x2)*(x0 - x1 + 5*x2)");
  // Intersections solved by cross products of the coefficient vectors.
  std::array<std::array<std::int64_t, 3>, 3> lines = {{{1, 1, 1}, {1, 2, 3}, {1, -1, 5}}};
  std::int64_t sum = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const auto& u = lines[a];
      const auto& v = lines[b];
      std::array<std::int64_t, 3> p = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      sum += milnor_at_point(f, p);
    }
  EXPECT_EQ(sum, 3);
  EXPECT_EQ(total_milnor(f), sum);
}

TEST(PlaneDegreeFormula, Kapranov) {
  auto r = plane_degree_formula(P(kKapranov));
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.milnor_sum, 2);
  EXPECT_EQ(r.incidence, 2);
  EXPECT_EQ(r.tangency, 3);
  EXPECT_EQ(r.degree_formula, 2);
}

TEST(PlaneDegreeFormula, DolgachevConic) {
  auto r = plane_degree_formula(P("x1^2 + x0*x1 + x0*x2"));
  EXPECT_EQ(r.degree_formula, 4 - 0 - 2 - 1);
  EXPECT_EQ(r.degree_formula, topological_degree(toric_polar_map(P("x1^2 + x0*x1 + x0*x2"))));
}

TEST(PlaneDegreeFormula, SmoothConicTranslate) {
  auto r = plane_degree_formula(random_translate(P("x0^2 + x1^2 + x2^2"), 4));
  EXPECT_EQ(r.milnor_sum, 0);
  EXPECT_EQ(r.incidence, 0);
  EXPECT_EQ(r.tangency, 0);
  EXPECT_EQ(r.degree_formula, 4);
}

TEST(PlaneDegreeFormula, RejectsNonReduced) {
  EXPECT_THROW(plane_degree_formula(P("(x0 + x1 + x2)^2")), PreconditionError);
}

TEST(PlaneDegreeFormula, InvariantsOnCorpusCurves) {
  for (const auto& e : default_corpus()) {
    Polynomial f = e.parse();
    if (f.arity() != 3) continue;
    auto r = plane_degree_formula(f);
    EXPECT_LE(r.incidence, 3);
    int t = 0;
    for (int c : r.per_line) {
      EXPECT_LE(c, r.k);
      t += r.k - c;
    }
    EXPECT_EQ(t, r.tangency);
    EXPECT_GE(r.degree_formula, 0);
    EXPECT_EQ(r.degree_formula, topological_degree(toric_polar_map(f))) << e.name;
  }
}

TEST(Intersections, Examples) {
  EXPECT_EQ(distinct_intersections_off_H(P("x0 + x1 + x2"), P("x0 + 2*x1 + 3*x2")), 1);
  EXPECT_EQ(distinct_intersections_off_H(P("x0 + x1"), P("x0 - x1")), 0);
  EXPECT_THROW(distinct_intersections_off_H(P("x0 + x1"), P("x0^2 - x1^2")), PreconditionError);
}

TEST(Intersections, ConicAndLine) {
  // On x0 = -x1 - x2 the conic becomes x1^2 + x1*x2 + x2^2, discriminant -3:
  // two distinct roots, neither with x1 = 0 or x2 = 0.
  PrimeField F;
  EXPECT_NE(F.from_int(1 * 1 - 4 * 1 * 1), 0u);
  EXPECT_EQ(distinct_intersections_off_H(P("x0^2 - x1*x2"), P("x0 + x1 + x2")), 2);
}

TEST(Intersections, TangentAndThroughFundamentalPoints) {
  // On x1 = x0 the conic becomes x0*(x0 - x2): (0:0:1) lies on H, (1:1:1) does not.
  EXPECT_EQ(distinct_intersections_off_H(P("x0^2 - x1*x2"), P("x0 - x1")), 1);
  // The tangent line at (1:1:1) has normal (2, -1, -1), the gradient there.
  EXPECT_EQ(distinct_intersections_off_H(P("x0^2 - x1*x2"), P("2*x0 - x1 - x2")), 1);
}

TEST(ReducibleComposition, Examples) {
  auto lines = reducible_composition_check(P("x0 + x1 + x2"), P("x0 + 2*x1 + 3*x2"));
  EXPECT_TRUE(lines.holds());
  EXPECT_EQ(lines.degree_product, 3);
  auto conic = reducible_composition_check(P("x0^2 - x1*x2"), P("x0 + x1 + x2"));
  EXPECT_EQ(conic.degree_f, 0);
  EXPECT_EQ(conic.degree_g, 1);
  EXPECT_EQ(conic.intersections, 2);
  EXPECT_EQ(conic.degree_product, 3);
  auto cusp = reducible_composition_check(P(kKapranov), P("x0 + 2*x1 + 3*x2"));
  EXPECT_EQ(cusp.degree_f, 2);
  EXPECT_EQ(cusp.intersections, 3);
  EXPECT_EQ(cusp.degree_product, 6);
  // The same product degree from the local formula on the reducible curve.
  EXPECT_EQ(plane_degree_formula(P(kKapranov) * P("x0 + 2*x1 + 3*x2")).degree_formula, 6);
  EXPECT_EQ(plane_degree_formula(P("(x0^2 - x1*x2)*(x0 + x1 + x2)")).degree_formula, 3);
}

TEST(ReducibleComposition, TwentyRandomCorpusPairs) {
  std::vector<Polynomial> curves;
  for (const auto& e : default_corpus()) {
    Polynomial f = e.parse();
    if (f.arity() == 3 && f.total_degree() <= 3) curves.push_back(f);
  }
  ASSERT_GE(curves.size(), 5u);
  Rng rng(2024);
  int done = 0;
  while (done < 20) {
    const auto& f = curves[rng() % curves.size()];
    const auto& g = curves[rng() % curves.size()];
    if (!multivariate_gcd(f, g).is_constant()) continue;
    auto c = reducible_composition_check(f, g);
    EXPECT_TRUE(c.holds()) << f.to_string() << " | " << g.to_string();
    EXPECT_LE(c.intersections, f.total_degree() * g.total_degree());
    ++done;
  }
}
