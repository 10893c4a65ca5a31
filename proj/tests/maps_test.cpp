#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tpolar;
using tpolar::testing::kKapranov;
using tpolar::testing::P;
using tpolar::testing::proportional;

namespace {

bool coordinates_proportional(const RationalMapSpec& phi, const std::vector<Polynomial>& expected) {
  const auto& c = phi.coordinates();
  if (c.size() != expected.size()) return false;
  // One common scalar: compare after scaling by the first nonzero ratio.
  std::size_t pivot = 0;
  while (pivot < c.size() && c[pivot].is_zero()) ++pivot;
  if (pivot == c.size() || expected[pivot].is_zero()) return false;
  const auto& F = c[pivot].field();
  const Residue s = F.div(expected[pivot].leading_term(MonomialOrder::grevlex()).c,
                          c[pivot].leading_term(MonomialOrder::grevlex()).c);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] * s == expected[i])) return false;
  return true;
}

}  // namespace

TEST(ToricPolarMap, LinearFormIsIdentity) {
  auto phi = toric_polar_map(P("x0 + x1 + x2"));
  EXPECT_TRUE(coordinates_proportional(phi, {P("x0"), P("x1"), P("x2")}));
  EXPECT_EQ(phi.degree(), 1);
}

TEST(ToricPolarMap, CremonaConic) {
  auto phi = toric_polar_map(P("x0*x1 + x0*x2 + x1*x2"));
  EXPECT_TRUE(coordinates_proportional(phi, {P("x0*x1 + x0*x2"), P("x0*x1 + x1*x2"), P("x0*x2 + x1*x2")}));
}

TEST(ToricPolarMap, NonGeneralConic) {
  auto phi = toric_polar_map(P("x0^2 - x1*x2"));
  EXPECT_TRUE(coordinates_proportional(phi, {P("2*x0^2"), P("-x1*x2"), P("-x1*x2")}));
}

TEST(ToricPolarMap, Preconditions) {
  EXPECT_THROW(toric_polar_map(P("x0*x1 + x0*x2")), PreconditionError);
  EXPECT_THROW(toric_polar_map(P("x0^2 + x1")), PreconditionError);
  EXPECT_THROW(toric_polar_map(P("5")), PreconditionError);
  EXPECT_THROW(toric_polar_map(P("0")), PreconditionError);
}

TEST(GradientMap, Examples) {
  EXPECT_TRUE(coordinates_proportional(gradient_map(P("x0^2 + x1^2 + x2^2")), {P("x0"), P("x1"), P("x2")}));
  EXPECT_TRUE(coordinates_proportional(gradient_map(P("x0^2 - x1*x2")), {P("2*x0"), P("-x2"), P("-x1")}));
  EXPECT_TRUE(coordinates_proportional(gradient_map(P("x0*x1*x2")), {P("x1*x2"), P("x0*x2"), P("x0*x1")}));
  EXPECT_THROW(gradient_map(P("x0 + x1")), PreconditionError);
}

TEST(RationalMapSpec, GcdIsRemoved) {
  auto phi = RationalMapSpec::from_coordinates({P("x0*x2"), P("x1*x2"), P("x2^2")});
  EXPECT_EQ(phi.degree(), 1);
  EXPECT_TRUE(coordinates_proportional(phi, {P("x0"), P("x1"), P("x2")}));
  EXPECT_THROW(RationalMapSpec::from_coordinates({P("x0"), P("x1^2"), P("x2")}), PreconditionError);
  EXPECT_THROW(RationalMapSpec::from_coordinates({P("0"), P("0"), P("0")}), PreconditionError);
}

TEST(Multidegrees, KapranovCubic) {
  auto d = multidegrees(toric_polar_map(P(kKapranov)));
  EXPECT_EQ(d.values, (std::vector<std::int64_t>{1, 3, 2}));
  EXPECT_EQ(topological_degree(toric_polar_map(P(kKapranov))), 2);
}

TEST(Multidegrees, DolgachevConic) {
  EXPECT_EQ(multidegrees(toric_polar_map(P("x1^2 + x0*x1 + x0*x2"))).values, (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(Multidegrees, NonDominantConic) {
  auto d = multidegrees(toric_polar_map(P("x0^2 - x1*x2")));
  EXPECT_EQ(d.values, (std::vector<std::int64_t>{1, 2, 0}));
  EXPECT_FALSE(d.is_dominant());
  // d_1 = 2 again under an independent seed.
  RandomizationConfig cfg;
  cfg.seed = 9001;
  EXPECT_EQ(multidegrees(toric_polar_map(P("x0^2 - x1*x2")), cfg).values[1], 2);
}

TEST(Multidegrees, IdentityMap) {
  EXPECT_EQ(topological_degree(toric_polar_map(P("x0 + x1 + x2 + x3", 4))), 1);
}

TEST(Multidegrees, StandardCremonaIsInvolutive) {
  EXPECT_EQ(multidegrees(gradient_map(P("x0*x1*x2"))).values, (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(Multidegrees, InvariantUnderPrime) {
  RandomizationConfig small;
  small.prime = 32003;
  Polynomial f32003 = P(kKapranov, 3, PrimeField(32003));
  EXPECT_EQ(multidegrees(toric_polar_map(f32003), small), multidegrees(toric_polar_map(P(kKapranov))));
}

TEST(Multidegrees, PrimeMismatchIsRejected) {
  RandomizationConfig cfg;
  cfg.prime = 32003;
  EXPECT_THROW(multidegrees(toric_polar_map(P(kKapranov)), cfg), PreconditionError);
  cfg.prime = 32004;
  EXPECT_THROW(multidegrees(toric_polar_map(P(kKapranov)), cfg), PreconditionError);
  RandomizationConfig zero;
  zero.trials = 0;
  EXPECT_THROW(multidegrees(toric_polar_map(P(kKapranov)), zero), PreconditionError);
}

TEST(Multidegrees, ParallelMatchesSequential) {
  RandomizationConfig par;
  par.parallel = true;
  auto phi = toric_polar_map(P("x1^2 + x0*x1 + x0*x2 + x0*x3", 4));
  EXPECT_EQ(multidegrees(phi, par), multidegrees(phi));
}

TEST(MultidegreeVector, InternalZeros) {
  EXPECT_TRUE((MultidegreeVector{{1, 2, 1}}).has_no_internal_zeros());
  EXPECT_FALSE((MultidegreeVector{{1, 0, 1}}).has_no_internal_zeros());
  EXPECT_TRUE((MultidegreeVector{{1, 2, 0}}).has_no_internal_zeros());
  EXPECT_EQ((MultidegreeVector{{1, 3, 2}}).to_string(), "(1,3,2)");
}

TEST(RandomTranslate, PreservesDegreeAndHomogeneity) {
  Polynomial f = P(kKapranov);
  for (std::uint64_t s : {1u, 2u, 3u}) {
    Polynomial g = random_translate(f, s);
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.total_degree(), 3);
  }
  EXPECT_EQ(random_translate(f, 5), random_translate(f, 5));
}

TEST(RandomTranslate, IdentityMatrixLeavesPolynomial) {
  PrimeField F;
  Matrix id(3, std::vector<Residue>(3, 0));
  for (std::size_t i = 0; i < 3; ++i) id[i][i] = 1;
  EXPECT_EQ(linear_substitution(P(kKapranov), id), P(kKapranov));
}

TEST(RandomTranslate, SmoothConicHasDegreeFour) {
  EXPECT_EQ(topological_degree(toric_polar_map(random_translate(P("x0^2 + x1^2 + x2^2"), 17))), 4);
}

TEST(MonomialPullback, PermutationMatrix) {
  MonomialMatrix swap({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(monomial_pullback(P("x0^2 + 3*x1*x2"), swap), P("x1^2 + 3*x0*x2"));
}

TEST(MonomialPullback, QuadraticPattern) {
  MonomialMatrix a({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  EXPECT_EQ(monomial_pullback(P("x0 + x1 + x2"), a), P("x0^2 + x0*x1 + x0*x2"));
}

TEST(MonomialPullback, DegreeIsPreserved) {
  Polynomial f = P(kKapranov);
  Rng rng(3);
  for (int i = 0; i < 3; ++i) {
    MonomialMatrix a = random_invertible_monomial_matrix(2, 2, rng);
    Polynomial g = strip_monomial_factor(monomial_pullback(f, a));
    EXPECT_EQ(topological_degree(toric_polar_map(g)), 2);
  }
}

TEST(MonomialMatrixTest, Validation) {
  EXPECT_THROW(MonomialMatrix({{1, 0}, {1, 1}}), PreconditionError);
  EXPECT_THROW(MonomialMatrix({{1, 0, 0}, {0, 1}}), PreconditionError);
  EXPECT_THROW(MonomialMatrix({{-1, 2}, {1, 0}}), PreconditionError);
  MonomialMatrix cremona({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(cremona.determinant(), 2);
  EXPECT_TRUE(cremona.is_invertible());
  EXPECT_FALSE(cremona.has_common_factor());
  MonomialMatrix common({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  EXPECT_TRUE(common.has_common_factor());
  MonomialMatrix singular({{1, 1, 0}, {1, 1, 0}, {0, 1, 1}});
  EXPECT_FALSE(singular.is_invertible());
}
