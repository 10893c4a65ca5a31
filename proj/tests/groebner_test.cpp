#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tpolar;
using tpolar::testing::P;

namespace {

Ideal I3(std::initializer_list<const char*> gens, std::size_t arity = 3) {
  Ideal out(PrimeField{}, arity);
  for (const char* g : gens) out.add(P(g, arity));
  return out;
}

std::vector<Polynomial> basis_of(const Ideal& I) { return buchberger(I, MonomialOrder::grevlex()).elements; }

}  // namespace

TEST(Buchberger, AlreadyReduced) {
  auto gb = buchberger(I3({"x0", "x1"}), MonomialOrder::grevlex());
  ASSERT_EQ(gb.elements.size(), 2u);
  EXPECT_TRUE(is_reduced(gb));
  EXPECT_TRUE(ideal_contains(gb, P("x0*x2 + x1^2")));
}

TEST(Buchberger, GeneratorAbsorbed) {
  auto gb = buchberger(I3({"x0^2 - x1^2", "x0 - x1"}), MonomialOrder::grevlex());
  ASSERT_EQ(gb.elements.size(), 1u);
  EXPECT_EQ(gb.elements[0], P("x0 - x1"));
}

TEST(Buchberger, UnitIdeal) {
  Ideal I = I3({"x0*x1 - 1", "x0^2"}, 2);
  // 1 = x1 * (x1 * x0^2 - x0 * (x0*x1 - 1)) - (x0*x1 - 1)
  Polynomial a = P("x0*x1 - 1", 2), b = P("x0^2", 2), x0 = P("x0", 2), x1 = P("x1", 2);
  EXPECT_EQ(x1 * (x1 * b - x0 * a) - a, P("1", 2));
  auto gb = buchberger(I, MonomialOrder::grevlex());
  EXPECT_TRUE(gb.is_unit());
  EXPECT_TRUE(normal_form(P("1", 2), gb).is_zero());
}

TEST(Buchberger, ZeroIdeal) {
  auto gb = buchberger(Ideal(PrimeField{}, 3), MonomialOrder::grevlex());
  EXPECT_TRUE(gb.elements.empty());
  EXPECT_FALSE(gb.is_unit());
  EXPECT_EQ(normal_form(P("x0 + 1"), gb), P("x0 + 1"));
}

TEST(Buchberger, LexAndGrevlexGenerateSameIdeal) {
  Ideal I = I3({"x0^2 - x1*x2", "x1^2 - x0*x2"});
  auto lex = buchberger(I, MonomialOrder::lex());
  auto grevlex = buchberger(I, MonomialOrder::grevlex());
  EXPECT_TRUE(is_groebner_basis(lex));
  EXPECT_TRUE(is_groebner_basis(grevlex));
  for (const auto& g : lex.elements) EXPECT_TRUE(ideal_contains(grevlex, g));
  for (const auto& g : grevlex.elements) EXPECT_TRUE(ideal_contains(lex, g));
}

TEST(NormalForm, Examples) {
  Ideal I = I3({"x0 - x1"});
  auto gb = buchberger(I, MonomialOrder::grevlex());
  EXPECT_EQ(normal_form(P("x0^2"), gb), P("x1^2"));
  EXPECT_TRUE(normal_form(P("x0^2 - x1^2"), gb).is_zero());
  auto gb2 = buchberger(I3({"x0", "x1", "x2"}), MonomialOrder::grevlex());
  EXPECT_EQ(normal_form(P("1"), gb2), P("1"));
}

TEST(NormalForm, LinearAndIdempotent) {
  auto gb = buchberger(I3({"x0^2 - x1*x2", "x1^3 - x2^3"}), MonomialOrder::grevlex());
  Polynomial f = P("x0^3*x1 + 5*x2^4"), g = P("x1^4 - x0*x1*x2^2");
  EXPECT_EQ(normal_form(f + g * 7u, gb), normal_form(f, gb) + normal_form(g, gb) * 7u);
  EXPECT_EQ(normal_form(normal_form(f, gb), gb), normal_form(f, gb));
}

TEST(Eliminate, RabinowitschStyle) {
  // variables x0, x1, t = x2
  Ideal I = I3({"x2*x0 - 1", "x2*x1"});
  // x1 = -x1 * (t*x0 - 1) + x0 * (t*x1)
  EXPECT_EQ(P("-x1") * P("x2*x0 - 1") + P("x0") * P("x2*x1"), P("x1"));
  Ideal E = eliminate(I, std::vector<std::size_t>{2});
  EXPECT_TRUE(same_ideal(E, I3({"x1"})));
}

TEST(Eliminate, ParameterElimination) {
  Ideal E = eliminate(I3({"x0 - x2", "x1 - x2"}), std::vector<std::size_t>{2});
  EXPECT_TRUE(same_ideal(E, I3({"x0 - x1"})));
}

TEST(Eliminate, UnusedVariableLeavesIdeal) {
  Ideal I = I3({"x0^2 - x1^2"});
  EXPECT_TRUE(same_ideal(eliminate(I, std::vector<std::size_t>{2}), I));
}

TEST(Eliminate, RejectsDroppingEverything) {
  EXPECT_THROW(eliminate(I3({"x0"}), std::vector<std::size_t>{0, 1, 2}), PreconditionError);
}

TEST(Saturate, Examples) {
  EXPECT_TRUE(same_ideal(saturate(I3({"x0^2*x1"}), P("x0")), I3({"x1"})));
  EXPECT_TRUE(same_ideal(saturate(I3({"x0*x1", "x0*x2"}), P("x0")), I3({"x1", "x2"})));
  EXPECT_TRUE(same_ideal(saturate(I3({"x1"}), P("x0")), I3({"x1"})));
}

TEST(Saturate, Idempotent) {
  Ideal I = I3({"x0^2*x1 - x0*x2^2", "x0*x1^2"});
  Ideal S = saturate(I, P("x0"));
  EXPECT_TRUE(same_ideal(saturate(S, P("x0")), S));
}

TEST(Intersect, Examples) {
  EXPECT_TRUE(same_ideal(intersect(I3({"x0"}), I3({"x1"})), I3({"x0*x1"})));
  Ideal I = I3({"x0^2 - x1*x2", "x1^3"});
  EXPECT_TRUE(same_ideal(intersect(I, I), I));
}

TEST(Intersect, AffinePoints) {
  Ideal J = intersect(I3({"x0", "x1"}, 2), I3({"x0", "x1 - 1"}, 2));
  Ideal expected = I3({"x0", "x1^2 - x1"}, 2);
  auto gbJ = buchberger(J, MonomialOrder::grevlex());
  auto gbE = buchberger(expected, MonomialOrder::grevlex());
  for (const auto& g : expected.generators()) EXPECT_TRUE(ideal_contains(gbJ, g));
  for (const auto& g : J.generators()) EXPECT_TRUE(ideal_contains(gbE, g));
}

TEST(Hilbert, Examples) {
  auto line = hilbert_dim_degree(I3({"x0"}));
  EXPECT_EQ(line.projective_dimension, 1);
  EXPECT_EQ(line.degree, 1);
  EXPECT_TRUE(hilbert_dim_degree(I3({"x0", "x1", "x2"})).is_empty());
  EXPECT_EQ(hilbert_dim_degree(I3({"x0", "x1", "x2"})).degree_or_zero(), 0);
  auto emb = hilbert_dim_degree(I3({"x0^2", "x0*x1"}));
  EXPECT_EQ(emb.projective_dimension, 1);
  EXPECT_EQ(emb.degree, 1);
}

TEST(Hilbert, EmbeddedComponentMatchesMacaulayFit) {
  std::vector<Polynomial> gens{P("x0^2"), P("x0*x1")};
  std::vector<std::int64_t> hf;
  for (int d = 6; d <= 10; ++d) hf.push_back(tpolar::testing::macaulay_hilbert_function(gens, 3, d));
  auto fit = tpolar::testing::fit_hilbert_polynomial(hf);
  EXPECT_EQ(fit.projective_dimension, 1);
  EXPECT_EQ(fit.degree, 1);
}

TEST(Hilbert, MatchesMacaulayOracleOnCurvesAndPoints) {
  struct Case {
    std::vector<const char*> gens;
  };
  std::vector<Case> cases = {
      {{"x0^2 - x1*x2", "x1^3 - x2^3"}},  // 6 points
      {{"x0*x1 - x2^2"}},                 // conic
      {{"x0^3 - x1*x2^2"}},               // cuspidal cubic
      {{"x0*x1", "x1*x2", "x0*x2"}},      // 3 points
      {{"x0^2", "x1^2", "x2^2"}},         // empty
  };
  for (const auto& c : cases) {
    Ideal I(PrimeField{}, 3);
    std::vector<Polynomial> gens;
    for (auto g : c.gens) {
      I.add(P(g));
      gens.push_back(P(g));
    }
    std::vector<std::int64_t> hf;
    for (int d = 8; d <= 12; ++d) hf.push_back(tpolar::testing::macaulay_hilbert_function(gens, 3, d));
    auto fit = tpolar::testing::fit_hilbert_polynomial(hf);
    auto h = hilbert_dim_degree(I);
    EXPECT_EQ(h.projective_dimension, fit.projective_dimension) << c.gens.front();
    EXPECT_EQ(h.degree_or_zero(), fit.degree) << c.gens.front();
  }
}

TEST(Hilbert, RejectsInhomogeneous) { EXPECT_THROW(hilbert_dim_degree(I3({"x0 - 1"})), PreconditionError); }

TEST(VectorSpaceDimension, Examples) {
  EXPECT_EQ(vector_space_dimension(I3({"x0", "x1"}, 2)), 1);
  EXPECT_EQ(vector_space_dimension(I3({"x0^2", "x1^3"}, 2)), 6);
  EXPECT_EQ(vector_space_dimension(I3({"x0^2 - x1", "x1^2"}, 2)), 4);
  EXPECT_EQ(tpolar::testing::macaulay_affine_dimension({P("x0^2 - x1", 2), P("x1^2", 2)}, 2, 8), 4);
  EXPECT_EQ(vector_space_dimension(I3({"x0 - 1", "x0"}, 2)), 0);
  EXPECT_THROW(vector_space_dimension(I3({"x0*x1"}, 2)), PreconditionError);
}

TEST(VectorSpaceDimension, AgreesWithMacaulayOracle) {
  Rng rng(11);
  PrimeField F;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t arity = 2 + trial % 2;
    std::vector<Polynomial> gens;
    int total = 1;
    int socle = 0;
    for (std::size_t v = 0; v < arity; ++v) {
      const int a = 1 + static_cast<int>(rng() % 3);
      total *= a;
      socle += a - 1;
      Polynomial g = Polynomial::monomial(F, arity, Monomial::variable(v, a));
      for (int d = 0; d < a; ++d) g += tpolar::testing::random_small_homogeneous(F, arity, d, 2, rng);
      gens.push_back(g);
    }
    Ideal I(gens);
    const std::int64_t got = vector_space_dimension(I);
    // Top-degree forms are the pure powers, a regular sequence, so the
    // truncation is exact once D passes the socle degree.
    const int D = socle + 2;
    EXPECT_EQ(got, tpolar::testing::macaulay_affine_dimension(gens, arity, D)) << "trial " << trial;
    EXPECT_LE(got, total);
  }
}
