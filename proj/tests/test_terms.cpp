#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dendri/dendri.hpp"

using namespace dendri;

namespace {

const char* kAssociator = "(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)";

Polynomial random_omega3_poly(Rng& rng, int n, int nops, int terms) {
  std::uniform_int_distribution<int> fam(1, 3), num(-7, 7), den(1, 4);
  Polynomial p(omega3(nops));
  for (int k = 0; k < terms; ++k) {
    const Monomial u = random_polylinear_monomial(n, nops, rng);
    const Monomial m = u.map_ops([&](OpSymbol op) { return OpSymbol{kAllFamilies[fam(rng)], op.index}; });
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add(m, c);
  }
  return p;
}

}  // namespace

TEST(Parse, AssociatorHasTwoTerms) {
  const Polynomial p = parse_polynomial(kAssociator, omega(1));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(render(p), kAssociator);
}

TEST(Parse, DiPoissonCommutativityConsequence) {
  const Polynomial p = parse_polynomial("(x1 <1 x2) - (x2 >1 x1)", omega2(1));
  EXPECT_EQ(p.size(), 2u);
  const Monomial l = Monomial::node({Family::Left, 1}, Monomial::leaf(1), Monomial::leaf(2));
  const Monomial r = Monomial::node({Family::Right, 1}, Monomial::leaf(2), Monomial::leaf(1));
  EXPECT_EQ(p.coefficient(l), 1);
  EXPECT_EQ(p.coefficient(r), -1);
}

TEST(Parse, RationalCoefficientRoundTrip) {
  EXPECT_EQ(render(parse_polynomial("3/2 (x1 *1 x2)", omega(1))), "3/2 (x1 *1 x2)");
  EXPECT_EQ(render(parse_polynomial("6/4 (x1 *1 x2)", omega(1))), "3/2 (x1 *1 x2)");
}

TEST(Parse, EqualsSugarAndDefaultIndex) {
  const Polynomial a = parse_polynomial("(x1 * (x2 * x3)) = ((x1 * x2) * x3)", omega(1));
  EXPECT_EQ(a, parse_polynomial(kAssociator, omega(1)));
}

TEST(Parse, ZeroAndCancellation) {
  EXPECT_TRUE(parse_polynomial("0", omega(1)).is_zero());
  EXPECT_TRUE(parse_polynomial("(x1 * x2) - (x1 * x2)", omega(1)).is_zero());
  EXPECT_EQ(render(parse_polynomial("(x1 * x2) - (x1 * x2)", omega(1))), "0");
}

TEST(Parse, LeadingSignAndWhitespace) {
  const Polynomial p = parse_polynomial("  - 2 ( x1 *1 x2 )+(x2 *1 x1) ", omega(1));
  EXPECT_EQ(render(p), "-2 (x1 *1 x2) + (x2 *1 x1)");
}

TEST(ParseErrors, ReportByteOffset) {
  try {
    parse_polynomial("(x1 *1 x2) + (x1 ?1 x2)", omega(1));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 17u);
  }
}

TEST(ParseErrors, UnknownOperationIndex) {
  try {
    parse_polynomial("(x1 *3 x2)", omega(2));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::string(e.what()).find("unknown operation index 3"), std::string::npos);
  }
}

TEST(ParseErrors, VariableZero) {
  try {
    parse_polynomial("(x0 *1 x2)", omega(1));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(ParseErrors, FamilyOutsideContext) {
  EXPECT_THROW(parse_polynomial("(x1 .1 x2)", omega2(1)), ParseError);
  EXPECT_THROW(parse_polynomial("(x1 *1 x2)", omega3(1)), ParseError);
  EXPECT_THROW(parse_polynomial("(x1 <1 x2)", omega(1)), ParseError);
}

TEST(ParseErrors, Malformed) {
  for (const char* bad : {"", "x1 *1 x2", "(x1 *1 x2", "(x1 x2)", "3", "(x1 *1 x2) +", "1/0 (x1 *1 x2)", "(x1 *1 x2) = "})
    EXPECT_THROW(parse_polynomial(bad, omega(1)), ParseError) << bad;
}

TEST(Render, ZeroPolynomial) { EXPECT_EQ(render(Polynomial(omega(1))), "0"); }

TEST(Render, FiveLeafMonomial) {
  const char* s = "((x5 >1 (x1 <3 x3)) .2 (x2 <1 x4))";
  EXPECT_EQ(render(parse_polynomial(s, omega3(3))), s);
}

TEST(Render, CoefficientForms) {
  Polynomial p(omega(1));
  const Monomial a = parse_polynomial("(x1 * x2)", omega(1)).begin()->first;
  const Monomial b = parse_polynomial("(x2 * x1)", omega(1)).begin()->first;
  p.add(a, Rational(-3, 2));
  p.add(b, -1);
  EXPECT_EQ(render(p), "-3/2 (x1 *1 x2) - (x2 *1 x1)");
}

TEST(Order, RightCombBeforeLeftComb) {
  const Polynomial p = parse_polynomial(kAssociator, omega(1));
  EXPECT_EQ(render(p.begin()->first), "(x1 *1 (x2 *1 x3))");
}

TEST(Order, LowerDegreeFirst) {
  const Polynomial p = parse_polynomial("((x1 * x2) * x3) + (x1 * x2)", omega(1));
  EXPECT_EQ(p.begin()->first.degree(), 2);
}

TEST(Polylinear, Examples) {
  const PolylinearInfo assoc = is_polylinear(parse_polynomial(kAssociator, omega(1)));
  EXPECT_TRUE(assoc.polylinear);
  EXPECT_EQ(assoc.degree, 3);
  EXPECT_FALSE(is_polylinear(parse_polynomial("(x1 *1 x1)", omega(1))).polylinear);
  const PolylinearInfo jac =
      is_polylinear(parse_polynomial("((x1 * x2) * x3) + ((x2 * x3) * x1) + ((x3 * x1) * x2)", omega(1)));
  EXPECT_TRUE(jac.polylinear);
  EXPECT_EQ(jac.degree, 3);
  EXPECT_FALSE(is_polylinear(parse_polynomial("(x1 * x2) + ((x1 * x2) * x3)", omega(1))).polylinear);
  EXPECT_FALSE(is_polylinear(parse_polynomial("(x1 * x3)", omega(1))).polylinear);
}

TEST(Permutation, Examples) {
  const Polynomial assoc = parse_polynomial(kAssociator, omega(1));
  const std::vector<int> e = {1, 2, 3}, s13 = {3, 2, 1};
  EXPECT_EQ(apply_permutation(assoc, e), assoc);
  const std::vector<int> s12 = {2, 1};
  EXPECT_EQ(render(apply_permutation(parse_polynomial("(x1 *1 x2)", omega(1)), s12)), "(x2 *1 x1)");
  EXPECT_EQ(apply_permutation(assoc, s13), parse_polynomial("(x3 * (x2 * x1)) - ((x3 * x2) * x1)", omega(1)));
}

TEST(Permutation, Errors) {
  const Polynomial assoc = parse_polynomial(kAssociator, omega(1));
  const std::vector<int> short_sigma = {2, 1}, not_perm = {1, 1, 3};
  EXPECT_THROW(apply_permutation(assoc, short_sigma), DimensionError);
  EXPECT_THROW(apply_permutation(assoc, not_perm), Error);
  EXPECT_THROW(apply_permutation(parse_polynomial("(x1 * x1)", omega(1)), short_sigma), Error);
}

TEST(Property, RenderParseRoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const Polynomial p = random_omega3_poly(rng, n, 3, 1 + trial % 4);
    const std::string s = render(p);
    const Polynomial q = parse_polynomial(s, omega3(3));
    EXPECT_EQ(q, p) << s;
    EXPECT_EQ(render(q), s);
  }
}

TEST(Property, CanonicalizationIsLinear) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_omega3_poly(rng, 3, 2, 3);
    const Polynomial q = random_omega3_poly(rng, 3, 2, 3);
    Polynomial raw(omega3(2));
    for (const auto& [m, c] : p) raw.add(m, c);
    for (const auto& [m, c] : q) raw.add(m, c);
    EXPECT_EQ(raw, p + q);
    EXPECT_EQ(parse_polynomial(render(p + q), omega3(2)), p + q);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Property, PermutationGroupAction) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const Polynomial p = random_polylinear_polynomial(n, 2, 3, rng);
    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::iota(tau.begin(), tau.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::shuffle(tau.begin(), tau.end(), rng);
    std::vector<int> composed(static_cast<std::size_t>(n));  // (sigma o tau)(k) = sigma(tau(k))
    for (int k = 0; k < n; ++k)
      composed[static_cast<std::size_t>(k)] = sigma[static_cast<std::size_t>(tau[static_cast<std::size_t>(k)] - 1)];
    EXPECT_EQ(apply_permutation(p, composed), apply_permutation(apply_permutation(p, tau), sigma));
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    EXPECT_EQ(apply_permutation(p, e), p);
  }
}
