#include <gtest/gtest.h>

#include <random>

#include "qsym/errors.hpp"
#include "qsym/poly.hpp"

using namespace qsym;

namespace {

Polynomial X(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial K(std::size_t n, int c) { return Polynomial::constant(n, Rational(c)); }

}  // namespace

TEST(Polynomial, ArithmeticCancels) {
  Polynomial x = X(2, 0), y = X(2, 1);
  Polynomial p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_TRUE((p - x * x + y * y).is_zero());
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ((x * y * y).degree_in(1), 2u);
  EXPECT_TRUE((Rational(0) * p).is_zero());
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
  Polynomial p = X(3, 0) + Rational(2) * X(3, 2) - K(3, 1);
  Polynomial r = K(3, 1);
  for (unsigned e = 0; e <= 6; ++e) {
    EXPECT_EQ(p.pow(e), r) << e;
    r = r * p;
  }
}

TEST(Polynomial, SubstituteAndEvaluate) {
  // p(x, y) = x^2 y - 3, x -> t + 1, y -> 2t.
  Polynomial p = X(2, 0) * X(2, 0) * X(2, 1) - K(2, 3);
  Polynomial t = X(1, 0);
  Polynomial s = p.substitute({t + K(1, 1), Rational(2) * t});
  for (int v = -3; v <= 3; ++v) {
    Rational tv(v, 2);
    Rational expected = (tv + 1) * (tv + 1) * (2 * tv) - 3;
    EXPECT_EQ(s.evaluate({tv}), expected);
    EXPECT_EQ(p.evaluate({tv + 1, 2 * tv}), expected);
  }
  EXPECT_THROW(p.substitute({t}), InvalidArgument);
  EXPECT_THROW(p.evaluate({Rational(1)}), InvalidArgument);
}

TEST(Polynomial, RandomSubstitutionIsRingMap) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  auto random_poly = [&](std::size_t n) {
    Polynomial p(n);
    for (int t = 0; t < 4; ++t) {
      Monomial m(n);
      for (auto& e : m) e = static_cast<std::uint8_t>(expo(rng));
      p.add_term(m, Rational(coef(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = random_poly(3), g = random_poly(3);
    std::vector<Polynomial> images = {random_poly(2), random_poly(2), random_poly(2)};
    EXPECT_EQ((f * g).substitute(images), f.substitute(images) * g.substitute(images));
    EXPECT_EQ((f + g).substitute(images), f.substitute(images) + g.substitute(images));
  }
}

TEST(Polynomial, ToString) {
  Polynomial x = X(2, 0), y = X(2, 1);
  EXPECT_EQ(Polynomial(2).to_string(), "0");
  EXPECT_EQ((Rational(2) * x * x * y - Polynomial::constant(2, Rational(1, 3))).to_string(),
            "2*x0^2*x1 - 1/3");
  EXPECT_EQ((-y + x).to_string(), "x0 - x1");
}

TEST(Polynomial, RejectsMismatchedShapes) {
  EXPECT_THROW(X(2, 0) + X(3, 0), InvalidArgument);
  EXPECT_THROW(X(2, 0) * X(3, 0), InvalidArgument);
  EXPECT_THROW(X(2, 2), InvalidArgument);
  Polynomial p(2);
  EXPECT_THROW(p.add_term(Monomial(3), Rational(1)), InvalidArgument);
}
