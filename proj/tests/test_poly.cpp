#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "harmonia/modes.hpp"
#include "harmonia/poly.hpp"
#include "harmonia/su2.hpp"
#include "support.hpp"

using namespace harmonia;
using namespace harmonia::testing;

namespace {

const HPoly kI12 = ab({{1, 11, 1}, {11, 6, 6}, {-1, 1, 11}});
const HPoly kO6 = ab({{1, 5, 1}, {-1, 1, 5}});
const HPoly kO8 = ab({{1, 8, 0}, {14, 4, 4}, {1, 0, 8}});
const HPoly kO12 = ab({{1, 12, 0}, {-33, 8, 4}, {-33, 4, 8}, {1, 0, 12}});
const Cyclotomic kI = imaginary_unit();

}  // namespace

TEST(FromRoots, FourthRootsOfUnity) {
  std::vector<ProjectivePoint> roots{{1, 1}, {kI, 1}, {-1, 1}, {-kI, 1}};
  EXPECT_EQ(from_roots(roots), A.pow(4) - B.pow(4));
}

TEST(FromRoots, PointAtInfinity) {
  std::vector<ProjectivePoint> roots{{1, 0}};
  EXPECT_EQ(from_roots(roots), -B);
}

TEST(FromRoots, IcosahedronVerticesGiveDegreeTwelveInvariant) {
  Cyclotomic z = root_of_unity(1, 5);
  Cyclotomic t1 = z + z.pow(4), t2 = z.pow(2) + z.pow(3);
  std::vector<ProjectivePoint> roots{{0, 1}, {1, 0}};
  for (int nu = 0; nu < 5; ++nu) {
    roots.push_back({z.pow(nu) * t1, 1});
    roots.push_back({z.pow(nu) * t2, 1});
  }
  HPoly f = from_roots(roots);
  EXPECT_EQ(f.degree(), 12);
  EXPECT_TRUE(proportional(f, kI12));
}

TEST(FromRoots, ZeroPointRejected) {
  std::vector<ProjectivePoint> roots{{0, 0}};
  EXPECT_THROW(from_roots(roots), std::invalid_argument);
}

TEST(Arithmetic, DifferenceOfSquares) { EXPECT_EQ((A - B) * (A + B), A.pow(2) - B.pow(2)); }

TEST(Arithmetic, OctahedralDependency) {
  EXPECT_EQ(kO8.pow(3) - Cyclotomic(108) * kO6.pow(4), kO12.pow(2));
}

TEST(Arithmetic, TetrahedralDependency) {
  // T6, T8, T12 coincide with O'6, O'8, O'12
  EXPECT_EQ(kO12.pow(2) + Cyclotomic(108) * kO6.pow(4), kO8.pow(3));
}

TEST(Arithmetic, DegreesAndTwistsAdd) {
  HPoly f = mono(2, 0, 0, 1), g = mono(0, 1, 3, 0);
  auto p = degree_twist(f * g);
  EXPECT_EQ(p.degree, 7);
  EXPECT_EQ(p.twist, 1 + 2);
  EXPECT_TRUE((f * HPoly()).is_zero());
}

TEST(PartialDerivative, Examples) {
  EXPECT_TRUE(partial_derivative(Ab, Var::Alpha).is_zero());
  EXPECT_EQ(partial_derivative(A.pow(3), Var::Alpha), Cyclotomic(3) * A.pow(2));
  EXPECT_EQ(partial_derivative(A.pow(2) * Bb, Var::BetaBar), A.pow(2));
}

TEST(PartialDerivative, ProductRule) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    HPoly f = random_poly(rng, 4, 5, 4), g = random_poly(rng, 4, 5, 4);
    for (Var v : {Var::Alpha, Var::AlphaBar, Var::Beta, Var::BetaBar})
      EXPECT_EQ(partial_derivative(f * g, v), partial_derivative(f, v) * g + f * partial_derivative(g, v));
  }
}

TEST(Laplacian, Examples) {
  EXPECT_TRUE(laplacian_r4(A.pow(3) - B.pow(3)).is_zero());
  EXPECT_EQ(laplacian_r4(A * Ab), HPoly(4));
  EXPECT_TRUE(laplacian_r4(HPoly(1)).is_zero());
}

TEST(Laplacian, HolomorphicPolynomialsAreHarmonic) {
  std::mt19937_64 rng(9);
  for (int d = 0; d <= 30; ++d) EXPECT_TRUE(laplacian_r4(random_holomorphic(rng, 12, d)).is_zero()) << d;
}

TEST(Laplacian, CommutesWithTwistOperators) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    HPoly f = random_poly(rng, 12, 8, 6);
    for (auto dir : {TwistDirection::Minus, TwistDirection::Plus})
      EXPECT_EQ(laplacian_r4(twist_apply(f, dir)), twist_apply(laplacian_r4(f), dir));
  }
}

TEST(Twist, MinusOnCubic) {
  EXPECT_EQ(twist_apply(A.pow(3) - B.pow(3), TwistDirection::Minus),
            Cyclotomic(-3) * (A.pow(2) * Bb + Ab * B.pow(2)));
}

TEST(Twist, ConstantIsKilled) { EXPECT_TRUE(twist_apply(HPoly(5), TwistDirection::Minus).is_zero()); }

TEST(Twist, PlusAfterMinusOnPower) {
  for (int k = 0; k <= 12; ++k)
    EXPECT_EQ(twist_apply(twist_apply(A.pow(k), TwistDirection::Minus), TwistDirection::Plus),
              Cyclotomic(-k) * A.pow(k));
}

TEST(Twist, MinusLowersTwistByTwoAndTerminates) {
  std::mt19937_64 rng(23);
  for (int k = 1; k <= 12; ++k) {
    HPoly f = random_holomorphic(rng, 5, k);
    for (int j = 0; j < k; ++j) {
      HPoly g = twist_apply(f, TwistDirection::Minus);
      ASSERT_FALSE(g.is_zero());
      EXPECT_EQ(*g.twist(), *f.twist() - 2);
      EXPECT_EQ(g.degree(), k);
      f = g;
    }
    EXPECT_TRUE(twist_apply(f, TwistDirection::Minus).is_zero()) << k;
  }
}

TEST(GroupAct, QuarterTurnFixesQuartic) {
  SU2Element g2{kI, 0};
  EXPECT_EQ(group_act(g2, A.pow(4) - B.pow(4)), A.pow(4) - B.pow(4));
}

TEST(GroupAct, EighthTurnNegatesQuartic) {
  SU2Element g4{root_of_unity(1, 8), 0};
  EXPECT_EQ(group_act(g4, A.pow(4) - B.pow(4)), -(A.pow(4) - B.pow(4)));
}

TEST(GroupAct, IdentityFixesEverything) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    HPoly f = random_poly(rng, 20, 6, 5);
    EXPECT_EQ(group_act(SU2Element::identity(), f), f);
  }
}

TEST(GroupAct, IsAHomomorphism) {
  const auto& I = standard_group(Space::icosahedral());
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, I.order() - 1);
  for (int t = 0; t < 6; ++t) {
    const auto& g1 = I.elements[pick(rng)];
    const auto& g2 = I.elements[pick(rng)];
    HPoly f = random_poly(rng, 5, 4, 4);
    EXPECT_EQ(group_act(g1 * g2, f), group_act(g1, group_act(g2, f)));
  }
}

TEST(GroupAct, MatchesNumericSubstitution) {
  const auto& O = standard_group(Space::octahedral());
  std::mt19937_64 rng(37);
  for (std::size_t i = 0; i < O.order(); i += 5) {
    const auto& g = O.elements[i];
    HPoly f = random_poly(rng, 8, 6, 5);
    HPoly h = group_act(g, f);
    // [R_g f](v) = f(g^{-1} v), g^{-1} = rows (conj z, conj w), (-w, z)
    std::complex<double> z = g.z.to_complex(), w = g.w.to_complex();
    for (int s = 0; s < 3; ++s) {
      auto [a, b] = random_unit_point(rng);
      std::complex<double> a2 = std::conj(z) * a + std::conj(w) * b, b2 = -w * a + z * b;
      EXPECT_LT(std::abs(evaluate(h, a, b) - evaluate(f, a2, b2)), 1e-9);
    }
  }
}

TEST(GroupAct, CommutesWithTwistOnHarmonicPolynomials) {
  const auto& I = standard_group(Space::icosahedral());
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, I.order() - 1);
  for (int t = 0; t < 6; ++t) {
    HPoly f = twist_apply(random_holomorphic(rng, 5, 6), TwistDirection::Minus);
    const auto& g = I.elements[pick(rng)];
    for (auto dir : {TwistDirection::Minus, TwistDirection::Plus})
      EXPECT_EQ(group_act(g, twist_apply(f, dir)), twist_apply(group_act(g, f), dir));
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate_poly(A.pow(3) - B.pow(3)), Ab.pow(3) - Bb.pow(3));
  HPoly s = A.pow(2) * Bb + Ab * B.pow(2);
  EXPECT_EQ(conjugate_poly(s), Ab.pow(2) * B + A * Bb.pow(2));
  EXPECT_EQ(degree_twist(conjugate_poly(mono(11, 0, 1, 0))).twist, -12);
}

TEST(Conjugate, IsAnInvolution) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    HPoly f = random_poly(rng, 60, 6, 6);
    EXPECT_EQ(conjugate_poly(conjugate_poly(f)), f);
  }
}

TEST(DegreeTwist, Examples) {
  auto d = degree_twist(mono(11, 0, 1, 0));
  EXPECT_EQ(d.degree, 12);
  EXPECT_EQ(d.twist, 12);
  d = degree_twist(mono(2, 0, 0, 1));
  EXPECT_EQ(d.degree, 3);
  EXPECT_EQ(d.twist, 1);
  d = degree_twist(A + Ab);
  EXPECT_EQ(d.degree, 1);
  EXPECT_FALSE(d.twist.has_value());
  d = degree_twist(A + HPoly(1));
  EXPECT_FALSE(d.homogeneous);
  EXPECT_THROW(degree_twist(HPoly()), std::invalid_argument);
}

TEST(Monomial, TwistMatchesDegreeParity) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          Monomial m(a, b, c, d);
          EXPECT_EQ(m.degree(), a + b + c + d);
          EXPECT_EQ(m.twist(), a + c - b - d);
          EXPECT_EQ((m.degree() - m.twist()) % 2, 0);
        }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(A.pow(4) - B.pow(4), 1.0, 0.0), std::complex<double>(1, 0));
  EXPECT_EQ(std::abs(evaluate(kI12, 1.0, 0.0)), 0.0);
}

TEST(Evaluate, CubicTwistsThreeTimesAlongFiber) {
  std::mt19937_64 rng(47);
  HPoly f = A.pow(3) - B.pow(3);
  const double t = std::numbers::pi / 7;
  const std::complex<double> u = std::polar(1.0, t);
  for (int s = 0; s < 20; ++s) {
    auto [a, b] = random_unit_point(rng);
    EXPECT_LT(std::abs(evaluate(f, u * a, u * b) - std::polar(1.0, 3 * t) * evaluate(f, a, b)), 1e-9);
  }
}

TEST(Evaluate, ExactAgreesWithNumeric) {
  std::mt19937_64 rng(53);
  HPoly f = random_holomorphic(rng, 5, 7);
  Cyclotomic p = root_of_unity(1, 5), q = Cyclotomic(make_rational(2, 3));
  EXPECT_LT(std::abs(evaluate_exact(f, p, q).to_complex() - evaluate(f, p.to_complex(), q.to_complex())), 1e-9);
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_operator(A.pow(2) * Bb), Cyclotomic(3) * A.pow(2) * Bb);
  EXPECT_TRUE(euler_operator(HPoly(7)).is_zero());
  const HPoly& i20 = klein_polynomials(Space::icosahedral())["I20"];
  EXPECT_EQ(euler_operator(i20), Cyclotomic(20) * i20);
}

TEST(PrimitiveNormalize, Examples) {
  HPoly s = A.pow(2) * Bb + Ab * B.pow(2);
  EXPECT_EQ(primitive_normalize(Cyclotomic(-3) * s), s);
  EXPECT_EQ(primitive_normalize(Cyclotomic(7) * kI12), kI12);
  EXPECT_EQ(primitive_normalize(kI12), kI12);
  EXPECT_THROW(primitive_normalize(HPoly()), std::invalid_argument);
}

TEST(PrimitiveNormalize, ProportionalInputsAgree) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    HPoly f = random_poly(rng, 12, 5, 4);
    Cyclotomic c = random_cyclotomic(rng, 1, 9);
    if (c.is_zero()) continue;
    HPoly n = primitive_normalize(f);
    EXPECT_EQ(primitive_normalize(c * f), n);
    EXPECT_EQ(primitive_normalize(n), n);
  }
}

TEST(HPoly, NoStoredZeros) {
  HPoly f = A + B;
  f.add_term(Monomial(1, 0, 0, 0), Cyclotomic(-1));
  EXPECT_EQ(f, B);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE((A - A).is_zero());
}

TEST(HPoly, ToString) { EXPECT_EQ(kI12.to_string(), "a^11*b + 11*a^6*b^6 - a*b^11"); }
