#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "harmonia/modes.hpp"
#include "harmonia/verify.hpp"
#include "support.hpp"

using namespace harmonia;
using namespace harmonia::testing;

namespace {

const HPoly kI12 = ab({{1, 11, 1}, {11, 6, 6}, {-1, 1, 11}});
const HPoly kI30 = ab({{1, 30, 0}, {522, 25, 5}, {-10005, 20, 10}, {-10005, 10, 20}, {-522, 5, 25}, {1, 0, 30}});
const HPoly kI20 = ab({{1, 20, 0}, {-228, 15, 5}, {494, 10, 10}, {228, 5, 15}, {1, 0, 20}});
const HPoly kO6 = ab({{1, 5, 1}, {-1, 1, 5}});
const HPoly kO8 = ab({{1, 8, 0}, {14, 4, 4}, {1, 0, 8}});
const HPoly kO12 = ab({{1, 10, 2}, {-2, 6, 6}, {1, 2, 10}});
const HPoly kO12t = ab({{1, 12, 0}, {-33, 8, 4}, {-33, 4, 8}, {1, 0, 12}});
const HPoly kO18 = ab({{1, 17, 1}, {-34, 13, 5}, {34, 5, 13}, {-1, 1, 17}});

std::vector<HPoly> normalized(std::vector<HPoly> v) {
  for (auto& f : v) f = primitive_normalize(f);
  std::sort(v.begin(), v.end(), [](const HPoly& x, const HPoly& y) { return x.to_string() < y.to_string(); });
  return v;
}

// Products D4^a D2m^b D(2m+2)^c with c in {0, 1} and 4a + 2mb + (2m+2)c = k.
std::vector<HPoly> dihedral_enumeration(int m, int k) {
  HPoly d4 = A.pow(2) * B.pow(2);
  HPoly d2m = m % 2 == 0 ? A.pow(2 * m) + B.pow(2 * m) : A.pow(2 * m) - B.pow(2 * m);
  HPoly d2m2 = A * B * (m % 2 == 0 ? A.pow(2 * m) - B.pow(2 * m) : A.pow(2 * m) + B.pow(2 * m));
  std::vector<HPoly> out;
  if (k % 2) return out;
  for (int c = 0; c <= 1; ++c)
    for (int b = 0; 2 * m * b + (2 * m + 2) * c <= k; ++b) {
      int rest = k - 2 * m * b - (2 * m + 2) * c;
      if (rest % 4 == 0) out.push_back(d4.pow(rest / 4) * d2m.pow(b) * d2m2.pow(c));
    }
  return out;
}

long lens_monomial_count(int p, int k) {
  long n = 0;
  for (int a = 0; a <= k; ++a)
    if (((2 * a - k) % p + p) % p == 0) ++n;
  return n;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// the four-case lens table
long lens_table(int p, int k) {
  if (p % 2 == 0) return k % 2 ? 0 : (2 * (k / p) + 1) * (k + 1);
  if (k % 2 == 0) return (2 * (k / (2 * p)) + 1) * (k + 1);
  return 2 * (floor_div(k - p, 2 * p) + 1) * (k + 1);
}

// number of products of the three invariants of degrees d1, d2, d3 with the
// last exponent at most one
int count_products(int d1, int d2, int d3, int k) {
  int n = 0;
  for (int c = 0; c <= 1; ++c)
    for (int b = 0; d2 * b + d3 * c <= k; ++b)
      if ((k - d2 * b - d3 * c) % d1 == 0) ++n;
  return n;
}

std::vector<Space> all_spaces() {
  std::vector<Space> s{Space::s3(), Space::tetrahedral(), Space::octahedral(), Space::icosahedral()};
  for (int m = 1; m <= 6; ++m) s.push_back(Space::dihedral(m));
  for (int p = 1; p <= 6; ++p) s.push_back(Space::lens(p));
  return s;
}

}  // namespace

TEST(Klein, Icosahedral) {
  const auto& c = klein_polynomials(Space::icosahedral());
  EXPECT_EQ(c["I12"], kI12);
  EXPECT_EQ(c["I30"], kI30);
  EXPECT_EQ(c["I20"], kI20);
  ASSERT_EQ(c.base.size(), 3u);
  EXPECT_EQ(c.base[0].degree, 12);
  EXPECT_EQ(c.base[1].degree, 30);
  EXPECT_EQ(c.base[2].degree, 20);
}

TEST(Klein, Octahedral) {
  const auto& c = klein_polynomials(Space::octahedral());
  EXPECT_EQ(c["O'6"], kO6);
  EXPECT_EQ(c["O'12"], kO12t);
  EXPECT_EQ(c["O'8"], kO8);
  EXPECT_EQ(c["O8"], kO8);
  EXPECT_EQ(c["O12"], kO12);
  EXPECT_EQ(c["O18"], kO18);
}

TEST(Klein, Tetrahedral) {
  const auto& c = klein_polynomials(Space::tetrahedral());
  EXPECT_EQ(c["T6"], kO6);
  EXPECT_EQ(c["T8"], kO8);
  EXPECT_EQ(c["T12"], kO12t);
  // face-center and vertex quartics carry 2*sqrt(3)*i, not 2i: their product must be T8
  Cyclotomic sqrt3 = root_of_unity(1, 12) + root_of_unity(11, 12);
  EXPECT_EQ(sqrt3 * sqrt3, Cyclotomic(3));
  Cyclotomic c2 = Cyclotomic(2) * sqrt3 * imaginary_unit();
  HPoly t4a = A.pow(4) + c2 * A.pow(2) * B.pow(2) + B.pow(4);
  HPoly t4b = A.pow(4) - c2 * A.pow(2) * B.pow(2) + B.pow(4);
  EXPECT_EQ(c["T'4a"], t4a);
  EXPECT_EQ(c["T'4b"], t4b);
  EXPECT_EQ(c["T'6"], kO6);
  EXPECT_EQ(t4a * t4b, kO8);
  EXPECT_EQ((t4a.pow(3) + t4b.pow(3)) * Cyclotomic(make_rational(1, 2)), kO12t);
  EXPECT_EQ(rank_over_field(std::vector<HPoly>{t4a.pow(3) - t4b.pow(3), kO6.pow(2)}), 1u);
  HPoly two_i = Cyclotomic(2) * imaginary_unit() * A.pow(2) * B.pow(2);
  EXPECT_NE((A.pow(4) + two_i + B.pow(4)) * (A.pow(4) - two_i + B.pow(4)), kO8);
}

TEST(Klein, Dihedral) {
  for (int m = 1; m <= 6; ++m) {
    const auto& c = klein_polynomials(Space::dihedral(m));
    const std::string d2m = "D" + std::to_string(2 * m), d2m2 = "D" + std::to_string(2 * m + 2);
    ASSERT_EQ(c.base.size(), 3u);
    EXPECT_EQ(c.base[0].poly, A.pow(2) * B.pow(2));
    HPoly plus = A.pow(2 * m) + B.pow(2 * m), minus = A.pow(2 * m) - B.pow(2 * m);
    EXPECT_EQ(c.base[1].name, d2m);
    EXPECT_EQ(c.base[2].name, d2m2);
    EXPECT_EQ(c.base[1].poly, m % 2 == 0 ? plus : minus) << m;
    EXPECT_EQ(c.base[2].poly, A * B * (m % 2 == 0 ? minus : plus)) << m;
  }
  EXPECT_EQ(klein_polynomials(Space::dihedral(3))["D6"], A.pow(6) - B.pow(6));
}

TEST(Klein, UnsupportedSpaces) {
  EXPECT_THROW(klein_polynomials(Space::s3()), std::invalid_argument);
  EXPECT_THROW(klein_polynomials(Space::lens(3)), std::invalid_argument);
}

TEST(Klein, Dependencies) {
  EXPECT_EQ(kI30.pow(2) - kI20.pow(3), Cyclotomic(1728) * kI12.pow(5));
  for (int m = 1; m <= 4; ++m) {
    const auto& c = klein_polynomials(Space::dihedral(m));
    const HPoly& d4 = c.base[0].poly;
    const HPoly& d2m = c.base[1].poly;
    const HPoly& d2m2 = c.base[2].poly;
    Cyclotomic s(m % 2 == 0 ? -4 : 4);
    EXPECT_EQ(d2m2.pow(2), d4 * (d2m.pow(2) + s * d4.pow(m))) << m;
  }
}

TEST(KTilde, Examples) {
  EXPECT_EQ(k_tilde(Space::icosahedral(), 180), 3);
  EXPECT_EQ(k_tilde(Space::icosahedral(), 14), -1);
  EXPECT_EQ(k_tilde(Space::octahedral(), 24), 1);
  EXPECT_THROW(k_tilde(Space::icosahedral(), 3), std::invalid_argument);
  EXPECT_THROW(k_tilde(Space::dihedral(2), 4), std::invalid_argument);
}

TEST(KTilde, CountsInvariantProducts) {
  for (int k = 0; k <= 360; k += 2) {
    EXPECT_EQ(k_tilde(Space::icosahedral(), k) + 1, count_products(12, 20, 30, k)) << k;
    EXPECT_EQ(k_tilde(Space::octahedral(), k) + 1, count_products(8, 12, 18, k)) << k;
    EXPECT_EQ(k_tilde(Space::tetrahedral(), k) + 1, count_products(6, 8, 12, k)) << k;
    EXPECT_GE(k_tilde(Space::icosahedral(), k), -1);
  }
}

TEST(BaseModes, IcosahedralSixty) {
  auto b = base_modes(Space::icosahedral(), 60);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], kI20.pow(3));
  EXPECT_EQ(b[1], kI12.pow(5));
}

TEST(BaseModes, Icosahedral234) {
  auto b = base_modes(Space::icosahedral(), 234);
  HPoly head = kI12.pow(2) * kI30, i5 = kI12.pow(5), i3 = kI20.pow(3);
  std::vector<HPoly> want{head * i5.pow(3), head * i5.pow(2) * i3, head * i5 * i3.pow(2), head * i3.pow(3)};
  EXPECT_EQ(normalized(b), normalized(want));
}

TEST(BaseModes, DihedralTwoAtTwelve) {
  HPoly s = A.pow(4) + B.pow(4), d = A.pow(2) * B.pow(2);
  std::vector<HPoly> want{d.pow(3), d.pow(2) * s, d * s.pow(2), s.pow(3)};
  EXPECT_EQ(normalized(base_modes(Space::dihedral(2), 12)), normalized(want));
}

TEST(BaseModes, LensThreeAtFour) {
  auto b = base_modes(Space::lens(3), 4);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], A.pow(2) * B.pow(2));
}

TEST(BaseModes, LensAndSphereAreDescendingMonomials) {
  auto b = base_modes(Space::s3(), 3);
  ASSERT_EQ(b.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(b[static_cast<std::size_t>(i)], A.pow(3 - i) * B.pow(i));
}

TEST(BaseModes, EmptyWhenNoModes) {
  EXPECT_TRUE(base_modes(Space::icosahedral(), 34).empty());
  EXPECT_TRUE(base_modes(Space::icosahedral(), 13).empty());
  EXPECT_TRUE(base_modes(Space::dihedral(3), 7).empty());
  EXPECT_TRUE(base_modes(Space::lens(4), 5).empty());
}

TEST(BaseModes, DihedralListsForSmallM) {
  HPoly d4 = A.pow(2) * B.pow(2);
  // m = 1
  {
    HPoly d2 = A.pow(2) - B.pow(2), e = A * B * (A.pow(2) + B.pow(2));
    std::vector<std::vector<HPoly>> lists{
        {HPoly(1)},
        {d2},
        {d4, d2.pow(2), e},
        {d4 * d2, d2.pow(3), d2 * e},
        {d4.pow(2), d4 * d2.pow(2), A.pow(3) * B.pow(3) * (A.pow(2) + B.pow(2)), d2.pow(4), d2.pow(2) * e}};
    for (std::size_t i = 0; i < lists.size(); ++i)
      EXPECT_EQ(normalized(base_modes(Space::dihedral(1), 2 * static_cast<int>(i))), normalized(lists[i])) << 2 * i;
  }
  // m = 2
  {
    HPoly s = A.pow(4) + B.pow(4), e = A * B * (A.pow(4) - B.pow(4));
    std::vector<std::vector<HPoly>> lists{{HPoly(1)},
                                          {},
                                          {d4, s},
                                          {e},
                                          {d4.pow(2), d4 * s, s.pow(2)},
                                          {A.pow(3) * B.pow(3) * (A.pow(4) - B.pow(4)), s * e},
                                          {d4.pow(3), d4.pow(2) * s, d4 * s.pow(2), s.pow(3)}};
    for (std::size_t i = 0; i < lists.size(); ++i)
      EXPECT_EQ(normalized(base_modes(Space::dihedral(2), 2 * static_cast<int>(i))), normalized(lists[i])) << 2 * i;
  }
  // m = 3
  {
    HPoly s = A.pow(6) - B.pow(6), e = A * B * (A.pow(6) + B.pow(6));
    std::vector<std::vector<HPoly>> lists{{HPoly(1)},
                                          {},
                                          {d4},
                                          {s},
                                          {d4.pow(2), e},
                                          {d4 * s},
                                          {d4.pow(3), A.pow(3) * B.pow(3) * (A.pow(6) + B.pow(6)), s.pow(2)}};
    for (std::size_t i = 0; i < lists.size(); ++i)
      EXPECT_EQ(normalized(base_modes(Space::dihedral(3), 2 * static_cast<int>(i))), normalized(lists[i])) << 2 * i;
  }
}

TEST(BaseModes, DihedralRecurrenceMatchesEnumeration) {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 24; ++k)
      EXPECT_EQ(normalized(base_modes(Space::dihedral(m), k)), normalized(dihedral_enumeration(m, k))) << m << " " << k;
}

TEST(BaseModes, DistinctLeadingAlphaPowers) {
  for (const auto& s : all_spaces())
    for (int k = 0; k <= 60; k += 2) {
      std::set<int> lead;
      for (const auto& f : base_modes(s, k)) lead.insert(f.leading().first[Var::Alpha] + f.leading().first[Var::BetaBar]);
      EXPECT_EQ(lead.size(), base_modes(s, k).size()) << s.tag() << " " << k;
    }
}

TEST(BaseModes, CountTimesSiblingsIsDimension) {
  for (const auto& s : all_spaces())
    for (int k = 0; k <= 60; ++k)
      EXPECT_EQ(static_cast<long>(base_modes(s, k).size()) * (k + 1), dimension(s, k)) << s.tag() << " " << k;
}

TEST(Siblings, CubicLadder) {
  auto s = siblings(A.pow(3) - B.pow(3));
  ASSERT_EQ(s.size(), 4u);
  std::vector<HPoly> listed{A.pow(3) - B.pow(3), A.pow(2) * Bb + B.pow(2) * Ab, A * Bb.pow(2) - B * Ab.pow(2),
                            Ab.pow(3) + Bb.pow(3)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(proportional(s[i], listed[i])) << i;
    EXPECT_EQ(s[i].twist(), 3 - 2 * static_cast<int>(i));
  }
  EXPECT_EQ(s[1], A.pow(2) * Bb + Ab * B.pow(2));
}

TEST(Siblings, ConstantHasNone) {
  auto s = siblings(HPoly(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], HPoly(1));
}

TEST(Siblings, ThirteenForI12) { EXPECT_EQ(siblings(kI12).size(), 13u); }

TEST(Siblings, RejectImpureInput) {
  EXPECT_THROW(siblings(A + Ab), std::invalid_argument);
  EXPECT_THROW(siblings(A * Bb), std::invalid_argument);
}

TEST(Siblings, ConjugatePairedMirrorsLadder) {
  for (const HPoly& f : {kI12, kO18, kO8, A.pow(2) * B.pow(2)}) {
    auto s = siblings(f, Normalization::ConjugatePaired);
    const std::size_t k = s.size() - 1;
    for (std::size_t i = 0; i <= k; ++i) {
      EXPECT_EQ(s[k - i], conjugate_poly(s[i])) << f << " " << i;
      EXPECT_EQ(rank_over_field(std::vector<HPoly>{s[i], siblings(f)[i]}), 1u);
    }
  }
}

TEST(FullBasis, Examples) {
  EXPECT_EQ(full_basis(Space::icosahedral(), 180).dimension, 724);
  EXPECT_EQ(full_basis(Space::icosahedral(), 234).dimension, 940);
  EXPECT_EQ(full_basis(Space::s3(), 3).dimension, 16);
  auto mb = full_basis(Space::icosahedral(), 12);
  EXPECT_EQ(mb.base_modes.size(), 1u);
  EXPECT_EQ(mb.basis.size(), 13u);
  EXPECT_EQ(mb.basis.front(), kI12);
}

TEST(FullBasis, HarmonicHomogeneousAndSized) {
  for (const auto& s : all_spaces())
    for (int k = 0; k <= 16; ++k) {
      auto mb = full_basis(s, k);
      EXPECT_EQ(mb.basis.size(), mb.base_modes.size() * static_cast<std::size_t>(k + 1));
      EXPECT_EQ(mb.dimension, static_cast<long>(mb.basis.size()));
      for (std::size_t j = 0; j < mb.basis.size(); ++j) {
        const auto& f = mb.basis[j];
        EXPECT_EQ(f.degree(), k);
        EXPECT_EQ(f.twist(), k - 2 * static_cast<int>(j % static_cast<std::size_t>(k + 1)));
        EXPECT_TRUE(laplacian_r4(f).is_zero());
      }
    }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(Space::icosahedral(), 34), 0);
  EXPECT_EQ(dimension(Space::icosahedral(), 180), 724);
  EXPECT_EQ(dimension(Space::icosahedral(), 234), 940);
  EXPECT_EQ(dimension(Space::icosahedral(), 12), 13);
  EXPECT_EQ(dimension(Space::icosahedral(), 30), 31);
  EXPECT_EQ(dimension(Space::icosahedral(), 20), 21);
  EXPECT_EQ(dimension(Space::dihedral(2), 12), 52);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(dimension(Space::lens(1), k), (k + 1) * (k + 1));
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(dimension(Space::s3(), k), (k + 1) * (k + 1));
}

TEST(Dimension, OddVanishesOnBinarySpaces) {
  std::vector<Space> binary{Space::tetrahedral(), Space::octahedral(), Space::icosahedral()};
  for (int m = 1; m <= 6; ++m) binary.push_back(Space::dihedral(m));
  for (int p = 2; p <= 12; p += 2) binary.push_back(Space::lens(p));
  for (const auto& s : binary)
    for (int k = 1; k <= 61; k += 2) EXPECT_EQ(dimension(s, k), 0) << s.tag() << " " << k;
}

TEST(Dimension, LensTableAgreesWithMonomialCount) {
  for (int p = 1; p <= 12; ++p)
    for (int k = 0; k <= 40; ++k) {
      EXPECT_EQ(dimension(Space::lens(p), k), lens_table(p, k)) << p << " " << k;
      EXPECT_EQ(dimension(Space::lens(p), k), lens_monomial_count(p, k) * (k + 1)) << p << " " << k;
    }
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 40; k += 2)
      EXPECT_EQ(dimension(Space::lens(2 * n), k), (2 * ((k / 2) / n) + 1) * (k + 1));
}

TEST(Dimension, DihedralClosedForm) {
  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k <= 40; k += 2)
      EXPECT_EQ(dimension(Space::dihedral(m), k),
                static_cast<long>(dihedral_enumeration(m, k).size()) * (k + 1))
          << m << " " << k;
}
