#include "nefslope/numdata.hpp"
#include "nefslope/polyroot.hpp"
#include "nefslope/slope.hpp"
#include "nefslope/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace nefslope {
namespace {

IntersectionProfile profile(std::initializer_list<long long> v) {
  IntersectionProfile p{static_cast<unsigned>(v.size() - 1), {}};
  for (long long x : v) p.v.emplace_back(x);
  return p;
}

TEST(Numbers, ParsesRationalForms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-12"), Rational(1, Integer("1000000000000")));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_integer("-007"), Integer(-7));
  EXPECT_EQ(parse_rational("007/0100"), Rational(7, 100));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
}

TEST(Numbers, DividesTreatsZeroAsDivisibleByAll) {
  EXPECT_TRUE(divides(7, 0));
  EXPECT_TRUE(divides(3, 9));
  EXPECT_FALSE(divides(2, 9));
  EXPECT_FALSE(divides(0, 9));
}

TEST(ProfileFromMatrix, NormClassOnProductSurface) {
  SymMatrixModel m{2, RationalMatrix::diagonal({1, 0}), 2};
  EXPECT_EQ(profile_from_matrix(m), profile({0, 1, 2}));
}

TEST(ProfileFromMatrix, TrivialBundle) {
  SymMatrixModel m{2, RationalMatrix(2), 2};
  EXPECT_EQ(profile_from_matrix(m), profile({0, 0, 2}));
}

TEST(ProfileFromMatrix, OffDiagonalExample) {
  // 2 det(uI - F) = 2(u^2 - 4u + 3)
  SymMatrixModel m{2, RationalMatrix{{2, 1}, {1, 2}}, 2};
  EXPECT_EQ(profile_from_matrix(m), profile({6, 4, 2}));
}

TEST(ProfileFromMatrix, RejectsNonIntegralProfiles) {
  SymMatrixModel m{2, RationalMatrix::diagonal({Rational(1, 3), 0}), 2};
  EXPECT_THROW(profile_from_matrix(m), NonIntegralProfile);
}

TEST(ProfileFromMatrix, RejectsAsymmetricOrNonPositiveLn) {
  EXPECT_THROW(profile_from_matrix(SymMatrixModel{2, RationalMatrix{{1, 2}, {0, 1}}, 2}), InputError);
  EXPECT_THROW(profile_from_matrix(SymMatrixModel{2, RationalMatrix(2), 0}), InputError);
}

TEST(ProfileFromMatrix, CharpolyMatchesInterpolationOracle) {
  RationalMatrix f{{Rational(1, 2), 3, -1}, {3, 0, Rational(2, 3)}, {-1, Rational(2, 3), 5}};
  EXPECT_EQ(characteristic_polynomial(f), oracle::charpoly_by_interpolation(f));
}

TEST(IsProportional, Examples) {
  EXPECT_EQ(is_proportional(profile({8, 4, 2})), Rational(2));
  EXPECT_FALSE(is_proportional(profile({2, 3, 2})).has_value());
  EXPECT_EQ(is_proportional(profile({0, 0, 2})), Rational(0));
}

TEST(IsProportional, ScalarMatricesAreProportional) {
  for (const Rational t : {Rational(3), Rational(-2), Rational(5, 7), Rational(0)}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const Integer Ln = factorial(n) * pow(Integer(denominator_of(t)), n);
      std::vector<Rational> diag(n, t);
      SymMatrixModel m{n, RationalMatrix::diagonal(diag), Ln};
      EXPECT_EQ(is_proportional(profile_from_matrix(m)), t) << "n=" << n << " t=" << to_string(t);
    }
  }
}

TEST(Validate, SpectralAcceptsRealRootedSurface) {
  EXPECT_TRUE(validate(profile({2, 3, 2}), ValidationLevel::Spectral).ok());
}

TEST(Validate, HodgeViolation) {
  const auto r = validate(profile({2, 1, 2}), ValidationLevel::SurfaceHodge);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->check, "hodge");
  EXPECT_NE(r.violation->detail.find("(L.M)^2 = 1 < L^2.M^2 = 4"), std::string::npos);
  // same profile at the spectral level: a complex root pair
  const auto s = validate(profile({2, 1, 2}), ValidationLevel::Spectral);
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.violation->check, "real-spectrum");
  EXPECT_TRUE(validate(profile({2, 1, 2}), ValidationLevel::Syntactic).ok());
}

TEST(Validate, SyntacticViolations) {
  auto r = validate(profile({0, 1, -2}), ValidationLevel::Syntactic);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->check, "polarization");
  IntersectionProfile short_v{3, {Integer(1), Integer(2)}};
  r = validate(short_v, ValidationLevel::Spectral);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->check, "length");
  EXPECT_THROW(require_syntactic(short_v), InvalidProfile);
}

TEST(Validate, HodgeNeedsSurfaces) {
  const auto r = validate(profile({0, 0, 18, 6}), ValidationLevel::SurfaceHodge);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->check, "hodge-not-applicable");
  EXPECT_TRUE(validate(profile({3, 5, 3}), ValidationLevel::SurfaceHodge).ok());
}

TEST(Validate, RepeatedRootsCountWithMultiplicity) {
  // chi = 6u^2(u - 9): double root at 0
  EXPECT_TRUE(validate(profile({0, 0, 18, 6}), ValidationLevel::Spectral).ok());
  // M = 2L: chi = 2(u-2)^2
  EXPECT_TRUE(validate(profile({8, 4, 2}), ValidationLevel::Spectral).ok());
}

TEST(Validate, SpectralAcceptsEveryMatrixProfile) {
  GenSpec spec{GenKind::ProductMatrix, 4, 5, 3, 99, 60};
  for (const auto& inst : gen_random(spec)) {
    const auto& m = std::get<SymMatrixModel>(inst);
    EXPECT_TRUE(validate(profile_from_matrix(m), ValidationLevel::Spectral).ok());
  }
}

TEST(BinaryProfile, Examples) {
  EXPECT_EQ(binary_profile(profile({3, 5, 3}), 3, -1), profile({0, 4, 3}));
  EXPECT_EQ(binary_profile(profile({3, 5, 3}), 1, 0), profile({3, 3, 3}));
  EXPECT_EQ(binary_profile(profile({3, 5, 3}), 0, 1), profile({3, 5, 3}));
  EXPECT_EQ(binary_profile(profile({0, 0, 18, 6}), 1, 0), profile({6, 6, 6, 6}));
}

TEST(BinaryProfile, LIsAlwaysNef) {
  GenSpec spec{GenKind::Random, 3, 20, 1, 5, 50};
  for (const auto& inst : gen_random(spec)) {
    const auto& p = std::get<IntersectionProfile>(inst);
    const NefReport r = is_nef(binary_profile(p, 1, 0));
    EXPECT_TRUE(r.nef);
    EXPECT_TRUE(r.ample);
  }
}

TEST(BinaryProfile, AgreesWithMatrixModel) {
  // B = aL + bM has f_B = a I + b F
  SymMatrixModel m{3, RationalMatrix{{2, 1, 0}, {1, -1, 3}, {0, 3, 1}}, 6};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      SymMatrixModel mb{3, Rational(a) * RationalMatrix::identity(3) + Rational(b) * m.F, 6};
      EXPECT_EQ(binary_profile(profile_from_matrix(m), a, b), profile_from_matrix(mb)) << a << "," << b;
    }
}

}  // namespace
}  // namespace nefslope
