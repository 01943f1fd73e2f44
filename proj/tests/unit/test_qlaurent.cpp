#include <gtest/gtest.h>

#include <cmath>

#include "skein/errors.hpp"
#include "skein/qlaurent.hpp"
#include "skein/root_eval.hpp"
#include "test_support.hpp"

using namespace skein;

namespace {
QLaurent q(int64_t k, int64_t D = 1) { return QLaurent::monomial(k, D); }
}  // namespace

TEST(QLaurent, FractionalExponentsShareDenominator) {
  const QLaurent x = q(1, 2) + q(1);
  EXPECT_EQ(x.denom(), 2);
  EXPECT_EQ((q(1, 2) * q(1, 2)), q(1));
  EXPECT_TRUE((q(1, 2) * q(1, 2)).is_integral());
  EXPECT_EQ(q(2, 4), q(1, 2));
}

TEST(QLaurent, JsonRoundTrip) {
  const QLaurent x = q(3, 2) - q(-1) * Rational(5, 3);
  EXPECT_EQ(QLaurent::from_json(x.to_json()), x);
}

TEST(QFraction, CancelsCommonFactors) {
  const QFraction f(q(2) - q(-2), q(1) - q(-1));
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(f, QFraction(q(1) + q(-1)));
}

TEST(PsiDelta, MonomialRule) {
  EXPECT_EQ(psi_delta(Scalar::s() * Scalar::v(), 2), QFraction(q(-1)));
  for (int d : {1, 2, 3, -2}) EXPECT_EQ(psi_delta(Scalar::a(), d), QFraction(QLaurent::monomial(d > 0 ? -1 : 1, std::abs(d))));
  EXPECT_EQ(psi_delta(Scalar::delta_h(), 2), QFraction(q(1) + q(-1)));
  EXPECT_EQ(psi_delta(Scalar::delta_h(), 1), QFraction(QLaurent(1)));
}

TEST(PsiDelta, RingHomomorphism) {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Scalar x = test_support::random_scalar(rng), y = test_support::random_scalar(rng);
    for (int d : {1, 2, 3}) {
      ASSERT_EQ(psi_delta(x * y, d), psi_delta(x, d) * psi_delta(y, d));
      ASSERT_EQ(psi_delta(x + y, d), psi_delta(x, d) + psi_delta(y, d));
    }
  }
}

TEST(PsiDelta, PoleIsReported) {
  // s - v^-1 vanishes identically under delta = 1
  const Scalar x(Poly(Rational(1)), Poly::variable(kS) - Poly::variable(kV, -1));
  EXPECT_THROW(psi_delta(x, 1), SkeinError);
}

TEST(RootEval, Examples) {
  EXPECT_LT(eval_root(q(1) + q(-1), 2, false).abs(), 1e-50);
  for (int m : {2, 3, 4}) EXPECT_LT(eval_root(q(m) - q(-m), m, false).abs(), 1e-50);
  const QFraction qint3 = q(2) + QLaurent(1) + q(-2);
  EXPECT_LT(eval_root(qint3, 3, false).abs(), 1e-50);
}

TEST(RootEval, PrincipalBranchAndConjugate) {
  // q^(1/2) at q = e^(i pi/3) is e^(i pi/6)
  const Complex z = eval_root(q(1, 2), 3, false);
  EXPECT_NEAR(static_cast<double>(z.re), std::cos(M_PI / 6), 1e-15);
  EXPECT_NEAR(static_cast<double>(z.im), std::sin(M_PI / 6), 1e-15);
  const Complex w = eval_root(q(1, 2), 3, true);
  EXPECT_NEAR(static_cast<double>(w.im), -std::sin(M_PI / 6), 1e-15);
}

TEST(RootEval, PoleAtRoot) {
  const QFraction f(QLaurent(1), q(3) - q(-3));
  EXPECT_THROW(eval_root(f, 3, false), SkeinError);
}

TEST(RootEval, UnitRootReducesExactly) {
  const Complex z = unit_root(2 * 1000003 + 1, 1000003);
  EXPECT_NEAR(static_cast<double>(z.re), std::cos(M_PI / 1000003), 1e-15);
}
