#include <gtest/gtest.h>

#include <cmath>

#include "skein/braid.hpp"
#include "skein/colored.hpp"
#include "skein/errors.hpp"
#include "skein/oracles.hpp"
#include "skein/special.hpp"

using namespace skein;

namespace {

LinkPresentation named(const char* n) { return analyze_closure(*named_braid(n)); }
QLaurent q(int64_t k, int64_t D = 1) { return QLaurent::monomial(k, D); }

QFraction product_of_brackets(int m, int a) {
  QLaurent p(1);
  for (int i = 0; i < m; ++i) p = p * (q(a + i) - q(-(a + i)));
  return QFraction(p);
}

}  // namespace

TEST(ModifiedDimension, ProductForm) {
  for (auto [m, a] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}, std::pair{4, 3}})
    EXPECT_EQ(modified_dimension(m, a) * product_of_brackets(m, a), QFraction(QLaurent(1)));
}

TEST(MInvariant, UnknotIsModifiedDimension) {
  for (auto [m, a] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    const MInvariantValue v = m_invariant(named("unknot"), m, {a});
    EXPECT_EQ(v.value, modified_dimension(m, a)) << m << " " << a;
    EXPECT_EQ(v.framing_exponent, 0);
  }
}

TEST(MInvariant, HopfRegressionFixture) {
  const MInvariantValue v = m_invariant(named("hopf"), 2, {1, 1});
  EXPECT_TRUE(v.value.is_laurent());
  EXPECT_EQ(v.value, QFraction(q(-1)));
}

TEST(MInvariant, TwoComponentLinksAreLaurent) {
  for (const char* name : {"hopf", "t24"})
    for (auto cs : {std::vector<int>{1, 2}, std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
      const MInvariantValue v = m_invariant(named(name), 2, cs);
      EXPECT_TRUE(v.value.is_laurent()) << name << " " << v.value.str();
      EXPECT_TRUE(v.value.num().is_integral()) << name;
    }
}

TEST(MInvariant, CutComponentDoesNotMatter) {
  for (auto cs : {std::vector<int>{1, 2}, std::vector<int>{2, 1}})
    EXPECT_EQ(m_invariant(named("t24"), 2, cs, 0).value, m_invariant(named("t24"), 2, cs, 1).value);
}

TEST(MInvariant, RejectsAtypicalColors) {
  EXPECT_THROW(m_invariant(named("trefoil"), 2, {0}), SkeinError);
  EXPECT_THROW(m_invariant(named("hopf"), 2, {1}), SkeinError);
}

TEST(FramingFactor, QuadraticFormInTheColors) {
  for (const char* name : {"trefoil", "hopf", "t24", "figure8"})
    for (int m : {2, 3}) {
      const LinkPresentation L = named(name);
      std::vector<int> cs;
      for (int i = 0; i < L.num_components(); ++i) cs.push_back(i + 1);
      // m sum lk a_i - r sum lk a_i a_j with r = m/(1-m), over denominator m-1
      int64_t s1 = 0, s2 = 0;
      for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) {
          s1 += L.lk[i][j] * cs[i];
          s2 += L.lk[i][j] * cs[i] * cs[j];
        }
      const int64_t num = m * (m - 1) * s1 + m * s2;
      EXPECT_EQ(framing_factor(L, m, cs), q(num, m - 1)) << name << " m=" << m;
    }
}

TEST(LinksGould, UnknotAndTwoPaths) {
  for (auto [m, a] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}})
    EXPECT_EQ(links_gould(named("unknot"), m, a), QFraction(QLaurent(1)));
  for (const char* name : {"trefoil", "figure8"})
    for (int a : {1, 2}) EXPECT_EQ(links_gould(named(name), 2, a), links_gould_direct(named(name), 2, a)) << name;
}

TEST(LinksGould, AtFourthRootOfUnity) {
  // m = 2: tau^4 = xi^(-4a) = 1 and the Alexander polynomial is 1 there
  for (const char* name : {"trefoil", "figure8"})
    for (int a : {1, 2}) {
      const Complex z = eval_root(links_gould(named(name), 2, a), 2, false);
      EXPECT_NEAR(static_cast<double>(z.re), 1.0, 1e-12) << name << " a=" << a;
      EXPECT_NEAR(static_cast<double>(z.im), 0.0, 1e-12) << name << " a=" << a;
    }
}

TEST(Kashaev, Examples) {
  for (int N : {2, 3, 4}) {
    const Complex k = kashaev(named("unknot"), N);
    EXPECT_NEAR(static_cast<double>(k.re), 1.0, 1e-30);
    EXPECT_NEAR(static_cast<double>(k.im), 0.0, 1e-30);
  }
  // |Delta(-1)| from the Burau oracle
  for (const char* name : {"trefoil", "figure8"}) {
    const Poly d = alexander_knot(*named_braid(name)).poly;
    const double det = std::abs(static_cast<double>(eval_poly_at_roots(d, {1}, 1).re));
    EXPECT_NEAR(static_cast<double>(kashaev(named(name), 2).abs()), det, 1e-30) << name;
  }
}

TEST(Kashaev, FigureEightAtThree) {
  // classical value sum_k |(q)_k|^2 at q = e^(2 pi i / 3): 1 + 3 + 9 = 13
  const Complex k = kashaev(named("figure8"), 3);
  EXPECT_NEAR(static_cast<double>(k.re), 13.0, 1e-30);
  EXPECT_NEAR(static_cast<double>(k.im), 0.0, 1e-30);
}

TEST(Verify, KashaevAgainstColumnRoute) {
  for (const char* name : {"unknot", "trefoil", "figure8"}) {
    const SpecializationReport r = verify_lg2k(named(name), 3, name);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_LT(r.abs_dev, 1e-9);
  }
}

TEST(Verify, ConjugateSpecialization) {
  for (const char* name : {"trefoil", "hopf"}) {
    const SpecializationReport r = verify_lpsi(make_colored(*named_braid(name), Partition::row(1)), 2, 3, name);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
  }
  const SpecializationReport s = verify_lpsi_scalar(Scalar::s(2) + Scalar::v(-1), 1, 3, "x");
  EXPECT_TRUE(s.pass) << s.to_json().dump(2);
}

TEST(Verify, AlexanderSpecializations) {
  for (int a : {1, 2}) {
    const SpecializationReport r = verify_lg2alex(named("trefoil"), 2, a, "trefoil");
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    const SpecializationReport c = verify_m2alex(named("trefoil"), 2, {a}, "trefoil");
    EXPECT_TRUE(c.pass) << c.to_json().dump(2);
  }
  const SpecializationReport h = verify_m2alex(named("hopf"), 2, {1, 2}, "hopf");
  EXPECT_TRUE(h.pass) << h.to_json().dump(2);
}

TEST(Verify, ReportJsonShape) {
  const SpecializationReport r = verify_lg2k(named("trefoil"), 3, "trefoil");
  const auto j = r.to_json();
  for (const char* key : {"identity", "link", "lhs", "rhs", "abs_dev", "rel_dev", "tolerance", "pass"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["identity"], "links_gould_kashaev");
  EXPECT_EQ(j["N"], 3);
}
