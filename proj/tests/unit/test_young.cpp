#include <gtest/gtest.h>

#include <random>

#include "skein/braid.hpp"
#include "skein/errors.hpp"
#include "skein/hecke.hpp"
#include "skein/perm.hpp"
#include "skein/young.hpp"

using namespace skein;

namespace {

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n == 0) return {Partition()};
  std::vector<Partition> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (const auto& rest : partitions_of(n - first, first)) {
      std::vector<int> p{first};
      p.insert(p.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(p);
    }
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k, k)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Partition, Basics) {
  const Partition p = Partition::parse("3,1");
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition::parse("[2,1]"), Partition({2, 1}));
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_EQ(p.n_lambda(), 0 + 1 + 2 - 1);
  EXPECT_THROW(Partition::parse("1,2"), SkeinError);
  EXPECT_THROW(Partition::parse("2,x"), SkeinError);
  EXPECT_EQ(Partition::rectangle(2, 3).conjugate(), Partition::rectangle(3, 2));
}

TEST(Partition, HooksMatchHookLengthFormula) {
  // number of standard tableaux: n! / prod hooks
  const std::vector<std::pair<Partition, int>> cases = {
      {Partition({2, 1}), 2}, {Partition({3, 1}), 3}, {Partition({2, 2}), 2}, {Partition({3, 2}), 5}};
  for (const auto& [p, f] : cases) {
    long prod = 1, fact = 1;
    for (const auto& c : p.cells()) prod *= p.hook(c);
    for (int i = 2; i <= p.size(); ++i) fact *= i;
    EXPECT_EQ(fact / prod, f) << p.str();
  }
}

TEST(Symmetrizers, SmallCases) {
  EXPECT_EQ(symmetrizer(1), HeckeElement::identity(1));
  EXPECT_EQ(antisymmetrizer(1), HeckeElement::identity(1));
  const HeckeElement f2 =
      (HeckeElement::identity(2) * Scalar::s(-1) + HeckeElement::basis(2, 1) * Scalar::a(-1)) * qint(2).inverse();
  EXPECT_EQ(symmetrizer(2), f2);
  for (int r = 1; r <= 4; ++r) {
    EXPECT_EQ(symmetrizer(r) * symmetrizer(r), symmetrizer(r));
    EXPECT_EQ(antisymmetrizer(r) * antisymmetrizer(r), antisymmetrizer(r));
  }
  EXPECT_TRUE((symmetrizer(2) * antisymmetrizer(2)).is_zero());
}

TEST(Symmetrizers, AbsorbGenerators) {
  // sigma f_r = a s f_r, sigma g_r = -a s^-1 g_r
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i < r; ++i) {
      HeckeElement f = symmetrizer(r);
      f.mul_generator(i - 1, 1);
      EXPECT_EQ(f, symmetrizer(r) * (Scalar::a() * Scalar::s()));
      HeckeElement g = antisymmetrizer(r);
      g.mul_generator(i - 1, 1);
      EXPECT_EQ(g, antisymmetrizer(r) * (-Scalar::a() * Scalar::s(-1)));
    }
}

TEST(Idempotent, RowsAndColumns) {
  for (int r = 1; r <= 4; ++r) {
    EXPECT_EQ(build_idempotent(Partition::row(r))->element, symmetrizer(r));
    EXPECT_EQ(build_idempotent(Partition::column(r))->element, antisymmetrizer(r));
  }
}

TEST(Idempotent, SquareAndFramingDegree) {
  for (const auto& p : partitions_up_to(4)) {
    const HeckeElement& y = build_idempotent(p)->element;
    ASSERT_EQ(y * y, y) << p.str();
    ASSERT_EQ(y.fdeg(), 0) << p.str();
  }
}

TEST(Idempotent, ClosureIsNonzero) {
  for (const auto& p : partitions_up_to(3)) EXPECT_FALSE(markov_eval(build_idempotent(p)->element).is_zero());
}

TEST(Idempotent, Minimality) {
  std::mt19937 rng(8);
  for (const auto& p : partitions_up_to(4)) {
    const HeckeElement& y = build_idempotent(p)->element;
    const PermTable& t = perm_table(p.size());
    for (int k = 0; k < 3; ++k) {
      HeckeElement z = HeckeElement::basis(p.size(), rng() % t.size) +
                       HeckeElement::basis(p.size(), rng() % t.size, Scalar::s(2) - Scalar::a());
      ASSERT_TRUE((y * z * y).proportional_to(y).has_value()) << p.str();
    }
  }
}

TEST(Twist, Examples) {
  EXPECT_EQ(twist_eigenvalue(Partition::row(1)), Scalar::a() * Scalar::v(-1));
  for (int N = 2; N <= 5; ++N)
    EXPECT_EQ(twist_eigenvalue(Partition::row(N - 1)),
              Scalar::monomial((N - 1) * (N - 1), (N - 1) * (N - 2), -(N - 1)));
  for (const auto& p : partitions_up_to(3)) {
    const auto m = measured_twist(p);
    ASSERT_TRUE(m.has_value()) << p.str();
    EXPECT_EQ(*m, twist_eigenvalue(p)) << p.str();
  }
}

TEST(Weights, PartitionToWeight) {
  for (int N = 3; N <= 6; ++N) {
    auto w = partition_to_weight(Partition::column(N - 1), N - 1, 1);
    ASSERT_TRUE(w.has_value());
    std::vector<int> expected(static_cast<size_t>(N - 1), 0);
    expected.back() = 1;
    EXPECT_EQ(*w, expected);
  }
  EXPECT_FALSE(partition_to_weight(Partition({1, 1}), 1, 0).has_value());
  EXPECT_FALSE(partition_to_weight(Partition({2, 2, 2}), 2, 1).has_value());
  for (int m = 2; m <= 4; ++m)
    for (int a = 1; a <= 3; ++a) {
      auto w = partition_to_weight(Partition::rectangle(m, a), m, 1);
      ASSERT_TRUE(w.has_value());
      std::vector<int> expected(static_cast<size_t>(m), 0);
      expected.back() = a;
      EXPECT_EQ(*w, expected) << m << "x" << a;
    }
}

TEST(Weights, PartitionForColor) {
  EXPECT_EQ(partition_for_color(2, 1, {0}, 1), Partition({1, 1}));
  EXPECT_EQ(partition_for_color(2, 1, {0}, 2), Partition({2, 2}));
  EXPECT_EQ(partition_for_color(3, 1, {0, 0}, 1), Partition({1, 1, 1}));
  EXPECT_THROW(partition_for_color(2, 1, {0}, 0), SkeinError);
}
