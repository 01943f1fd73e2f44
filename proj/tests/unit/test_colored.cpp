#include <gtest/gtest.h>

#include "skein/braid.hpp"
#include "skein/colored.hpp"
#include "skein/errors.hpp"
#include "skein/hecke.hpp"
#include "skein/oracles.hpp"
#include "skein/perm.hpp"
#include "skein/qlaurent.hpp"
#include "skein/young.hpp"

using namespace skein;

namespace {

Scalar trefoil_value() {
  return Scalar::a(3) * Scalar::delta_h() *
         (Scalar::v(-1) * Scalar::s(2) + Scalar::v(-1) * Scalar::s(-2) - Scalar::v());
}

/// Closure of Y times the word, expanded over the basis braids of Y and
/// evaluated term by term with the skein-switching oracle.
Scalar closure_by_naive_skein(const HeckeElement& Y, const BraidWord& cabled) {
  const PermTable& t = perm_table(Y.strands());
  Scalar total(0);
  for (uint32_t r = 0; r < t.size; ++r) {
    const Scalar c = Y.coefficient(r);
    if (c.is_zero()) continue;
    BraidWord w{Y.strands(), {}};
    for (int i : t.reduced_word(r)) w.letters.push_back(i + 1);
    w.letters.insert(w.letters.end(), cabled.letters.begin(), cabled.letters.end());
    total += c * naive_skein_homfly(w);
  }
  return total;
}

}  // namespace

TEST(Colored, UncoloredExamples) {
  EXPECT_EQ(colored_unknot(Partition::row(1)), Scalar::delta_h());
  EXPECT_EQ(colored_homfly(make_colored(*named_braid("trefoil"), Partition::row(1))), trefoil_value());
}

TEST(Colored, UnknotGivesQuantumDimension) {
  const QFraction q2 = QLaurent::monomial(2) + QLaurent(1) + QLaurent::monomial(-2);
  EXPECT_EQ(psi_delta(colored_unknot(Partition::row(2)), 2), q2);
  for (int m : {2, 3, 4})
    for (const char* p : {"1", "2", "1,1", "2,1", "3"})
      EXPECT_EQ(psi_delta(colored_unknot(Partition::parse(p)), m), quantum_weyl_dimension(Partition::parse(p), m))
          << p << " m=" << m;
}

TEST(Colored, HopfCableAgainstNaiveSkein) {
  // two components with different colors, every basis braid of the idempotent
  // pushed through the oracle separately
  const std::vector<std::pair<std::string, std::string>> colorings = {{"2", "1"}, {"1,1", "2"}, {"2", "2"}};
  for (const auto& [c1, c2] : colorings) {
    const ColoredLink cl = make_colored(*named_braid("hopf"), {Partition::parse(c1), Partition::parse(c2)});
    const BraidWord cabled = cable_braid(cl.link, cl.widths());
    const HeckeElement Y = tensor(build_idempotent(cl.colors[0])->element, build_idempotent(cl.colors[1])->element);
    EXPECT_EQ(colored_homfly(cl), closure_by_naive_skein(Y, cabled)) << c1 << ";" << c2;
  }
}

TEST(Colored, FramingDegreeOfCable) {
  for (const char* name : {"trefoil", "figure8", "hopf", "t24"})
    for (const char* p : {"1", "2", "1,1"}) {
      const ColoredLink cl = make_colored(*named_braid(name), Partition::parse(p));
      const Scalar h = colored_homfly(cl);
      EXPECT_EQ(h.fdeg(), cl.cable_fdeg()) << name << " " << p;
    }
}

TEST(Colored, IdempotentAbsorption) {
  // y on one strand of each component's cable equals y on every strand
  for (const char* p : {"2", "1,1"}) {
    const ColoredLink cl = make_colored(*named_braid("trefoil"), Partition::parse(p));
    const BraidWord cabled = cable_braid(cl.link, cl.widths());
    const HeckeElement& y = build_idempotent(cl.colors[0])->element;
    HeckeElement one = tensor(y, HeckeElement::identity(2));
    one.mul_word(cabled.letters);
    EXPECT_EQ(markov_eval(one), colored_homfly(cl)) << p;
  }
}

TEST(Colored, SplitUnionMultiplies) {
  // trefoil on strands 1,2 and a separate circle on strand 3
  const ColoredLink cl = make_colored(BraidWord{3, {1, 1, 1}}, {Partition::row(2), Partition::parse("1,1")});
  const Scalar expected =
      colored_homfly(make_colored(*named_braid("trefoil"), Partition::row(2))) * colored_unknot(Partition::parse("1,1"));
  EXPECT_EQ(colored_homfly(cl), expected);
}

TEST(Colored, RankLevelDuality) {
  // figure-eight cables stay within the ceiling up to size 2
  for (const char* p : {"2", "1,1"}) {
    const ColoredLink cl = make_colored(*named_braid("figure8"), Partition::parse(p));
    EXPECT_EQ(colored_homfly(cl).theta(), colored_homfly(cl.conjugate())) << p;
  }
}

TEST(Reduced, Examples) {
  for (const char* p : {"1", "2", "1,1", "2,1", "3", "1,1,1"})
    EXPECT_EQ(reduced_colored_homfly(make_colored(BraidWord{1, {}}, Partition::parse(p)), 0), Scalar(1)) << p;
  const Scalar expected = Scalar::a(3) * (Scalar::v(-1) * Scalar::s(2) + Scalar::v(-1) * Scalar::s(-2) - Scalar::v());
  EXPECT_EQ(reduced_colored_homfly(make_colored(*named_braid("trefoil"), Partition::row(1)), 0), expected);
}

TEST(Reduced, UnframedKnotsArePolynomial) {
  for (const char* name : {"trefoil", "figure8"})
    for (const char* p : {"1", "2", "1,1"}) {
      const ColoredLink cl = make_colored(*named_braid(name), Partition::parse(p));
      const Scalar u = unframe(reduced_colored_homfly(cl, 0), cl);
      EXPECT_TRUE(u.is_polynomial()) << name << " " << p << ": " << u.str();
    }
}

TEST(Reduced, Errors) {
  const ColoredLink hopf = make_colored(*named_braid("hopf"), Partition::row(1));
  try {
    reduced_colored_homfly(hopf, 2);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexError);
  }
  try {
    make_colored(*named_braid("hopf"), std::vector<Partition>{Partition::row(1)});
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Unframe, Examples) {
  const ColoredLink u = make_colored(BraidWord{1, {}}, Partition::row(1));
  EXPECT_EQ(unframe(colored_homfly(u), u), Scalar::delta_h());
  const ColoredLink t = make_colored(*named_braid("trefoil"), Partition::row(1));
  const Scalar expected =
      Scalar::delta_h() * (Scalar::v(2) * Scalar::s(2) + Scalar::v(2) * Scalar::s(-2) - Scalar::v(4));
  EXPECT_EQ(unframe(colored_homfly(t), t), expected);
  EXPECT_EQ(unframe(colored_homfly(t), t).fdeg(), 0);
}

TEST(Unframe, RejectsMixedColors) {
  const ColoredLink cl = make_colored(*named_braid("hopf"), {Partition::row(1), Partition::row(2)});
  try {
    unframe(colored_homfly(cl), cl);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedColors);
  }
}

TEST(Colored, BudgetErrorPastTheStrandCeiling) {
  const ColoredLink cl = make_colored(*named_braid("figure8"), Partition::rectangle(2, 2));  // 12 strands
  try {
    colored_homfly(cl);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetError);
  }
}
