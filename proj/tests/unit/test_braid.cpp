#include <gtest/gtest.h>

#include <random>

#include "skein/braid.hpp"
#include "skein/errors.hpp"

using namespace skein;

TEST(Braid, ParseExamples) {
  const BraidWord t = parse_braid("BR[2; 1 1 1]");
  EXPECT_EQ(t.strands, 2);
  EXPECT_EQ(t.letters, (std::vector<int>{1, 1, 1}));
  const BraidWord f = parse_braid("BR[3; 1 -2 1 -2]");
  EXPECT_EQ(f.letters, (std::vector<int>{1, -2, 1, -2}));
  EXPECT_EQ(parse_braid(" BR [ 3 ;1,-2 ,1 -2 ] "), f);
  EXPECT_EQ(parse_braid("BR[4;]").letters.size(), 0u);
}

TEST(Braid, FormatRoundTrip) {
  for (const char* s : {"BR[2; 1 1 1]", "BR[3; 1 -2 1 -2]", "BR[1;]"}) {
    EXPECT_EQ(format_braid(parse_braid(s)), s);
    EXPECT_EQ(parse_braid(format_braid(parse_braid(s))), parse_braid(s));
  }
}

TEST(Braid, Errors) {
  EXPECT_THROW(parse_braid("BR[2; 3]").validate(), SkeinError);
  try {
    parse_braid("BR[2; 3]").validate();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexError);
  }
  EXPECT_THROW(parse_braid("BR[2; 0]").validate(), SkeinError);
  EXPECT_THROW(parse_braid("BR[2 1 1]"), ParseError);
  EXPECT_THROW(parse_braid("XY[2; 1]"), ParseError);
  EXPECT_THROW(parse_braid("BR[2; 1 x]"), ParseError);
}

TEST(Braid, JsonRoundTrip) {
  const BraidWord b = parse_braid("BR[4; 3 -1 2]");
  EXPECT_EQ(BraidWord::from_json(b.to_json()), b);
}

TEST(Closure, Examples) {
  const LinkPresentation t = analyze_closure(parse_braid("BR[2; 1 1 1]"));
  EXPECT_EQ(t.num_components(), 1);
  EXPECT_EQ(t.fdeg, 3);
  EXPECT_EQ(t.lk[0][0], 3);

  const LinkPresentation h = analyze_closure(parse_braid("BR[2; 1 1]"));
  EXPECT_EQ(h.num_components(), 2);
  EXPECT_EQ(h.lk[0][1], 1);
  EXPECT_EQ(h.lk[1][0], 1);
  EXPECT_EQ(h.lk[0][0], 0);
  EXPECT_EQ(h.lk[1][1], 0);
  EXPECT_EQ(h.fdeg, 2);

  const LinkPresentation f = analyze_closure(parse_braid("BR[3; 1 -2 1 -2]"));
  EXPECT_EQ(f.num_components(), 1);
  EXPECT_EQ(f.fdeg, 0);
}

TEST(Closure, ComponentsAndPermutation) {
  // sigma_1 on three strands: strands 1,2 form one cycle, strand 3 another
  const LinkPresentation L = analyze_closure(parse_braid("BR[3; 1]"));
  EXPECT_EQ(L.components, (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(L.component_of, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(closure_permutation(parse_braid("BR[3; 1 2]")), (std::vector<int>{2, 0, 1}));
}

TEST(Cable, Examples) {
  const LinkPresentation t = analyze_closure(parse_braid("BR[2; 1 1 1]"));
  EXPECT_EQ(cable_braid(t, {1}), t.braid);
  const BraidWord c = cable_braid(t, {2});
  EXPECT_EQ(c.strands, 4);
  EXPECT_EQ(analyze_closure(c).fdeg, 12);

  const LinkPresentation one = analyze_closure(parse_braid("BR[2; 1]"));
  const BraidWord c1 = cable_braid(one, {2});
  EXPECT_EQ(c1.letters.size(), 4u);
  for (int g : c1.letters) EXPECT_GT(g, 0);
}

TEST(Cable, NegativeCrossingsFlipEveryLetter) {
  const LinkPresentation L = analyze_closure(parse_braid("BR[2; -1 -1]"));
  const BraidWord c = cable_braid(L, {2, 3});
  EXPECT_EQ(c.strands, 5);
  EXPECT_EQ(c.letters.size(), 12u);
  for (int g : c.letters) EXPECT_LT(g, 0);
}

TEST(Cable, FramingDegreeIsQuadraticForm) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord b{static_cast<int>(rng() % 3) + 2, {}};
    const int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      const int g = static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1)) + 1;
      b.letters.push_back(rng() % 2 ? g : -g);
    }
    const LinkPresentation L = analyze_closure(b);
    std::vector<int> w;
    for (int k = 0; k < L.num_components(); ++k) w.push_back(static_cast<int>(rng() % 3) + 1);
    int expected = 0;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) expected += w[i] * L.lk[i][j] * w[j];
    const LinkPresentation C = analyze_closure(cable_braid(L, w));
    ASSERT_EQ(C.fdeg, expected) << format_braid(b);
    int total = 0;
    for (int x : w) total += x;
    ASSERT_EQ(C.braid.strands, [&] {
      int s = 0;
      for (int j = 0; j < b.strands; ++j) s += w[static_cast<size_t>(L.component_of[static_cast<size_t>(j)])];
      return s;
    }());
  }
}

TEST(Cable, StrandWidthsMustAgreeOnAComponent) {
  const LinkPresentation t = analyze_closure(parse_braid("BR[2; 1 1 1]"));
  try {
    cable_braid_by_strand(t, {1, 2});
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WidthMismatch);
  }
  EXPECT_EQ(cable_braid_by_strand(t, {2, 2}), cable_braid(t, {2}));
}

TEST(Catalogue, NamedBraids) {
  EXPECT_EQ(*named_braid("trefoil"), parse_braid("BR[2; 1 1 1]"));
  EXPECT_EQ(*named_braid("figure8"), parse_braid("BR[3; 1 -2 1 -2]"));
  EXPECT_EQ(analyze_closure(*named_braid("hopf")).num_components(), 2);
  EXPECT_EQ(analyze_closure(*named_braid("t24")).lk[0][1], 2);
  EXPECT_FALSE(named_braid("nonsense").has_value());
}
