#include <gtest/gtest.h>

#include <random>

#include "skein/braid.hpp"
#include "skein/colored.hpp"
#include "skein/hecke.hpp"
#include "skein/qlaurent.hpp"
#include "skein/supertrace.hpp"
#include "skein/young.hpp"

using namespace skein;

TEST(Supertrace, ClosureMatchesHeckeSpecialization) {
  std::mt19937 rng(21);
  for (int m : {2, 3})
    for (int i = 0; i < 12; ++i) {
      BraidWord b{static_cast<int>(rng() % 3) + 1, {}};
      const int len = b.strands > 1 ? static_cast<int>(rng() % 7) : 0;
      for (int k = 0; k < len; ++k) {
        const int g = static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1)) + 1;
        b.letters.push_back(rng() % 2 ? g : -g);
      }
      ASSERT_EQ(supertrace_closure(b, m), psi_delta(markov_eval(hecke_from_braid(b)), m - 1))
          << format_braid(b) << " m=" << m;
    }
}

TEST(Supertrace, UnknotIsSuperdimension) {
  for (int m : {2, 3, 4}) EXPECT_EQ(supertrace_closure({1, {}}, m), psi_delta(Scalar::delta_h(), m - 1));
}

TEST(Supertrace, CutOpenMatchesHeckeReduced) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"trefoil", "1"}, {"figure8", "1"}, {"hopf", "1"}, {"trefoil", "1,1"}, {"figure8", "1,1"},
      {"t24", "1,1"},   {"trefoil", "2,2"}};
  for (const auto& [name, p] : cases) {
    const ColoredLink cl = make_colored(*named_braid(name), Partition::parse(p));
    EXPECT_EQ(supertrace_reduced(cl, 2), psi_delta(reduced_colored_homfly(cl, 0), 1)) << name << " " << p;
  }
  const ColoredLink c3 = make_colored(*named_braid("trefoil"), Partition::parse("1,1,1"));
  EXPECT_EQ(supertrace_reduced(c3, 3), psi_delta(reduced_colored_homfly(c3, 0), 2));
}
