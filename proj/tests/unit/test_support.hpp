#pragma once

#include <random>

#include "skein/scalar.hpp"

namespace skein::test_support {

/// Laurent polynomial in a, s, v with small random exponents and coefficients.
inline Poly random_poly(std::mt19937& rng, int terms = 4, bool with_a = true) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    const int a = with_a ? static_cast<int>(rng() % 5) - 2 : 0;
    const int s = static_cast<int>(rng() % 7) - 3;
    const int v = static_cast<int>(rng() % 5) - 2;
    const int64_t c = static_cast<int64_t>(rng() % 9) - 4;
    ts.push_back({monomial::pack({a, s, v, 0}), Rational(c == 0 ? 1 : c)});
  }
  return Poly::from_unsorted(std::move(ts));
}

/// Random fraction whose denominator is built from factors that never vanish.
inline Scalar random_scalar(std::mt19937& rng, bool with_a = true) {
  Poly num = random_poly(rng, 4, with_a);
  if (num.is_zero()) num = Poly(Rational(1));
  Poly den = Poly(Rational(1));
  if (rng() % 2) den = Poly::monomial({0, 2, 0, 0}) + Poly(Rational(3));
  if (rng() % 2) den *= Poly::monomial({0, 0, 1, 0}) + Poly(Rational(2));
  return Scalar(num, den);
}

}  // namespace skein::test_support
