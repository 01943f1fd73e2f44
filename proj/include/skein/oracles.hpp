#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "skein/braid.hpp"
#include "skein/poly.hpp"
#include "skein/qlaurent.hpp"
#include "skein/scalar.hpp"
#include "skein/young.hpp"

namespace skein {

inline constexpr int kSkeinCrossingCap = 12;

/// Framed HOMFLY-PT of a braid closure by switching crossings of the closed
/// diagram until it is descending. Independent of the Hecke algebra code.
Scalar naive_skein_homfly(const BraidWord& b);

/// Laurent polynomial with integer coefficients, variable i = t_{i+1}.
struct AlexanderValue {
  int num_vars = 1;
  Poly poly;
  /// Knots: symmetric with value 1 at t = 1. Links: defined up to +-monomials.
  bool exact = true;

  std::string str() const;
  nlohmann::json to_json() const;
};

/// Reduced Burau determinant, normalized. Throws NotAKnot.
AlexanderValue alexander_knot(const BraidWord& b);

/// Conway function of a knot, Delta(t^2) / (t - t^-1), in variable t.
struct ConwayValue {
  Poly num;
  Poly den;
  nlohmann::json to_json() const;
};
ConwayValue conway_knot(const BraidWord& b);

/// Multivariable Alexander polynomial from the Fox Jacobian of the Artin
/// action, one variable per component. Up to units when there are at least two
/// components; for knots this is the one-variable polynomial up to units.
AlexanderValue multivariable_alexander(const LinkPresentation& L);

/// x = +-monomial * y
bool unit_equivalent(const Poly& x, const Poly& y);

/// Substitutes t_i -> t_i^k in every variable.
Poly power_substitute(const Poly& p, int k);

/// <k> = q^k - q^-k
QLaurent bracket(int k);

/// Quantum dimension of the sl(m) module of highest weight lambda from the
/// hook-content product over cells.
QFraction quantum_weyl_dimension(const Partition& lambda, int m);

}  // namespace skein
