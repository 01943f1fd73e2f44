#pragma once

#include <optional>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

/// Dense univariate polynomial c[0] + c[1] x + ... over the rationals. Used for
/// gcds, exact division and cyclotomic factor stripping.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(Rational c) { return UPoly({std::move(c)}); }
  /// x^n - 1
  static UPoly x_pow_minus_one(int n);
  /// n-th cyclotomic polynomial, cached.
  static const UPoly& cyclotomic(int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  const Rational& operator[](size_t i) const { return c_[i]; }

  UPoly monic() const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  bool operator==(const UPoly& o) const;

  /// Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  std::optional<UPoly> divide_exact(const UPoly& d) const;

  /// Monic gcd (zero if both are zero).
  static UPoly gcd(const UPoly& a, const UPoly& b);
  /// Same gcd, but peels cyclotomic factors by trial division before falling
  /// back to Euclid. Much cheaper on products of quantum integers.
  static UPoly gcd_cyclotomic_first(UPoly a, UPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace skein
