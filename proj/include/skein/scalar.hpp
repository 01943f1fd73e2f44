#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "skein/poly.hpp"

namespace skein {

/// Variable slots of the coefficient ring.
enum Var : int { kA = 0, kS = 1, kV = 2 };

/// Exact fraction of Laurent polynomials in (a, s, v) over the rationals.
///
/// Every constructor and operation leaves the value canonicalized: monomial
/// factors are pulled out of the denominator, cyclotomic and other
/// univariate content in s and v is cancelled, and the denominator's leading
/// coefficient is 1. This is not a full gcd normal form, so equality always
/// cross-multiplies.
class Scalar {
 public:
  Scalar() : den_(Rational(1)) {}
  Scalar(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  Scalar(int64_t c) : Scalar(Rational(c)) {}                      // NOLINT
  Scalar(int c) : Scalar(Rational(c)) {}                          // NOLINT
  explicit Scalar(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  Scalar(Poly num, Poly den);

  /// c * a^i s^j v^k
  static Scalar monomial(int a, int s, int v, Rational c = 1);
  static Scalar a(int p = 1) { return monomial(p, 0, 0); }
  static Scalar s(int p = 1) { return monomial(0, p, 0); }
  static Scalar v(int p = 1) { return monomial(0, 0, p); }
  /// s - s^-1
  static Scalar z();
  /// Circle value (v^-1 - v) / (s - s^-1).
  static Scalar delta_h();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is 1 after canonicalization.
  bool is_polynomial() const { return den_.is_constant(); }
  bool depends_on(Var x) const { return num_.depends_on(x) || den_.depends_on(x); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;
  Scalar pow(int k) const;

  /// Ring involution s -> 1/s, a -> -a, v -> -v.
  Scalar theta() const;

  /// Degree in a when numerator and denominator are a-homogeneous.
  std::optional<int> fdeg() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Scalar from_json(const nlohmann::json& j);

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

/// Quantum integer (s^k - s^-k)/(s - s^-1) as a Laurent polynomial.
Scalar qint(int k);
Scalar qfact(int k);
Scalar qbinom(int m, int l);

/// The involution applied to a bare polynomial.
Poly theta_poly(const Poly& p);

/// Polynomial <-> JSON term lists shared by the serializers.
nlohmann::json poly_terms_json(const Poly& p, int nvars);
Poly poly_from_terms_json(const nlohmann::json& j, int nvars);

}  // namespace skein
