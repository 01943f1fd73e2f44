#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/rational.hpp"
#include "skein/scalar.hpp"

namespace skein {

/// Laurent polynomial in q with exponents k/D sharing one denominator D.
/// Terms are sorted by exponent numerator and never zero. D is kept minimal.
class QLaurent {
 public:
  using TermList = std::vector<std::pair<int64_t, Rational>>;

  QLaurent() = default;
  QLaurent(Rational c);  // NOLINT
  QLaurent(int64_t c) : QLaurent(Rational(c)) {}  // NOLINT
  /// c * q^(k/D)
  static QLaurent monomial(int64_t k, int64_t D = 1, Rational c = 1);
  static QLaurent from_terms(int64_t D, TermList terms);

  int64_t denom() const { return D_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when every exponent is an integer.
  bool is_integral() const { return D_ == 1; }

  /// Same value with exponent denominator D (a multiple of the current one).
  TermList terms_at(int64_t D) const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent x, const QLaurent& y) { return x += y; }
  friend QLaurent operator-(QLaurent x, const QLaurent& y) { return x -= y; }
  friend QLaurent operator*(const QLaurent& x, const QLaurent& y);
  friend bool operator==(const QLaurent& x, const QLaurent& y) {
    return x.D_ == y.D_ && x.terms_ == y.terms_;
  }
  QLaurent pow(int k) const;
  /// Multiplies by q^(k/D).
  QLaurent shifted(int64_t k, int64_t D) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static QLaurent from_json(const nlohmann::json& j);

 private:
  void normalize();
  int64_t D_ = 1;
  TermList terms_;
};


/// Quotient of two QLaurent values with the q-gcd cancelled.
class QFraction {
 public:
  QFraction() : den_(1) {}
  QFraction(QLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  QFraction(QLaurent num, QLaurent den);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a constant after cancellation.
  bool is_laurent() const { return den_.is_monomial() && den_.terms()[0].first == 0; }

  QFraction operator-() const { return QFraction(-num_, den_); }
  friend QFraction operator+(const QFraction& x, const QFraction& y);
  friend QFraction operator-(const QFraction& x, const QFraction& y) { return x + (-y); }
  friend QFraction operator*(const QFraction& x, const QFraction& y);
  friend QFraction operator/(const QFraction& x, const QFraction& y);
  friend bool operator==(const QFraction& x, const QFraction& y);
  friend bool operator!=(const QFraction& x, const QFraction& y) { return !(x == y); }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void reduce();
  QLaurent num_;
  QLaurent den_;
};

/// s -> q, v -> q^(-delta), a -> q^(-1/delta).
QFraction psi_delta(const Scalar& x, int delta);
QLaurent psi_delta_poly(const Poly& p, int delta);

}  // namespace skein
