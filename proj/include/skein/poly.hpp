#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

inline constexpr int kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

/// Packed exponent vector. Each variable takes a 16-bit field with a bias of
/// 0x8000; variable 0 sits in the most significant field, so comparing keys as
/// unsigned integers is lexicographic comparison of exponent vectors.
namespace monomial {

inline constexpr int kBias = 0x8000;
inline constexpr int kLimit = 0x7fff;

constexpr int shift_of(int var) { return 16 * (kMaxVars - 1 - var); }

uint64_t pack(const Exponents& e);
Exponents unpack(uint64_t key);

inline int exponent(uint64_t key, int var) {
  return static_cast<int>((key >> shift_of(var)) & 0xffffu) - kBias;
}

/// Signed offset that, added to a key, multiplies the monomial by x^e.
int64_t delta(const Exponents& e);

inline const uint64_t kOne = pack(Exponents{});

}  // namespace monomial

struct Term {
  uint64_t key;
  Rational coeff;
};

/// Sparse Laurent polynomial in up to four variables with rational
/// coefficients. Terms are kept sorted by key with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  static Poly monomial(const Exponents& e, Rational c = 1);
  static Poly variable(int var, int power = 1);
  /// Takes ownership of terms that are already sorted, merged and nonzero.
  static Poly from_sorted(std::vector<Term> terms);
  /// Sorts, merges equal keys and drops zeros.
  static Poly from_unsorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].key == monomial::kOne); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of the constant term (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  bool depends_on(int var) const;
  int min_degree(int var) const;
  int max_degree(int var) const;
  Exponents min_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Multiplies by the monomial x^e (order preserving, no re-sort).
  Poly shifted(const Exponents& e) const;
  Poly shifted_key(int64_t delta) const;
  /// this += c * x^e * p.
  void add_scaled_shift(const Poly& p, int64_t delta, const Rational& c);

  Poly pow(int k) const;

  /// Applies an exponent/coefficient rewrite to every term; result re-sorted.
  Poly transform(const std::function<void(Exponents&, Rational&)>& fn) const;

  /// Quotient if `den` divides `num` exactly in the Laurent ring, else nullopt.
  static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

  size_t hash() const;
  std::string str(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace skein
