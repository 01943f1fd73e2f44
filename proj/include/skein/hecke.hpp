#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "skein/braid.hpp"
#include "skein/perm.hpp"
#include "skein/scalar.hpp"

namespace skein {

/// Element of H_n in the positive permutation braid basis: scale * sum p_pi w_pi.
/// The p_pi are Laurent polynomials in a and s; fractions live in `scale`.
/// Coefficients are stored densely, indexed by permutation rank.
class HeckeElement {
 public:
  explicit HeckeElement(int n = 1);
  static HeckeElement identity(int n) { return basis(n, 0); }
  static HeckeElement basis(int n, uint32_t rank, Scalar c = 1);

  int strands() const { return n_; }
  const Scalar& scale() const { return scale_; }
  const std::vector<Poly>& coeffs() const { return c_; }
  /// Sets the polynomial part of the coefficient of w_pi (the scale still applies).
  void set_coeff(uint32_t rank, Poly p) { c_.at(rank) = std::move(p); }
  void set_scale(Scalar s) { scale_ = std::move(s); }
  /// Full coefficient of w_pi as a Scalar.
  Scalar coefficient(uint32_t rank) const;
  size_t support_size() const;
  bool is_zero() const;

  /// Right multiplication by sigma_{i+1}^{sign} (0-based i).
  void mul_generator(int i, int sign);
  /// Right multiplication by a braid word on the same number of strands.
  void mul_word(const std::vector<int>& letters);
  /// Right multiplication by the positive permutation braid w_pi.
  void mul_basis(uint32_t rank);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Scalar& c);
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }
  friend HeckeElement operator*(HeckeElement x, const Scalar& c) { return x *= c; }
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y);

  /// Side-by-side product: w_pi (x) w_sigma = w_{pi (+) sigma}.
  friend HeckeElement tensor(const HeckeElement& x, const HeckeElement& y);

  /// Framing degree when every term has the same a-degree plus length.
  std::optional<int> fdeg() const;

  /// Coefficients through the involution.
  HeckeElement theta() const;

  /// Is this element c * o for a scalar c? Returns c.
  std::optional<Scalar> proportional_to(const HeckeElement& o) const;

  nlohmann::json to_json() const;
  static HeckeElement from_json(const nlohmann::json& j);

 private:
  int n_;
  Scalar scale_;
  std::vector<Poly> c_;
};

/// Image of a braid word in H_n.
HeckeElement hecke_from_braid(const BraidWord& b);

/// Hecke inverse of the positive permutation braid w_pi.
HeckeElement basis_inverse(int n, uint32_t rank);

/// Closure value (framed HOMFLY-PT of the closure of x).
Scalar markov_eval(const HeckeElement& x);

/// Coefficients through the involution, basis braids fixed.
HeckeElement apply_theta(const HeckeElement& x);

}  // namespace skein
