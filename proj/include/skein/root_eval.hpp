#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "json.hpp"
#include "skein/poly.hpp"
#include "skein/qlaurent.hpp"

namespace skein {

using Real = boost::multiprecision::mpfr_float;

inline constexpr int kDefaultBits = 192;

/// Complex number with MPFR components. Only the handful of operations the
/// evaluator and the identity checks need.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Complex operator/(const Complex& o) const;
  Complex conj() const { return {re, -im}; }
  Real abs() const;

  nlohmann::json to_json() const;
};

/// Sets the working precision (in bits) of the calling thread.
void set_precision_bits(int bits);

Real to_real(const Rational& c);

/// e^(i pi k / M), reduced exactly modulo 2M before the trig call.
Complex unit_root(int64_t k, int64_t M);

/// Value of a q-Laurent polynomial at q = e^(+-i pi / N). Fractional powers
/// use the principal branch q^(1/D) = e^(+-i pi / (N D)). If `scale` is given
/// it receives the largest term magnitude.
Complex eval_laurent(const QLaurent& x, int N, bool conjugate, Real* scale = nullptr);

/// Value of a q-fraction at q = e^(+-i pi / N). Throws PoleAtRoot when the
/// denominator is below 1e-30 relative to its largest term.
Complex eval_root(const QFraction& x, int N, bool conjugate, int bits = kDefaultBits);

/// Value of a multivariate Laurent polynomial with variable i set to
/// e^(i pi k[i] / M).
Complex eval_poly_at_roots(const Poly& p, const std::vector<int64_t>& k, int64_t M);

/// |x - y| / max(1, |x|, |y|)
double relative_deviation(const Complex& x, const Complex& y);

}  // namespace skein
