#include "skein/root_eval.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "skein/errors.hpp"

namespace skein {

Complex Complex::operator/(const Complex& o) const {
  Real d = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real Complex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

nlohmann::json Complex::to_json() const {
  return {{"re", re.convert_to<double>()}, {"im", im.convert_to<double>()}, {"abs", abs().convert_to<double>()},
          {"re_str", re.str(30)}, {"im_str", im.str(30)}};
}

void set_precision_bits(int bits) {
  Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

Real to_real(const Rational& c) {
  Real r(c.numerator().get_str());
  if (!c.is_integer()) r /= Real(c.denominator().get_str());
  return r;
}

Complex unit_root(int64_t k, int64_t M) {
  const int64_t period = 2 * M;
  int64_t r = ((k % period) + period) % period;
  // Exact values at the quarter turns avoid spurious roundoff in poles.
  if (r == 0) return {Real(1), Real(0)};
  if (2 * r == period) return {Real(-1), Real(0)};
  if (4 * r == period) return {Real(0), Real(1)};
  if (4 * r == 3 * period) return {Real(0), Real(-1)};
  Real angle = boost::math::constants::pi<Real>() * Real(r) / Real(M);
  return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

Complex eval_laurent(const QLaurent& x, int N, bool conjugate, Real* scale) {
  const int64_t M = static_cast<int64_t>(N) * x.denom();
  Complex sum;
  Real largest(0);
  for (const auto& [k, c] : x.terms()) {
    Complex z = unit_root(conjugate ? -k : k, M);
    Real cr = to_real(c);
    sum = sum + Complex(z.re * cr, z.im * cr);
    Real mag = boost::multiprecision::abs(cr);
    if (mag > largest) largest = mag;
  }
  if (scale) *scale = largest;
  return sum;
}

Complex eval_root(const QFraction& x, int N, bool conjugate, int bits) {
  if (N < 2) throw SkeinError(ErrorKind::InvalidArgument, "root order N must be at least 2");
  set_precision_bits(bits);
  Real scale;
  Complex den = eval_laurent(x.den(), N, conjugate, &scale);
  if (den.abs() < Real("1e-30") * scale)
    throw SkeinError(ErrorKind::PoleAtRoot, "denominator vanishes at q = e^(i pi/" + std::to_string(N) + ")");
  Complex num = eval_laurent(x.num(), N, conjugate);
  return num / den;
}

Complex eval_poly_at_roots(const Poly& p, const std::vector<int64_t>& k, int64_t M) {
  Complex sum;
  for (const auto& t : p.terms()) {
    int64_t e = 0;
    for (size_t i = 0; i < k.size(); ++i) e += k[i] * monomial::exponent(t.key, static_cast<int>(i));
    Complex z = unit_root(e, M);
    Real c = to_real(t.coeff);
    sum = sum + Complex(z.re * c, z.im * c);
  }
  return sum;
}

double relative_deviation(const Complex& x, const Complex& y) {
  Real d = (x - y).abs();
  Real m = std::max({Real(1), x.abs(), y.abs()});
  return (d / m).convert_to<double>();
}

}  // namespace skein
