#include "skein/qlaurent.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "skein/errors.hpp"
#include "skein/upoly.hpp"

namespace skein {
namespace {

QLaurent::TermList collect(std::map<int64_t, Rational>& acc) {
  QLaurent::TermList out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  return out;
}

UPoly to_upoly(const QLaurent::TermList& t, int64_t lo) {
  std::vector<Rational> c(static_cast<size_t>(t.back().first - lo) + 1);
  for (const auto& [k, v] : t) c[static_cast<size_t>(k - lo)] = v;
  return UPoly(std::move(c));
}

QLaurent::TermList from_upoly(const UPoly& u, int64_t lo) {
  QLaurent::TermList out;
  for (int i = 0; i <= u.degree(); ++i)
    if (!u[static_cast<size_t>(i)].is_zero()) out.emplace_back(lo + i, u[static_cast<size_t>(i)]);
  return out;
}

}  // namespace

QLaurent::QLaurent(Rational c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

QLaurent QLaurent::monomial(int64_t k, int64_t D, Rational c) {
  QLaurent r;
  if (D <= 0) throw SkeinError(ErrorKind::InvalidArgument, "exponent denominator must be positive");
  r.D_ = D;
  if (!c.is_zero()) r.terms_.emplace_back(k, std::move(c));
  r.normalize();
  return r;
}

QLaurent QLaurent::from_terms(int64_t D, TermList terms) {
  std::map<int64_t, Rational> acc;
  for (auto& [k, c] : terms) acc[k] += c;
  QLaurent r;
  r.D_ = D;
  r.terms_ = collect(acc);
  r.normalize();
  return r;
}

void QLaurent::normalize() {
  if (terms_.empty()) {
    D_ = 1;
    return;
  }
  int64_t g = D_;
  for (const auto& t : terms_) g = std::gcd(g, t.first);
  if (g > 1) {
    D_ /= g;
    for (auto& t : terms_) t.first /= g;
  }
}

QLaurent::TermList QLaurent::terms_at(int64_t D) const {
  if (D % D_ != 0) throw std::logic_error("incompatible exponent denominator");
  const int64_t f = D / D_;
  TermList out = terms_;
  for (auto& t : out) t.first *= f;
  return out;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.is_zero()) return *this;
  const int64_t L = std::lcm(D_, o.D_);
  std::map<int64_t, Rational> acc;
  for (auto& [k, c] : terms_at(L)) acc[k] += c;
  for (auto& [k, c] : o.terms_at(L)) acc[k] += c;
  D_ = L;
  terms_ = collect(acc);
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& x, const QLaurent& y) {
  if (x.is_zero() || y.is_zero()) return QLaurent();
  const int64_t L = std::lcm(x.D_, y.D_);
  std::map<int64_t, Rational> acc;
  auto xt = x.terms_at(L), yt = y.terms_at(L);
  for (const auto& [i, a] : xt)
    for (const auto& [j, b] : yt) acc[i + j] += a * b;
  QLaurent r;
  r.D_ = L;
  r.terms_ = collect(acc);
  r.normalize();
  return r;
}

QLaurent QLaurent::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of QLaurent");
  QLaurent r(1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

QLaurent QLaurent::shifted(int64_t k, int64_t D) const {
  return *this * monomial(k, D);
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (it->first == 0) {
      os << c;
      continue;
    }
    if (!c.is_one()) os << c << "*";
    os << "q";
    Rational e(it->first, D_);
    if (!e.is_one()) os << "^" << (e.is_integer() ? e.numerator().get_str() : "(" + e.str() + ")");
  }
  return os.str();
}

nlohmann::json QLaurent::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_) arr.push_back({{"e", k}, {"c", c.str()}});
  return {{"var", "q"}, {"D", D_}, {"terms", arr}};
}

QLaurent QLaurent::from_json(const nlohmann::json& j) {
  TermList t;
  for (const auto& x : j.at("terms")) t.emplace_back(x.at("e").get<int64_t>(), Rational::parse(x.at("c").get<std::string>()));
  return from_terms(j.at("D").get<int64_t>(), std::move(t));
}

QFraction::QFraction(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

void QFraction::reduce() {
  if (den_.is_zero()) throw SkeinError(ErrorKind::SpecializationPole, "denominator specializes to zero");
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  const int64_t L = std::lcm(num_.denom(), den_.denom());
  auto nt = num_.terms_at(L), dt = den_.terms_at(L);
  const int64_t n0 = nt.front().first, d0 = dt.front().first;
  UPoly N = to_upoly(nt, n0), D = to_upoly(dt, d0);
  if (D.degree() > 0 && N.degree() > 0) {
    UPoly g = UPoly::gcd_cyclotomic_first(N, D);
    if (g.degree() > 0) {
      N = *N.divide_exact(g);
      D = *D.divide_exact(g);
    }
  }
  Rational inv = D.lead().inverse();
  std::vector<Rational> nc = N.coeffs(), dc = D.coeffs();
  for (auto& c : nc) c *= inv;
  for (auto& c : dc) c *= inv;
  N = UPoly(std::move(nc));
  D = UPoly(std::move(dc));
  if (D.degree() == 0) {
    Rational dinv = D[0].inverse();
    num_ = QLaurent::from_terms(L, from_upoly(N, n0 - d0)) * QLaurent(dinv);
    den_ = QLaurent(1);
    return;
  }
  num_ = QLaurent::from_terms(L, from_upoly(N, n0 - d0));
  den_ = QLaurent::from_terms(L, from_upoly(D, 0));
}

QFraction operator+(const QFraction& x, const QFraction& y) {
  if (x.den_ == y.den_) return QFraction(x.num_ + y.num_, x.den_);
  return QFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QFraction operator*(const QFraction& x, const QFraction& y) {
  return QFraction(x.num_ * y.num_, x.den_ * y.den_);
}

QFraction operator/(const QFraction& x, const QFraction& y) {
  if (y.is_zero()) throw SkeinError(ErrorKind::DivisionByZero, "division by zero q-fraction");
  return QFraction(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const QFraction& x, const QFraction& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string QFraction::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

nlohmann::json QFraction::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

QLaurent psi_delta_poly(const Poly& p, int delta) {
  if (delta == 0) throw SkeinError(ErrorKind::InvalidArgument, "psi_delta needs nonzero delta");
  const int64_t D = std::abs(delta);
  const int64_t sg = delta > 0 ? 1 : -1;
  QLaurent::TermList terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    const int64_t al = monomial::exponent(t.key, kA);
    const int64_t ga = monomial::exponent(t.key, kS);
    const int64_t be = monomial::exponent(t.key, kV);
    terms.emplace_back(-al * sg + (-static_cast<int64_t>(delta) * be + ga) * D, t.coeff);
  }
  return QLaurent::from_terms(D, std::move(terms));
}

QFraction psi_delta(const Scalar& x, int delta) {
  QLaurent den = psi_delta_poly(x.den(), delta);
  if (den.is_zero()) throw SkeinError(ErrorKind::SpecializationPole, "denominator specializes to zero");
  return QFraction(psi_delta_poly(x.num(), delta), den);
}

}  // namespace skein
