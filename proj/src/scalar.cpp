#include "skein/scalar.hpp"

#include <map>

#include "skein/errors.hpp"
#include "skein/upoly.hpp"

namespace skein {
namespace {

const std::string kNames[] = {"a", "s", "v"};

// Splits p into univariate pieces in `var`: one UPoly per monomial in the
// other variables, each shifted so its lowest power is x^0.
std::vector<UPoly> slices(const Poly& p, int var) {
  std::map<uint64_t, std::vector<std::pair<int, Rational>>> groups;
  const uint64_t mask = ~(uint64_t{0xffff} << monomial::shift_of(var));
  for (const auto& t : p.terms()) {
    groups[t.key & mask].emplace_back(monomial::exponent(t.key, var), t.coeff);
  }
  std::vector<UPoly> out;
  out.reserve(groups.size());
  for (auto& [_, entries] : groups) {
    int lo = entries.front().first, hi = lo;
    for (const auto& e : entries) {
      lo = std::min(lo, e.first);
      hi = std::max(hi, e.first);
    }
    std::vector<Rational> c(static_cast<size_t>(hi - lo) + 1);
    for (auto& e : entries) c[static_cast<size_t>(e.first - lo)] = std::move(e.second);
    out.emplace_back(std::move(c));
  }
  return out;
}

Poly from_upoly(const UPoly& u, int var) {
  std::vector<Term> terms;
  for (int i = 0; i <= u.degree(); ++i) {
    if (u[static_cast<size_t>(i)].is_zero()) continue;
    Exponents e{};
    e[var] = i;
    terms.push_back({monomial::pack(e), u[static_cast<size_t>(i)]});
  }
  return Poly::from_sorted(std::move(terms));
}

// Univariate content of p in `var`, folded into an existing candidate when one
// is given (so the result divides both).
UPoly content(const Poly& p, int var, std::optional<UPoly> start = std::nullopt) {
  std::optional<UPoly> g = std::move(start);
  for (auto& sl : slices(p, var)) {
    if (!g) {
      g = sl.monic();
    } else if (!sl.divide_exact(*g)) {
      g = UPoly::gcd_cyclotomic_first(*g, sl);
    }
    if (g->degree() <= 0) return UPoly::constant(1);
  }
  return g ? g->monic() : UPoly::constant(1);
}

}  // namespace

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::monomial(int a, int s, int v, Rational c) {
  return Scalar(Poly::monomial({a, s, v, 0}, std::move(c)));
}

Scalar Scalar::z() { return s(1) - s(-1); }

Scalar Scalar::delta_h() { return Scalar((v(-1) - v(1)).num_, z().num_); }

void Scalar::canonicalize() {
  if (den_.is_zero()) throw SkeinError(ErrorKind::DivisionByZero, "scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  {
    Exponents m = den_.min_exponents();
    bool any = false;
    for (auto& x : m) {
      x = -x;
      any = any || x != 0;
    }
    if (any) {
      den_ = den_.shifted(m);
      num_ = num_.shifted(m);
    }
  }
  auto finish = [this] {
    if (den_.is_constant()) {
      num_ *= den_.terms()[0].coeff.inverse();
      den_ = Poly(Rational(1));
      return;
    }
    Rational lc = den_.leading().coeff;
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  };
  if (den_.is_constant()) return finish();

  if (auto q = Poly::divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = Poly(Rational(1));
    return;
  }

  // den = c_s(s) * c_v(v) * rest; try to cancel `rest` whole, then cancel
  // the univariate contents factor by factor.
  std::optional<UPoly> cont[kMaxVars];
  Poly uni(Rational(1));
  for (int var : {int(kS), int(kV)}) {
    if (!den_.depends_on(var)) continue;
    UPoly c = content(den_, var);
    if (c.degree() > 0) {
      cont[var] = c;
      uni *= from_upoly(c, var);
    }
  }
  Poly rest = *Poly::divide_exact(den_, uni);
  if (!rest.is_constant()) {
    if (auto q = Poly::divide_exact(num_, rest)) {
      num_ = std::move(*q);
      den_ = uni;
    }
  }
  for (int var : {int(kS), int(kV)}) {
    if (!cont[var]) continue;
    UPoly g = content(num_, var, cont[var]);
    if (g.degree() <= 0) continue;
    Poly gp = from_upoly(g, var);
    num_ = *Poly::divide_exact(num_, gp);
    den_ = *Poly::divide_exact(den_, gp);
  }
  {
    Exponents m = den_.min_exponents();
    for (auto& x : m) x = -x;
    den_ = den_.shifted(m);
    num_ = num_.shifted(m);
  }
  finish();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  num_ *= o.num_;
  if (!o.den_.is_constant() || !o.den_.terms()[0].coeff.is_one()) den_ *= o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SkeinError(ErrorKind::DivisionByZero, "inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  Scalar b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Poly theta_poly(const Poly& p) {
  return p.transform([](Exponents& e, Rational& c) {
    if ((e[kA] + e[kV]) & 1) c = -c;
    e[kS] = -e[kS];
  });
}

Scalar Scalar::theta() const { return Scalar(theta_poly(num_), theta_poly(den_)); }

std::optional<int> Scalar::fdeg() const {
  if (is_zero()) return 0;
  if (num_.min_degree(kA) != num_.max_degree(kA)) return std::nullopt;
  if (den_.min_degree(kA) != den_.max_degree(kA)) return std::nullopt;
  return num_.min_degree(kA) - den_.min_degree(kA);
}

std::string Scalar::str() const {
  std::span<const std::string> names(kNames, 3);
  if (is_polynomial()) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

nlohmann::json poly_terms_json(const Poly& p, int nvars) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    Exponents e = monomial::unpack(t.key);
    nlohmann::json ex = nlohmann::json::array();
    for (int v = 0; v < nvars; ++v) ex.push_back(e[v]);
    arr.push_back({{"e", ex}, {"c", t.coeff.str()}});
  }
  return arr;
}

Poly poly_from_terms_json(const nlohmann::json& j, int nvars) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    Exponents e{};
    const auto& ex = t.at("e");
    if (static_cast<int>(ex.size()) != nvars) throw SkeinError(ErrorKind::InvalidArgument, "exponent vector length");
    for (int v = 0; v < nvars; ++v) e[v] = ex[v].get<int>();
    terms.push_back({monomial::pack(e), Rational::parse(t.at("c").get<std::string>())});
  }
  return Poly::from_unsorted(std::move(terms));
}

nlohmann::json Scalar::to_json() const {
  return {{"vars", {"a", "s", "v"}}, {"num", poly_terms_json(num_, 3)}, {"den", poly_terms_json(den_, 3)}};
}

Scalar Scalar::from_json(const nlohmann::json& j) {
  Poly den = j.contains("den") ? poly_from_terms_json(j.at("den"), 3) : Poly(Rational(1));
  return Scalar(poly_from_terms_json(j.at("num"), 3), den);
}

Scalar qint(int k) {
  if (k == 0) return Scalar();
  if (k < 0) return -qint(-k);
  std::vector<Term> terms;
  for (int e = 1 - k; e <= k - 1; e += 2) terms.push_back({monomial::pack({0, e, 0, 0}), Rational(1)});
  return Scalar(Poly::from_sorted(std::move(terms)));
}

Scalar qfact(int k) {
  if (k < 0) throw SkeinError(ErrorKind::InvalidArgument, "qfact of negative integer");
  Scalar r(1);
  for (int j = 2; j <= k; ++j) r *= qint(j);
  return r;
}

Scalar qbinom(int m, int l) {
  if (m < 0 || l < 0) throw SkeinError(ErrorKind::InvalidArgument, "qbinom of negative integer");
  if (l > m) return Scalar();
  Scalar r = qfact(m) / (qfact(l) * qfact(m - l));
  if (!r.is_polynomial()) throw std::logic_error("quantum binomial failed to reduce");
  return r;
}

}  // namespace skein
