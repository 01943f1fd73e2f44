#include "skein/upoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skein {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x_pow_minus_one(int n) {
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[0] = Rational(-1);
  c[static_cast<size_t>(n)] = Rational(1);
  return UPoly(std::move(c));
}

const UPoly& UPoly::cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  UPoly p = x_pow_minus_one(n);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // Recursion would re-enter the lock; cyclotomic(d) for d < n is computed
    // iteratively below instead.
    auto jt = cache.find(d);
    UPoly phi_d;
    if (jt != cache.end()) {
      phi_d = jt->second;
    } else {
      phi_d = x_pow_minus_one(d);
      for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto kt = cache.find(e);
        if (kt == cache.end()) throw std::logic_error("cyclotomic cache order");
        phi_d = *phi_d.divide_exact(kt->second);
      }
      cache.emplace(d, phi_d);
    }
    p = *p.divide_exact(phi_d);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = c_.back().inverse();
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= inv;
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UPoly(std::move(c));
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  Rational inv = d.lead().inverse();
  const size_t dd = d.c_.size() - 1;
  for (size_t k = quo.size(); k-- > 0;) {
    const Rational& top = rem[k + dd];
    if (top.is_zero()) continue;
    Rational q = top * inv;
    for (size_t j = 0; j <= dd; ++j) {
      if (!d.c_[j].is_zero()) rem[k + j] -= q * d.c_[j];
    }
    quo[k] = std::move(q);
  }
  rem.resize(dd);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

std::optional<UPoly> UPoly::divide_exact(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly UPoly::gcd_cyclotomic_first(UPoly a, UPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  UPoly g = UPoly::constant(1);
  const int limit = std::min(a.degree(), b.degree());
  for (int d = 1; limit > 0 && d <= 4 * limit + 2 && std::min(a.degree(), b.degree()) > 0; ++d) {
    const UPoly& phi = cyclotomic(d);
    if (phi.degree() > std::min(a.degree(), b.degree())) continue;
    while (true) {
      auto qa = a.divide_exact(phi);
      if (!qa) break;
      auto qb = b.divide_exact(phi);
      if (!qb) break;
      a = std::move(*qa);
      b = std::move(*qb);
      g = g * phi;
    }
  }
  if (a.degree() > 0 && b.degree() > 0) g = g * gcd(a, b);
  return g.monic();
}

}  // namespace skein
