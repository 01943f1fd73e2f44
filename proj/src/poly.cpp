#include "skein/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace monomial {

uint64_t pack(const Exponents& e) {
  uint64_t key = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    if (e[v] < -kBias || e[v] > kLimit) throw std::overflow_error("exponent out of packed range");
    key |= static_cast<uint64_t>(e[v] + kBias) << shift_of(v);
  }
  return key;
}

Exponents unpack(uint64_t key) {
  Exponents e{};
  for (int v = 0; v < kMaxVars; ++v) e[v] = exponent(key, v);
  return e;
}

int64_t delta(const Exponents& e) {
  int64_t d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += static_cast<int64_t>(e[v]) * (int64_t{1} << shift_of(v));
  return d;
}

}  // namespace monomial

namespace {

// Merges a and b (both sorted) into out, combining equal keys with sign on b.
void merge_into(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                std::vector<Term>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].key < b[j].key) {
      out.push_back(a[i++]);
    } else if (b[j].key < a[i].key) {
      out.push_back({b[j].key, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Rational c = a[i].coeff;
      if (subtract) c -= b[j].coeff; else c += b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].key, subtract ? -b[j].coeff : b[j].coeff});
}

void check_range(const Poly& p, const Exponents& shift) {
  if (p.is_zero()) return;
  for (int v = 0; v < kMaxVars; ++v) {
    if (shift[v] == 0) continue;
    int lo = p.min_degree(v) + shift[v];
    int hi = p.max_degree(v) + shift[v];
    if (lo < -monomial::kBias || hi > monomial::kLimit) throw std::overflow_error("exponent out of packed range");
  }
}

}  // namespace

Poly::Poly(Rational c) {
  if (!c.is_zero()) terms_.push_back({monomial::kOne, std::move(c)});
}

Poly Poly::monomial(const Exponents& e, Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({monomial::pack(e), std::move(c)});
  return p;
}

Poly Poly::variable(int var, int power) {
  Exponents e{};
  e[var] = power;
  return monomial(e);
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return from_sorted(std::move(out));
}

Rational Poly::constant_term() const { return coefficient(Exponents{}); }

Rational Poly::coefficient(const Exponents& e) const {
  uint64_t key = monomial::pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return Rational(0);
}

bool Poly::depends_on(int var) const {
  if (terms_.empty()) return false;
  int e0 = monomial::exponent(terms_[0].key, var);
  for (const auto& t : terms_)
    if (monomial::exponent(t.key, var) != e0 || e0 != 0) return true;
  return false;
}

int Poly::min_degree(int var) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, monomial::exponent(t.key, var));
  return terms_.empty() ? 0 : m;
}

int Poly::max_degree(int var) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max(m, monomial::exponent(t.key, var));
  return terms_.empty() ? 0 : m;
}

Exponents Poly::min_exponents() const {
  Exponents e{};
  for (int v = 0; v < kMaxVars; ++v) e[v] = min_degree(v);
  return e;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  merge_into(terms_, o.terms_, false, out);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  merge_into(terms_, o.terms_, true, out);
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  {
    Exponents lo{}, hi{};
    for (int v = 0; v < kMaxVars; ++v) {
      lo[v] = small.min_degree(v) + large.min_degree(v);
      hi[v] = small.max_degree(v) + large.max_degree(v);
      if (lo[v] < -monomial::kBias || hi[v] > monomial::kLimit) throw std::overflow_error("exponent out of packed range");
    }
  }
  if (small.size() == 1) {
    Poly r = large.shifted_key(static_cast<int64_t>(small.terms_[0].key - monomial::kOne));
    if (!small.terms_[0].coeff.is_one()) r *= small.terms_[0].coeff;
    return r;
  }
  const int64_t one = static_cast<int64_t>(monomial::kOne);
  std::vector<Term> prod;
  prod.reserve(small.size() * large.size());
  for (const auto& s : small.terms_) {
    int64_t d = static_cast<int64_t>(s.key) - one;
    for (const auto& l : large.terms_) {
      prod.push_back({static_cast<uint64_t>(static_cast<int64_t>(l.key) + d), s.coeff * l.coeff});
    }
  }
  return Poly::from_unsorted(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly Poly::shifted(const Exponents& e) const {
  check_range(*this, e);
  return shifted_key(monomial::delta(e));
}

Poly Poly::shifted_key(int64_t delta) const {
  Poly p = *this;
  if (delta != 0)
    for (auto& t : p.terms_) t.key = static_cast<uint64_t>(static_cast<int64_t>(t.key) + delta);
  return p;
}

void Poly::add_scaled_shift(const Poly& p, int64_t delta, const Rational& c) {
  if (p.is_zero() || c.is_zero()) return;
  std::vector<Term> moved;
  moved.reserve(p.size());
  for (const auto& t : p.terms_)
    moved.push_back({static_cast<uint64_t>(static_cast<int64_t>(t.key) + delta), t.coeff * c});
  std::vector<Term> out;
  merge_into(terms_, moved, false, out);
  terms_ = std::move(out);
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::transform(const std::function<void(Exponents&, Rational&)>& fn) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = monomial::unpack(t.key);
    Rational c = t.coeff;
    fn(e, c);
    out.push_back({monomial::pack(e), std::move(c)});
  }
  return from_unsorted(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return Poly();
  if (den.is_monomial()) {
    Exponents e = monomial::unpack(den.terms_[0].key);
    for (auto& x : e) x = -x;
    Poly q = num.shifted(e);
    q *= den.terms_[0].coeff.inverse();
    return q;
  }
  Exponents lo{}, hi{};
  for (int v = 0; v < kMaxVars; ++v) {
    lo[v] = num.min_degree(v) - den.min_degree(v);
    hi[v] = num.max_degree(v) - den.max_degree(v);
    if (lo[v] > hi[v]) return std::nullopt;
  }
  const Term& lead = den.leading();
  const Rational lead_inv = lead.coeff.inverse();
  const int64_t lead_key = static_cast<int64_t>(lead.key);
  std::vector<Term> quotient;
  Poly rem = num;
  while (!rem.is_zero()) {
    const Term& top = rem.leading();
    int64_t d = static_cast<int64_t>(top.key) - lead_key;
    uint64_t qkey = static_cast<uint64_t>(static_cast<int64_t>(monomial::kOne) + d);
    for (int v = 0; v < kMaxVars; ++v) {
      int e = monomial::exponent(top.key, v) - monomial::exponent(lead.key, v);
      if (e < lo[v] || e > hi[v]) return std::nullopt;
    }
    Rational qc = top.coeff * lead_inv;
    rem.add_scaled_shift(den, d, -qc);
    quotient.push_back({qkey, std::move(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return from_sorted(std::move(quotient));
}

size_t Poly::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : terms_) {
    h ^= std::hash<uint64_t>{}(t.key) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(t.coeff.str()) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    Exponents e = monomial::unpack(it->key);
    bool unit = true;
    for (size_t v = 0; v < names.size() && v < kMaxVars; ++v) unit = unit && e[v] == 0;
    bool wrote = false;
    if (!c.is_one() || unit) {
      os << c;
      wrote = true;
    }
    for (size_t v = 0; v < names.size() && v < kMaxVars; ++v) {
      if (e[v] == 0) continue;
      os << (wrote ? "*" : "") << names[v];
      if (e[v] != 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace skein
