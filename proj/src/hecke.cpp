#include "skein/hecke.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "skein/errors.hpp"

namespace skein {
namespace {

int64_t key_delta(int a, int s, int v = 0) { return monomial::delta({a, s, v, 0}); }

const int64_t kDA2 = key_delta(2, 0);
const int64_t kDAm2 = key_delta(-2, 0);
const int64_t kDAS = key_delta(1, 1);
const int64_t kDASm = key_delta(1, -1);
const int64_t kDAmS = key_delta(-1, 1);
const int64_t kDAmSm = key_delta(-1, -1);

// Acts on the coefficient pair of (pi, pi s_i) where pi is the shorter one.
void pair_times_generator(Poly& c, Poly& c2, int sign) {
  if (c.is_zero() && c2.is_zero()) return;
  if (sign > 0) {
    // c w_pi + c2 w_pi' -> (c + a z c2) w_pi' + a^2 c2 w_pi
    Poly nc2 = c;
    nc2.add_scaled_shift(c2, kDAS, Rational(1));
    nc2.add_scaled_shift(c2, kDASm, Rational(-1));
    c = c2.shifted_key(kDA2);
    c2 = std::move(nc2);
  } else {
    // c w_pi + c2 w_pi' -> (c2 - a^-1 z c) w_pi + a^-2 c w_pi'
    Poly nc = c2;
    nc.add_scaled_shift(c, kDAmS, Rational(-1));
    nc.add_scaled_shift(c, kDAmSm, Rational(1));
    c2 = c.shifted_key(kDAm2);
    c = std::move(nc);
  }
}

using Sparse = std::map<uint32_t, Poly>;

void sparse_times_generator(Sparse& x, const PermTable& t, int i) {
  Sparse out;
  for (auto& [r, p] : x) {
    if (t.ascent(r, i)) {
      out[t.times(r, i)] += p;
    } else {
      uint32_t r2 = t.times(r, i);
      Poly& same = out[r];
      same.add_scaled_shift(p, kDAS, Rational(1));
      same.add_scaled_shift(p, kDASm, Rational(-1));
      out[r2] += p.shifted_key(kDA2);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  x = std::move(out);
}

struct PolyHash {
  size_t operator()(const Poly& p) const { return p.hash(); }
};

// Scaled closure values T_n(pi) = (s - s^-1)^n * trace(w_pi), with equal
// values shared between permutations.
struct TraceTable {
  std::vector<uint32_t> class_of;
  std::vector<Poly> values;
  const Poly& at(uint32_t r) const { return values[class_of[r]]; }
};

std::unique_ptr<TraceTable> build_trace(int n, const TraceTable* prev) {
  auto tt = std::make_unique<TraceTable>();
  const Poly circle = Poly::monomial({0, 0, -1, 0}) - Poly::monomial({0, 0, 1, 0});  // v^-1 - v
  if (n == 1) {
    tt->class_of = {0};
    tt->values = {circle};
    return tt;
  }
  const PermTable& t = perm_table(n);
  const PermTable& tp = perm_table(n - 1);
  const Poly zav = Poly::monomial({1, 1, -1, 0}) - Poly::monomial({1, -1, -1, 0});  // (s - s^-1) a v^-1
  std::unordered_map<Poly, uint32_t, PolyHash> index;
  tt->class_of.resize(t.size);
  for (uint32_t r = 0; r < t.size; ++r) {
    const OneLine& p = t.perms[r];
    int k = 0;
    while (p[static_cast<size_t>(k)] != n - 1) ++k;
    OneLine alpha{};
    for (int j = 0, o = 0; j < n; ++j)
      if (j != k) alpha[static_cast<size_t>(o++)] = p[static_cast<size_t>(j)];
    const uint32_t ra = tp.rank(alpha);
    Poly value;
    if (k == n - 1) {
      value = circle * prev->at(ra);
    } else {
      Sparse e;
      e[ra] = Poly(Rational(1));
      for (int i = n - 3; i >= k; --i) sparse_times_generator(e, tp, i);
      Poly sum;
      std::map<uint32_t, Poly> by_class;
      for (auto& [sr, c] : e) by_class[prev->class_of[sr]] += c;
      for (auto& [cls, c] : by_class)
        if (!c.is_zero()) sum += c * prev->values[cls];
      value = zav * sum;
    }
    auto [it, inserted] = index.emplace(std::move(value), static_cast<uint32_t>(tt->values.size()));
    if (inserted) tt->values.push_back(it->first);
    tt->class_of[r] = it->second;
  }
  return tt;
}

const TraceTable& trace_table(int n) {
  static std::mutex mu;
  static std::unique_ptr<TraceTable> tables[kMaxStrands + 1];
  perm_table(n);  // budget check
  std::lock_guard lock(mu);
  for (int m = 1; m <= n; ++m)
    if (!tables[m]) tables[m] = build_trace(m, m > 1 ? tables[m - 1].get() : nullptr);
  return *tables[n];
}

}  // namespace

HeckeElement::HeckeElement(int n) : n_(n), scale_(1), c_(perm_table(n).size) {}

HeckeElement HeckeElement::basis(int n, uint32_t rank, Scalar c) {
  HeckeElement x(n);
  x.c_.at(rank) = Poly(Rational(1));
  x.scale_ = std::move(c);
  if (x.scale_.is_zero()) {
    x.c_[rank] = Poly();
    x.scale_ = Scalar(1);
  }
  return x;
}

Scalar HeckeElement::coefficient(uint32_t rank) const {
  if (c_[rank].is_zero()) return Scalar();
  return scale_ * Scalar(c_[rank]);
}

size_t HeckeElement::support_size() const {
  size_t k = 0;
  for (const auto& p : c_) k += !p.is_zero();
  return k;
}

bool HeckeElement::is_zero() const { return support_size() == 0; }

void HeckeElement::mul_generator(int i, int sign) {
  if (i < 0 || i + 1 >= n_) throw SkeinError(ErrorKind::IndexError, "generator out of range");
  const PermTable& t = perm_table(n_);
  for (uint32_t r = 0; r < t.size; ++r) {
    if (!t.ascent(r, i)) continue;
    pair_times_generator(c_[r], c_[t.times(r, i)], sign);
  }
}

void HeckeElement::mul_word(const std::vector<int>& letters) {
  for (int g : letters) mul_generator(std::abs(g) - 1, g > 0 ? 1 : -1);
}

void HeckeElement::mul_basis(uint32_t rank) {
  for (int i : perm_table(n_).reduced_word(rank)) mul_generator(i, 1);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw SkeinError(ErrorKind::InvalidArgument, "strand count mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (scale_ == o.scale_) {
    for (size_t k = 0; k < c_.size(); ++k)
      if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    return *this;
  }
  Scalar ratio = o.scale_ / scale_;
  const Poly& rn = ratio.num();
  const Poly& rd = ratio.den();
  const bool unit_den = rd.is_constant() && rd.terms()[0].coeff.is_one();
  for (size_t k = 0; k < c_.size(); ++k) {
    if (!unit_den && !c_[k].is_zero()) c_[k] *= rd;
    if (!o.c_[k].is_zero()) c_[k] += o.c_[k] * rn;
  }
  if (!unit_den) scale_ /= Scalar(rd);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) { return *this += o * Scalar(-1); }

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    for (auto& p : c_) p = Poly();
    scale_ = Scalar(1);
  } else {
    scale_ *= c;
  }
  return *this;
}

HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  if (x.n_ != y.n_) throw SkeinError(ErrorKind::InvalidArgument, "strand count mismatch");
  HeckeElement out(x.n_);
  out.scale_ = x.scale_ * y.scale_;
  for (uint32_t r = 0; r < y.c_.size(); ++r) {
    if (y.c_[r].is_zero()) continue;
    HeckeElement t = x;
    t.mul_basis(r);
    for (size_t k = 0; k < t.c_.size(); ++k)
      if (!t.c_[k].is_zero()) out.c_[k] += t.c_[k] * y.c_[r];
  }
  return out;
}

bool operator==(const HeckeElement& x, const HeckeElement& y) {
  if (x.n_ != y.n_) return false;
  Poly fx = x.scale_.num() * y.scale_.den();
  Poly fy = y.scale_.num() * x.scale_.den();
  for (size_t k = 0; k < x.c_.size(); ++k) {
    if (x.c_[k].is_zero() != y.c_[k].is_zero()) return false;
    if (x.c_[k].is_zero()) continue;
    if (!(x.c_[k] * fx == y.c_[k] * fy)) return false;
  }
  return true;
}

HeckeElement tensor(const HeckeElement& x, const HeckeElement& y) {
  const int n = x.n_ + y.n_;
  const PermTable& t = perm_table(n);
  const PermTable& t1 = perm_table(x.n_);
  const PermTable& t2 = perm_table(y.n_);
  HeckeElement out(n);
  out.scale_ = x.scale_ * y.scale_;
  for (uint32_t r1 = 0; r1 < t1.size; ++r1) {
    if (x.c_[r1].is_zero()) continue;
    for (uint32_t r2 = 0; r2 < t2.size; ++r2) {
      if (y.c_[r2].is_zero()) continue;
      OneLine p{};
      for (int i = 0; i < x.n_; ++i) p[static_cast<size_t>(i)] = t1.perms[r1][static_cast<size_t>(i)];
      for (int i = 0; i < y.n_; ++i)
        p[static_cast<size_t>(x.n_ + i)] = static_cast<uint8_t>(x.n_ + t2.perms[r2][static_cast<size_t>(i)]);
      out.c_[t.rank(p)] += x.c_[r1] * y.c_[r2];
    }
  }
  return out;
}

std::optional<int> HeckeElement::fdeg() const {
  auto base = scale_.fdeg();
  if (!base) return std::nullopt;
  const PermTable& t = perm_table(n_);
  std::optional<int> d;
  for (uint32_t r = 0; r < c_.size(); ++r) {
    const Poly& p = c_[r];
    if (p.is_zero()) continue;
    if (p.min_degree(kA) != p.max_degree(kA)) return std::nullopt;
    int here = p.min_degree(kA) + t.length[r];
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  return d ? *d + *base : 0;
}

std::optional<Scalar> HeckeElement::proportional_to(const HeckeElement& o) const {
  if (o.n_ != n_) return std::nullopt;
  size_t pivot = c_.size();
  for (size_t k = 0; k < c_.size(); ++k)
    if (!o.c_[k].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot == c_.size()) return std::nullopt;
  if (c_[pivot].is_zero()) return is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero() != o.c_[k].is_zero()) return std::nullopt;
    if (c_[k].is_zero()) continue;
    if (!(c_[k] * o.c_[pivot] == o.c_[k] * c_[pivot])) return std::nullopt;
  }
  return (scale_ / o.scale_) * Scalar(c_[pivot], o.c_[pivot]);
}

nlohmann::json HeckeElement::to_json() const {
  const PermTable& t = perm_table(n_);
  nlohmann::json terms = nlohmann::json::array();
  for (uint32_t r = 0; r < c_.size(); ++r) {
    if (c_[r].is_zero()) continue;
    std::vector<int> one;
    for (int i = 0; i < n_; ++i) one.push_back(t.perms[r][static_cast<size_t>(i)] + 1);
    terms.push_back({{"perm", one}, {"c", poly_terms_json(c_[r], 3)}});
  }
  return {{"n", n_}, {"scale", scale_.to_json()}, {"terms", terms}};
}

HeckeElement HeckeElement::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const PermTable& t = perm_table(n);
  HeckeElement x(n);
  x.scale_ = Scalar::from_json(j.at("scale"));
  for (const auto& term : j.at("terms")) {
    auto one = term.at("perm").get<std::vector<int>>();
    if (static_cast<int>(one.size()) != n) throw SkeinError(ErrorKind::InvalidArgument, "permutation size");
    OneLine p{};
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = static_cast<uint8_t>(one[static_cast<size_t>(i)] - 1);
    x.c_[t.rank(p)] = poly_from_terms_json(term.at("c"), 3);
  }
  return x;
}

HeckeElement hecke_from_braid(const BraidWord& b) {
  b.validate();
  HeckeElement x = HeckeElement::identity(b.strands);
  x.mul_word(b.letters);
  return x;
}

HeckeElement basis_inverse(int n, uint32_t rank) {
  HeckeElement x = HeckeElement::identity(n);
  auto w = perm_table(n).reduced_word(rank);
  for (auto it = w.rbegin(); it != w.rend(); ++it) x.mul_generator(*it, -1);
  return x;
}

Scalar markov_eval(const HeckeElement& x) {
  const int n = x.strands();
  const TraceTable& tt = trace_table(n);
  std::vector<Poly> sums(tt.values.size());
  const auto& c = x.coeffs();
  for (uint32_t r = 0; r < c.size(); ++r)
    if (!c[r].is_zero()) sums[tt.class_of[r]] += c[r];
  Poly total;
  for (size_t k = 0; k < sums.size(); ++k)
    if (!sums[k].is_zero()) total += sums[k] * tt.values[k];
  Poly zn = (Poly::monomial({0, 1, 0, 0}) - Poly::monomial({0, -1, 0, 0})).pow(n);
  return x.scale() * Scalar(std::move(total), std::move(zn));
}

HeckeElement HeckeElement::theta() const {
  HeckeElement out(n_);
  out.scale_ = scale_.theta();
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) out.c_[k] = theta_poly(c_[k]);
  return out;
}

HeckeElement apply_theta(const HeckeElement& x) { return x.theta(); }

}  // namespace skein
