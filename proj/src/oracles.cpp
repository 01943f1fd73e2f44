#include "skein/oracles.hpp"

#include <map>

#include "skein/errors.hpp"

namespace skein {

namespace {

// ---- skein switching on closed braid diagrams ----

// Over strand of sigma_g: the one entering from the left for g > 0, from the
// right for g < 0. Any fixed choice works because a diagram whose components
// are all first met as under passes is split as well.
bool left_is_over(int letter) { return letter > 0; }

struct Walk {
  int components = 0;
  int self_writhe = 0;
  int wrong = -1;  // first crossing met from below on its first visit
};

Walk walk(int n, const std::vector<int>& w) {
  Walk out;
  std::vector<int> first_visitor(w.size(), -1);
  std::vector<bool> started(static_cast<size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (started[static_cast<size_t>(s)]) continue;
    const int comp = out.components++;
    int p = s;
    do {
      started[static_cast<size_t>(p)] = true;
      for (size_t t = 0; t < w.size(); ++t) {
        const int g = std::abs(w[t]);
        if (p != g - 1 && p != g) continue;
        const bool from_left = p == g - 1;
        const bool over = from_left == left_is_over(w[t]);
        if (first_visitor[t] < 0) {
          first_visitor[t] = comp;
          if (!over && out.wrong < 0) out.wrong = static_cast<int>(t);
        } else if (first_visitor[t] == comp) {
          out.self_writhe += w[t] > 0 ? 1 : -1;
        }
        p = from_left ? g : g - 1;
      }
    } while (p != s);
  }
  return out;
}

class SkeinEvaluator {
 public:
  Scalar eval(int n, const std::vector<int>& w) {
    std::vector<int> key{n};
    key.insert(key.end(), w.begin(), w.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Walk info = walk(n, w);
    Scalar r;
    if (info.wrong < 0) {
      r = Scalar::delta_h().pow(info.components) * (Scalar::a() * Scalar::v(-1)).pow(info.self_writhe);
    } else {
      const auto t = static_cast<size_t>(info.wrong);
      std::vector<int> flipped = w, dropped = w;
      flipped[t] = -w[t];
      dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(t));
      // sigma = a^2 sigma^-1 + a z ; sigma^-1 = a^-2 sigma - a^-1 z
      if (w[t] > 0)
        r = Scalar::a(2) * eval(n, flipped) + Scalar::a() * Scalar::z() * eval(n, dropped);
      else
        r = Scalar::a(-2) * eval(n, flipped) - Scalar::a(-1) * Scalar::z() * eval(n, dropped);
    }
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  std::map<std::vector<int>, Scalar> memo_;
};

// ---- Laurent polynomial matrices ----

using Matrix = std::vector<std::vector<Poly>>;

Poly T(int var, int k = 1) { return Poly::variable(var, k); }

Matrix identity(int n) {
  Matrix m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Poly(Rational(1));
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const size_t n = x.size();
  Matrix r(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

// Fraction-free elimination; every division is exact.
Poly determinant(Matrix m) {
  const size_t n = m.size();
  if (n == 0) return Poly(Rational(1));
  Poly prev(Rational(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Poly();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = Poly::divide_exact(num, prev);
        if (!q) throw std::logic_error("inexact division in determinant");
        m[i][j] = std::move(*q);
      }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Reduced Burau image of sigma_g^{+-1} on n strands, size n-1.
Matrix burau(int n, int letter) {
  const int d = n - 1;
  const int g = std::abs(letter);
  const bool pos = letter > 0;
  Matrix m = identity(d);
  const Poly t = pos ? T(0) : T(0, -1);
  auto at = [&](int i, int j) -> Poly& { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  const int r = g - 1;  // row of the diagonal entry -t^{+-1}
  at(r, r) = -t;
  if (pos) {
    if (r + 1 < d) at(r, r + 1) = Poly(Rational(1));
    if (r - 1 >= 0) at(r, r - 1) = T(0);
  } else {
    if (r + 1 < d) at(r, r + 1) = T(0, -1);
    if (r - 1 >= 0) at(r, r - 1) = Poly(Rational(1));
  }
  return m;
}

Poly normalize_knot(Poly p) {
  if (p.is_zero()) throw std::logic_error("vanishing Alexander polynomial for a knot");
  const int lo = p.min_degree(0), hi = p.max_degree(0);
  if ((lo + hi) % 2 != 0) throw std::logic_error("Alexander polynomial of a knot is not symmetric");
  p = p.shifted({-(lo + hi) / 2, 0, 0, 0});
  Rational at_one(0);
  for (const auto& t : p.terms()) at_one += t.coeff;
  if (at_one == Rational(-1)) p = -p;
  else if (!(at_one == Rational(1))) throw std::logic_error("Alexander polynomial of a knot is not 1 at t = 1");
  return p;
}

// ---- free group and Fox calculus ----

using Word = std::vector<int>;  // +-(j+1)

void append_reduced(Word& out, int letter) {
  if (!out.empty() && out.back() == -letter) out.pop_back();
  else out.push_back(letter);
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int l : w) {
    const Word& img = images[static_cast<size_t>(std::abs(l) - 1)];
    if (l > 0)
      for (int x : img) append_reduced(out, x);
    else
      for (int x : inverse(img)) append_reduced(out, x);
  }
  return out;
}

// Artin action of sigma_g^{+-1} on the generators.
std::vector<Word> artin(int n, int letter) {
  std::vector<Word> img;
  for (int j = 1; j <= n; ++j) img.push_back({j});
  const int g = std::abs(letter);
  const int i = g, k = g + 1;  // 1-based generator labels
  if (letter > 0) {
    img[static_cast<size_t>(i - 1)] = {i, k, -i};
    img[static_cast<size_t>(k - 1)] = {i};
  } else {
    img[static_cast<size_t>(i - 1)] = {k};
    img[static_cast<size_t>(k - 1)] = {-k, i, k};
  }
  return img;
}

}  // namespace

Scalar naive_skein_homfly(const BraidWord& b) {
  b.validate();
  if (static_cast<int>(b.letters.size()) > kSkeinCrossingCap)
    throw SkeinError(ErrorKind::BudgetError, "skein oracle is capped at " + std::to_string(kSkeinCrossingCap) +
                                                 " crossings");
  SkeinEvaluator ev;
  return ev.eval(b.strands, b.letters);
}

std::string AlexanderValue::str() const {
  std::vector<std::string> names;
  for (int i = 0; i < num_vars; ++i) names.push_back(num_vars == 1 ? "t" : "t" + std::to_string(i + 1));
  return poly.str(names);
}

nlohmann::json AlexanderValue::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (int i = 0; i < num_vars; ++i) vars.push_back(num_vars == 1 ? "t" : "t" + std::to_string(i + 1));
  return {{"vars", vars},
          {"terms", poly_terms_json(poly, num_vars)},
          {"normalization", exact ? "exact" : "up_to_units"},
          {"text", str()}};
}

AlexanderValue alexander_knot(const BraidWord& b) {
  b.validate();
  if (analyze_closure(b).num_components() != 1)
    throw SkeinError(ErrorKind::NotAKnot, "closure of " + format_braid(b) + " is not a knot");
  const int n = b.strands;
  if (n == 1) return {1, Poly(Rational(1)), true};
  Matrix m = identity(n - 1);
  for (int l : b.letters) m = multiply(m, burau(n, l));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) {
      Poly& e = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      e = (i == j ? Poly(Rational(1)) : Poly()) - e;
    }
  // Delta = det(I - B) (1 - t) / (1 - t^n)
  Poly num = determinant(std::move(m)) * (Poly(Rational(1)) - T(0));
  auto q = Poly::divide_exact(num, Poly(Rational(1)) - T(0, n));
  if (!q) throw std::logic_error("Burau determinant not divisible by the cyclotomic factor");
  return {1, normalize_knot(std::move(*q)), true};
}

nlohmann::json ConwayValue::to_json() const {
  return {{"var", "t"}, {"num", poly_terms_json(num, 1)}, {"den", poly_terms_json(den, 1)}};
}

ConwayValue conway_knot(const BraidWord& b) {
  AlexanderValue d = alexander_knot(b);
  return {power_substitute(d.poly, 2), T(0) - T(0, -1)};
}

AlexanderValue multivariable_alexander(const LinkPresentation& L) {
  const int n = L.braid.strands;
  const int k = L.num_components();
  if (k > kMaxVars) throw SkeinError(ErrorKind::BudgetError, "at most 4 components supported");
  std::vector<Word> images;
  for (int j = 1; j <= n; ++j) images.push_back({j});
  for (int l : L.braid.letters) {
    const auto step = artin(n, l);
    std::vector<Word> next;
    for (const Word& w : step) next.push_back(substitute(w, images));
    images = std::move(next);
  }
  auto var = [&](int gen) { return L.component_of[static_cast<size_t>(gen - 1)]; };
  // Fox Jacobian of r_j = beta(x_j) x_j^-1, abelianized.
  Matrix J(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j) {
    Word r = images[static_cast<size_t>(j)];
    r.push_back(-(j + 1));
    Exponents prefix{};
    for (int l : r) {
      const int g = std::abs(l);
      auto& cell = J[static_cast<size_t>(j)][static_cast<size_t>(g - 1)];
      if (l > 0) {
        cell += Poly::monomial(prefix);
        ++prefix[static_cast<size_t>(var(g))];
      } else {
        --prefix[static_cast<size_t>(var(g))];
        cell -= Poly::monomial(prefix);
      }
    }
  }
  // Drop the last relation and the first generator.
  Matrix minor;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Poly> row;
    for (int j = 1; j < n; ++j) row.push_back(J[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    minor.push_back(std::move(row));
  }
  Poly det = determinant(std::move(minor));
  if (k == 1) return {1, det, false};
  auto q = Poly::divide_exact(det, T(var(1)) - Poly(Rational(1)));
  if (!q) throw std::logic_error("Fox minor not divisible by t - 1");
  return {k, std::move(*q), false};
}

bool unit_equivalent(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.size() != y.size()) return false;
  const Exponents ex = monomial::unpack(x.leading().key), ey = monomial::unpack(y.leading().key);
  Exponents d{};
  for (int i = 0; i < kMaxVars; ++i) d[static_cast<size_t>(i)] = ex[static_cast<size_t>(i)] - ey[static_cast<size_t>(i)];
  const Rational c = x.leading().coeff / y.leading().coeff;
  if (!(c == Rational(1)) && !(c == Rational(-1))) return false;
  return x == y.shifted(d) * c;
}

Poly power_substitute(const Poly& p, int k) {
  return p.transform([k](Exponents& e, Rational&) {
    for (int& x : e) x *= k;
  });
}

QLaurent bracket(int k) { return QLaurent::monomial(k) - QLaurent::monomial(-k); }

QFraction quantum_weyl_dimension(const Partition& lambda, int m) {
  QLaurent num(1), den(1);
  for (const auto& c : lambda.cells()) {
    num = num * bracket(m + lambda.content(c));
    den = den * bracket(lambda.hook(c));
  }
  return QFraction(num, den);
}

}  // namespace skein
