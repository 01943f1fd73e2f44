#include "skein/supertrace.hpp"

#include <map>

#include "skein/errors.hpp"
#include "skein/perm.hpp"
#include "skein/young.hpp"

namespace skein {

namespace {

// Basis e_0..e_{m-1} even, e_m odd. Tensor index: digit p is (idx / base^p) % base.
struct Space {
  int m;
  int base;
  std::vector<uint64_t> pw;

  explicit Space(int m_, int strands) : m(m_), base(m_ + 1) {
    uint64_t x = 1;
    for (int p = 0; p <= strands; ++p) {
      pw.push_back(x);
      x *= static_cast<uint64_t>(base);
    }
  }
  int digit(uint64_t idx, int p) const { return static_cast<int>((idx / pw[static_cast<size_t>(p)]) % static_cast<uint64_t>(base)); }
  bool odd(int d) const { return d == m; }
  // Pivotal weight of one tensor factor: q^{m-2-2i} on even e_i, q^{-m} on the odd one.
  int64_t kappa_exponent(int d) const { return odd(d) ? -m : m - 2 - 2 * d; }
};

using LVec = std::map<uint64_t, QLaurent>;
using FVec = std::map<uint64_t, QFraction>;

void accumulate(LVec& v, uint64_t idx, const QLaurent& c) {
  auto [it, fresh] = v.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

// Super R-matrix (sign > 0) or its inverse on tensor positions p, p+1.
// Off the diagonal it is the gl(m+1) matrix; e_m (x) e_m picks up -q^{-1}.
LVec apply_r(const LVec& v, int p, int sign, const Space& S) {
  static const QLaurent q = QLaurent::monomial(1), qi = QLaurent::monomial(-1), z = q - qi;
  LVec out;
  for (const auto& [idx, c] : v) {
    const int i = S.digit(idx, p), j = S.digit(idx, p + 1);
    if (i == j) {
      const QLaurent& e = S.odd(i) ? (sign > 0 ? -qi : -q) : (sign > 0 ? q : qi);
      accumulate(out, idx, e * c);
      continue;
    }
    const uint64_t swapped = idx - static_cast<uint64_t>(i) * S.pw[static_cast<size_t>(p)] -
                             static_cast<uint64_t>(j) * S.pw[static_cast<size_t>(p) + 1] +
                             static_cast<uint64_t>(j) * S.pw[static_cast<size_t>(p)] +
                             static_cast<uint64_t>(i) * S.pw[static_cast<size_t>(p) + 1];
    accumulate(out, swapped, c);
    if (i > j && sign > 0) accumulate(out, idx, z * c);
    if (i < j && sign < 0) accumulate(out, idx, -(z * c));
  }
  return out;
}

// Letters act in reading order on the vector.
LVec apply_word(LVec v, const std::vector<int>& letters, int offset, const Space& S) {
  for (int l : letters) v = apply_r(v, offset + std::abs(l) - 1, l > 0 ? 1 : -1, S);
  return v;
}

std::vector<int> weight_of(uint64_t idx, int r, const Space& S) {
  std::vector<int> w(static_cast<size_t>(S.base), 0);
  for (int p = 0; p < r; ++p) ++w[static_cast<size_t>(S.digit(idx, p))];
  return w;
}

// Inverse of a small square matrix over Q(q).
std::vector<std::vector<QFraction>> invert(std::vector<std::vector<QFraction>> a) {
  const size_t n = a.size();
  std::vector<std::vector<QFraction>> inv(n, std::vector<QFraction>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = QFraction(QLaurent(1));
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular pivot block");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const QFraction f = QFraction(QLaurent(1)) / a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * f;
      inv[c][j] = inv[c][j] * f;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const QFraction g = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - g * a[c][j];
        inv[r][j] = inv[r][j] - g * inv[c][j];
      }
    }
  }
  return inv;
}

// Image of y_lambda in V^{(x) r}, split by weight.
struct Block {
  int r = 0;
  std::vector<LVec> basis;
  std::vector<int64_t> kappa;  // pivotal exponent of each basis vector
  std::vector<int> parity;
  struct Class {
    std::vector<int> ids;
    std::vector<uint64_t> pivots;
    std::vector<std::vector<QFraction>> inv;  // inv[local id][pivot k]
  };
  std::vector<Class> classes;
  std::vector<int> local;  // basis id -> position inside its class
  std::vector<int> class_of;
};

Block image_block(const Partition& lambda, const Space& S) {
  const int r = lambda.size();
  const int delta = S.m - 1;
  const auto idem = build_idempotent(lambda);
  const PermTable& t = perm_table(r);
  // Coefficients with the a-part absorbed by the per-crossing factor.
  std::vector<std::pair<std::vector<int>, QLaurent>> terms;
  for (uint32_t k = 0; k < t.size; ++k) {
    const Poly& p = idem->element.coeffs()[k];
    if (p.is_zero()) continue;
    QLaurent c = psi_delta_poly(p.shifted({t.length[k], 0, 0, 0}), delta);
    if (!c.is_integral()) throw std::logic_error("idempotent coefficient is not a-homogeneous");
    std::vector<int> word;
    for (int g : t.reduced_word(k)) word.push_back(g + 1);
    terms.emplace_back(std::move(word), std::move(c));
  }

  std::map<std::vector<int>, std::vector<uint64_t>> by_weight;
  for (uint64_t idx = 0; idx < S.pw[static_cast<size_t>(r)]; ++idx) by_weight[weight_of(idx, r, S)].push_back(idx);

  Block B;
  B.r = r;
  for (const auto& [w, members] : by_weight) {
    std::vector<std::pair<uint64_t, FVec>> echelon;
    Block::Class cls;
    for (uint64_t b : members) {
      LVec col;
      for (const auto& [word, c] : terms) {
        LVec img = apply_word(LVec{{b, c}}, word, 0, S);
        for (const auto& [i, x] : img) accumulate(col, i, x);
      }
      if (col.empty()) continue;
      FVec red;
      for (const auto& [i, x] : col) red.emplace(i, QFraction(x));
      for (const auto& [p, e] : echelon) {
        auto it = red.find(p);
        if (it == red.end()) continue;
        const QFraction f = it->second;
        for (const auto& [i, x] : e) {
          QFraction y = red.count(i) ? red[i] - f * x : -(f * x);
          if (y.is_zero()) red.erase(i);
          else red[i] = y;
        }
      }
      if (red.empty()) continue;
      const uint64_t p = red.begin()->first;
      const QFraction f = QFraction(QLaurent(1)) / red.begin()->second;
      for (auto& [i, x] : red) x = x * f;
      echelon.emplace_back(p, std::move(red));
      cls.ids.push_back(static_cast<int>(B.basis.size()));
      cls.pivots.push_back(p);
      B.basis.push_back(std::move(col));
      int64_t kap = 0;
      int par = 0;
      for (int p2 = 0; p2 < r; ++p2) {
        kap += S.kappa_exponent(S.digit(b, p2));
        par += S.odd(S.digit(b, p2)) ? 1 : 0;
      }
      B.kappa.push_back(kap);
      B.parity.push_back(par % 2);
    }
    if (cls.ids.empty()) continue;
    std::vector<std::vector<QFraction>> sub(cls.ids.size(), std::vector<QFraction>(cls.ids.size()));
    for (size_t k = 0; k < cls.pivots.size(); ++k)
      for (size_t c = 0; c < cls.ids.size(); ++c) {
        const LVec& u = B.basis[static_cast<size_t>(cls.ids[c])];
        auto it = u.find(cls.pivots[k]);
        if (it != u.end()) sub[k][c] = QFraction(it->second);
      }
    cls.inv = invert(std::move(sub));
    B.classes.push_back(std::move(cls));
  }
  B.local.assign(B.basis.size(), 0);
  B.class_of.assign(B.basis.size(), 0);
  for (size_t c = 0; c < B.classes.size(); ++c)
    for (size_t l = 0; l < B.classes[c].ids.size(); ++l) {
      B.local[static_cast<size_t>(B.classes[c].ids[l])] = static_cast<int>(l);
      B.class_of[static_cast<size_t>(B.classes[c].ids[l])] = static_cast<int>(c);
    }
  return B;
}

// Coordinates of X in the basis u^A_c (x) u^B_d; X lives on rA + rB positions
// with block A first.
std::map<std::pair<int, int>, QFraction> decompose(const LVec& X, const Block& A, const Block& Bk, const Space& S) {
  std::map<std::pair<int, int>, QFraction> out;
  const uint64_t shift = S.pw[static_cast<size_t>(A.r)];
  for (const auto& ca : A.classes)
    for (const auto& cb : Bk.classes) {
      std::vector<std::vector<QFraction>> vals(ca.pivots.size(), std::vector<QFraction>(cb.pivots.size()));
      bool any = false;
      for (size_t k = 0; k < ca.pivots.size(); ++k)
        for (size_t l = 0; l < cb.pivots.size(); ++l) {
          auto it = X.find(ca.pivots[k] + cb.pivots[l] * shift);
          if (it != X.end()) {
            vals[k][l] = QFraction(it->second);
            any = true;
          }
        }
      if (!any) continue;
      for (size_t c = 0; c < ca.ids.size(); ++c)
        for (size_t d = 0; d < cb.ids.size(); ++d) {
          QFraction s;
          for (size_t k = 0; k < ca.pivots.size(); ++k) {
            if (ca.inv[c][k].is_zero()) continue;
            for (size_t l = 0; l < cb.pivots.size(); ++l)
              if (!vals[k][l].is_zero() && !cb.inv[d][l].is_zero()) s = s + ca.inv[c][k] * cb.inv[d][l] * vals[k][l];
          }
          if (!s.is_zero()) out.emplace(std::make_pair(ca.ids[c], cb.ids[d]), s);
        }
    }
  return out;
}

using Tuple = std::vector<int>;
struct SwapEntry {
  int c, d;
  QFraction coef;
};
// swap[(a, b)] lists the images of u^1_a (x) u^2_b in U2 (x) U1.
using SwapMatrix = std::map<std::pair<int, int>, std::vector<SwapEntry>>;

SwapMatrix block_swap_matrix(const Block& B1, const Block& B2, int sign, const Space& S) {
  std::vector<int> letters;
  if (sign > 0) {
    letters = block_swap(0, B1.r, B2.r);
  } else {
    auto w = block_swap(0, B2.r, B1.r);
    for (auto it = w.rbegin(); it != w.rend(); ++it) letters.push_back(-*it);
  }
  SwapMatrix M;
  const uint64_t shift = S.pw[static_cast<size_t>(B1.r)];
  for (size_t a = 0; a < B1.basis.size(); ++a)
    for (size_t b = 0; b < B2.basis.size(); ++b) {
      LVec x;
      for (const auto& [i, c] : B1.basis[a])
        for (const auto& [j, e] : B2.basis[b]) x.emplace(i + j * shift, c * e);
      x = apply_word(std::move(x), letters, 0, S);
      auto& entries = M[{static_cast<int>(a), static_cast<int>(b)}];
      for (auto& [cd, coef] : decompose(x, B2, B1, S)) entries.push_back({cd.first, cd.second, coef});
    }
  return M;
}

}  // namespace

QFraction supertrace_closure(const BraidWord& b, int m) {
  b.validate();
  if (m < 2) throw SkeinError(ErrorKind::InvalidArgument, "need m >= 2");
  const Space S(m, b.strands);
  QLaurent total;
  int writhe = 0;
  for (int l : b.letters) writhe += l > 0 ? 1 : -1;
  for (uint64_t idx = 0; idx < S.pw[static_cast<size_t>(b.strands)]; ++idx) {
    LVec v = apply_word(LVec{{idx, QLaurent(1)}}, b.letters, 0, S);
    auto it = v.find(idx);
    if (it == v.end()) continue;
    int64_t kap = 0;
    int par = 0;
    for (int p = 0; p < b.strands; ++p) {
      kap += S.kappa_exponent(S.digit(idx, p));
      par += S.odd(S.digit(idx, p)) ? 1 : 0;
    }
    QLaurent term = it->second.shifted(kap, 1);
    total += par % 2 ? -term : term;
  }
  return QFraction(total.shifted(-writhe, m - 1));
}

QFraction supertrace_reduced(const ColoredLink& cl, int m) {
  cl.validate();
  if (m < 2) throw SkeinError(ErrorKind::InvalidArgument, "need m >= 2");
  int widest = 0;
  for (const auto& c : cl.colors) widest = std::max(widest, c.size());
  const Space S(m, 2 * widest);

  // One block per distinct color.
  std::vector<Partition> palette;
  std::vector<Block> blocks;
  std::vector<int> color_id;
  for (const auto& c : cl.colors) {
    auto it = std::find(palette.begin(), palette.end(), c);
    if (it == palette.end()) {
      palette.push_back(c);
      blocks.push_back(image_block(c, S));
      if (blocks.back().basis.empty())
        throw SkeinError(ErrorKind::NotRepresentable, "color " + c.str() + " gives the zero module");
      color_id.push_back(static_cast<int>(palette.size()) - 1);
    } else {
      color_id.push_back(static_cast<int>(it - palette.begin()));
    }
  }

  const LinkPresentation& L = cl.link;
  const int n = L.braid.strands;
  std::vector<int> cols0(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) cols0[static_cast<size_t>(p)] = color_id[static_cast<size_t>(L.component_of[static_cast<size_t>(p)])];

  std::map<std::tuple<int, int, int>, SwapMatrix> swaps;
  auto swap_for = [&](int c1, int c2, int sign) -> const SwapMatrix& {
    auto key = std::make_tuple(c1, c2, sign);
    auto it = swaps.find(key);
    if (it == swaps.end())
      it = swaps.emplace(key, block_swap_matrix(blocks[static_cast<size_t>(c1)], blocks[static_cast<size_t>(c2)], sign, S)).first;
    return it->second;
  };

  const Block& open = blocks[static_cast<size_t>(cols0[0])];
  const size_t d0 = open.basis.size();
  std::vector<std::vector<QFraction>> M(d0, std::vector<QFraction>(d0));

  // Enumerate the start tuples.
  std::vector<Tuple> starts{Tuple{}};
  for (int p = 0; p < n; ++p) {
    std::vector<Tuple> next;
    for (const auto& t : starts)
      for (size_t i = 0; i < blocks[static_cast<size_t>(cols0[static_cast<size_t>(p)])].basis.size(); ++i) {
        Tuple u = t;
        u.push_back(static_cast<int>(i));
        next.push_back(std::move(u));
      }
    starts = std::move(next);
  }

  for (const auto& start : starts) {
    std::map<Tuple, QFraction> state{{start, QFraction(QLaurent(1))}};
    std::vector<int> cols = cols0;
    for (int l : L.braid.letters) {
      const size_t g = static_cast<size_t>(std::abs(l) - 1);
      const SwapMatrix& W = swap_for(cols[g], cols[g + 1], l > 0 ? 1 : -1);
      std::map<Tuple, QFraction> next;
      for (const auto& [t, c] : state) {
        auto it = W.find({t[g], t[g + 1]});
        if (it == W.end()) continue;
        for (const auto& e : it->second) {
          Tuple u = t;
          u[g] = e.c;
          u[g + 1] = e.d;
          QFraction v = c * e.coef;
          auto [jt, fresh] = next.emplace(u, v);
          if (!fresh) jt->second = jt->second + v;
        }
      }
      for (auto jt = next.begin(); jt != next.end();) jt = jt->second.is_zero() ? next.erase(jt) : std::next(jt);
      state = std::move(next);
      std::swap(cols[g], cols[g + 1]);
    }
    if (cols != cols0) throw std::logic_error("closure does not match block colors");
    int64_t kap = 0;
    int par = 0;
    for (size_t p = 1; p < static_cast<size_t>(n); ++p) {
      const Block& B = blocks[static_cast<size_t>(cols0[p])];
      kap += B.kappa[static_cast<size_t>(start[p])];
      par += B.parity[static_cast<size_t>(start[p])];
    }
    const QFraction weight(QLaurent::monomial(kap, 1, par % 2 ? Rational(-1) : Rational(1)));
    for (const auto& [t, c] : state) {
      if (!std::equal(t.begin() + 1, t.end(), start.begin() + 1)) continue;
      auto& cell = M[static_cast<size_t>(t[0])][static_cast<size_t>(start[0])];
      cell = cell + weight * c;
    }
  }

  const QFraction scalar = M[0][0];
  for (size_t i = 0; i < d0; ++i)
    for (size_t j = 0; j < d0; ++j)
      if (M[i][j] != (i == j ? scalar : QFraction()))
        throw std::logic_error("cut-open diagram does not act by a scalar");
  return scalar * QFraction(QLaurent::monomial(-cl.cable_fdeg(), m - 1));
}

}  // namespace skein
