#include "skein/colored.hpp"

#include <map>
#include <mutex>

#include "skein/errors.hpp"
#include "skein/hecke.hpp"

namespace skein {

void ColoredLink::validate() const {
  if (static_cast<int>(colors.size()) != link.num_components())
    throw SkeinError(ErrorKind::InvalidArgument, "need one color per component (" +
                                                     std::to_string(link.num_components()) + " components, " +
                                                     std::to_string(colors.size()) + " colors)");
  for (const auto& c : colors)
    if (c.empty()) throw SkeinError(ErrorKind::InvalidArgument, "empty color");
}

std::vector<int> ColoredLink::widths() const {
  std::vector<int> w;
  for (const auto& c : colors) w.push_back(c.size());
  return w;
}

int ColoredLink::cable_fdeg() const {
  const auto w = widths();
  int total = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) total += w[i] * link.lk[i][j] * w[j];
  return total;
}

ColoredLink ColoredLink::conjugate() const {
  ColoredLink c = *this;
  for (auto& p : c.colors) p = p.conjugate();
  return c;
}

ColoredLink make_colored(const BraidWord& b, std::vector<Partition> colors) {
  ColoredLink cl{analyze_closure(b), std::move(colors)};
  cl.validate();
  return cl;
}

ColoredLink make_colored(const BraidWord& b, const Partition& color) {
  LinkPresentation L = analyze_closure(b);
  std::vector<Partition> colors(static_cast<size_t>(L.num_components()), color);
  return ColoredLink{std::move(L), std::move(colors)};
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

Key cache_key(const ColoredLink& cl) {
  Key k;
  k.first.push_back(cl.link.braid.strands);
  k.first.insert(k.first.end(), cl.link.braid.letters.begin(), cl.link.braid.letters.end());
  for (const auto& c : cl.colors) k.second.push_back(c.parts());
  return k;
}

Scalar compute(const ColoredLink& cl) {
  const LinkPresentation& L = cl.link;
  const BraidWord cabled = cable_braid(L, cl.widths());
  perm_table(cabled.strands);  // budget check before building anything
  HeckeElement Y = build_idempotent(cl.colors[static_cast<size_t>(L.component_of[0])])->element;
  for (int j = 1; j < L.braid.strands; ++j)
    Y = tensor(Y, build_idempotent(cl.colors[static_cast<size_t>(L.component_of[static_cast<size_t>(j)])])->element);
  Y.mul_word(cabled.letters);
  Scalar H = markov_eval(Y);
  auto d = H.fdeg();
  if (!H.is_zero() && (!d || *d != cl.cable_fdeg()))
    throw std::logic_error("colored HOMFLY-PT has framing degree " + (d ? std::to_string(*d) : std::string("mixed")) +
                           ", expected " + std::to_string(cl.cable_fdeg()));
  return H;
}

}  // namespace

Scalar colored_homfly(const ColoredLink& cl) {
  cl.validate();
  static std::mutex mu;
  static std::map<Key, Scalar> cache;
  const Key key = cache_key(cl);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Scalar H = compute(cl);
  std::lock_guard lock(mu);
  cache.emplace(key, H);
  return H;
}

Scalar colored_unknot(const Partition& lambda) {
  return colored_homfly(make_colored(BraidWord{1, {}}, {lambda}));
}

Scalar reduced_colored_homfly(const ColoredLink& cl, int cut) {
  cl.validate();
  if (cut < 0 || cut >= cl.link.num_components())
    throw SkeinError(ErrorKind::IndexError, "cut component " + std::to_string(cut) + " out of range");
  Scalar u = colored_unknot(cl.colors[static_cast<size_t>(cut)]);
  if (u.is_zero()) throw SkeinError(ErrorKind::DivisionByZero, "unknot value vanishes");
  return colored_homfly(cl) / u;
}

Scalar unframe(const Scalar& x, const ColoredLink& cl) {
  cl.validate();
  for (const auto& c : cl.colors)
    if (!(c == cl.colors[0]))
      throw SkeinError(ErrorKind::MixedColors, "unframing is defined only when all components share one color");
  Scalar r = x * twist_eigenvalue(cl.colors[0]).pow(-cl.link.fdeg);
  auto d = r.fdeg();
  if (!r.is_zero() && (!d || *d != 0 || r.depends_on(kA)))
    throw std::logic_error("unframed value still depends on a");
  return r;
}

}  // namespace skein
