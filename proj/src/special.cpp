#include "skein/special.hpp"

#include <chrono>

#include "skein/errors.hpp"
#include "skein/oracles.hpp"
#include "skein/perm.hpp"
#include "skein/supertrace.hpp"

namespace skein {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

QLaurent product_of_brackets(int m, int a) {
  QLaurent p(1);
  for (int i = 0; i < m; ++i) p = p * (QLaurent::monomial(a + i) - QLaurent::monomial(-(a + i)));
  return p;
}

void require_colors(const LinkPresentation& L, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != L.num_components())
    throw SkeinError(ErrorKind::InvalidArgument, "need one color per component (" +
                                                     std::to_string(L.num_components()) + " components)");
}

ColoredLink rectangle_coloring(const LinkPresentation& L, int m, const std::vector<int>& colors) {
  require_colors(L, colors);
  std::vector<Partition> parts;
  for (int a : colors) parts.push_back(partition_for_color(m, 1, std::vector<int>(static_cast<size_t>(m - 1), 0), a));
  return ColoredLink{L, std::move(parts)};
}

int cabled_strands(const ColoredLink& cl) {
  int n = 0;
  for (int c : cl.link.component_of) n += cl.colors[static_cast<size_t>(c)].size();
  return n;
}

// psi_{m-1}(H'(cl, cut)). Cables wider than the dense Hecke ceiling go
// through the gl(m|1) supertrace instead (cut 0 only).
QFraction psi_reduced(const ColoredLink& cl, int m, int cut, std::string* method = nullptr) {
  if (cabled_strands(cl) > kMaxStrands && cut == 0) {
    if (method) *method = "supertrace";
    return supertrace_reduced(cl, m);
  }
  if (method) *method = "hecke";
  return psi_delta(reduced_colored_homfly(cl, cut), m - 1);
}

nlohmann::json complex_json(const Complex& z) { return z.to_json(); }

void finish(SpecializationReport& r, const Complex& lhs, const Complex& rhs, Clock::time_point t0) {
  r.lhs = complex_json(lhs);
  r.rhs = complex_json(rhs);
  r.abs_dev = (lhs - rhs).abs().convert_to<double>();
  r.rel_dev = relative_deviation(lhs, rhs);
  r.seconds = since(t0);
}

bool extras_pass(const SpecializationReport& r) {
  for (const auto& [k, v] : r.extra.items())
    if (v.contains("pass") && !v["pass"].get<bool>()) return false;
  return true;
}

nlohmann::json sub_check(const Complex& x, const Complex& y, double tol) {
  const double d = relative_deviation(x, y);
  return {{"lhs", x.to_json()}, {"rhs", y.to_json()}, {"rel_dev", d}, {"pass", d < tol}};
}

constexpr double kRootTolerance = 1e-9;

}  // namespace

nlohmann::json SpecializationReport::to_json() const {
  nlohmann::json j{{"identity", identity}, {"link", link},      {"lhs", lhs},
                   {"rhs", rhs},           {"rel_dev", rel_dev},    {"abs_dev", abs_dev},
                   {"tolerance", tolerance}, {"pass", pass},    {"seconds", seconds}};
  for (const auto& [k, v] : params.items()) j[k] = v;
  if (!extra.empty()) j["checks"] = extra;
  if (!note.empty()) j["note"] = note;
  return j;
}

nlohmann::json MInvariantValue::to_json() const {
  return {{"m", m},
          {"colors", colors},
          {"cut", cut + 1},
          {"framing_exponent", {{"num", framing_exponent}, {"den", m - 1}}},
          {"laurent", value.is_laurent()},
          {"value", value.to_json()},
          {"text", value.str()}};
}

QFraction modified_dimension(int m, int a) { return QFraction(QLaurent(1), product_of_brackets(m, a)); }

QFraction kashaev_fraction(const LinkPresentation& L, int N) {
  if (N < 2) throw SkeinError(ErrorKind::InvalidArgument, "Kashaev invariant needs N >= 2");
  ColoredLink cl = make_colored(L.braid, Partition::row(N - 1));
  return psi_delta(unframe(reduced_colored_homfly(cl, 0), cl), 2);
}

Complex kashaev(const LinkPresentation& L, int N, int bits) { return eval_root(kashaev_fraction(L, N), N, false, bits); }

QLaurent framing_factor(const LinkPresentation& L, int m, const std::vector<int>& colors) {
  require_colors(L, colors);
  int64_t s1 = 0, s2 = 0;
  for (size_t i = 0; i < colors.size(); ++i)
    for (size_t j = 0; j < colors.size(); ++j) {
      s1 += static_cast<int64_t>(L.lk[i][j]) * colors[i];
      s2 += static_cast<int64_t>(L.lk[i][j]) * colors[i] * colors[j];
    }
  // m s1 + m/(m-1) s2, over the denominator m-1
  return QLaurent::monomial(static_cast<int64_t>(m) * (m - 1) * s1 + static_cast<int64_t>(m) * s2, m - 1);
}

MInvariantValue m_invariant(const LinkPresentation& L, int m, const std::vector<int>& colors, int cut) {
  if (m < 2) throw SkeinError(ErrorKind::InvalidArgument, "m must be at least 2");
  ColoredLink cl = rectangle_coloring(L, m, colors);
  if (cut < 0 || cut >= L.num_components())
    throw SkeinError(ErrorKind::IndexError, "cut component " + std::to_string(cut + 1) + " out of range");
  const QLaurent frame = framing_factor(L, m, colors);
  MInvariantValue out;
  out.m = m;
  out.colors = colors;
  out.cut = cut;
  out.framing_exponent = frame.terms()[0].first * ((m - 1) / frame.denom());
  out.value = QFraction(frame) * psi_reduced(cl, m, cut) * modified_dimension(m, colors[static_cast<size_t>(cut)]);
  if (L.num_components() >= 2 && !out.value.is_laurent())
    throw SkeinError(ErrorKind::IntegralityViolation, "invariant of a " + std::to_string(L.num_components()) +
                                                          "-component link is not a Laurent polynomial: " +
                                                          out.value.str());
  return out;
}

QFraction links_gould(const LinkPresentation& L, int m, int a) {
  std::vector<int> colors(static_cast<size_t>(L.num_components()), a);
  return QFraction(product_of_brackets(m, a)) * m_invariant(L, m, colors).value;
}

QFraction links_gould_direct(const LinkPresentation& L, int m, int a) {
  std::vector<int> colors(static_cast<size_t>(L.num_components()), a);
  return QFraction(framing_factor(L, m, colors)) * psi_reduced(rectangle_coloring(L, m, colors), m, 0);
}

SpecializationReport verify_lg2k(const LinkPresentation& L, int N, const std::string& name, int bits) {
  if (N < 3) throw SkeinError(ErrorKind::InvalidArgument, "the column route needs N >= 3");
  const auto t0 = Clock::now();
  SpecializationReport r;
  r.identity = "links_gould_kashaev";
  r.link = name;
  r.params = {{"N", N}};
  r.tolerance = kRootTolerance;

  const Complex path_b = kashaev(L, N, bits);

  // Column coloring [1^{N-1}], psi_{N-2}, q = xi-bar.
  ColoredLink col = make_colored(L.braid, Partition::column(N - 1));
  const QFraction unframed = psi_delta(unframe(reduced_colored_homfly(col, 0), col), N - 2);
  const Complex rot = unit_root(N - 1, 2);  // e^{i pi (N-1)/2}
  const Complex d_bar = eval_root(modified_dimension(N - 1, 1), N, true, bits);
  const Complex path_a = Complex(Real(N)) * rot * d_bar * eval_root(unframed, N, true, bits);

  std::vector<int> ones(static_cast<size_t>(L.num_components()), 1);
  const MInvariantValue M = m_invariant(L, N - 1, ones);
  const Complex via_m = Complex(Real(N)) * rot * eval_root(M.value, N, true, bits);
  const Complex lg = eval_root(links_gould(L, N - 1, 1), N, true, bits);
  const Complex d_xi = eval_root(modified_dimension(N - 1, 1), N, false, bits);
  const Complex d_expected = unit_root(-(N - 1), 2) / Complex(Real(N));

  finish(r, path_a, path_b, t0);
  r.extra["m_invariant_route"] = sub_check(via_m, path_a, r.tolerance);
  r.extra["links_gould_value"] = sub_check(lg, path_b, r.tolerance);
  r.extra["modified_dimension_at_root"] = sub_check(d_xi, d_expected, r.tolerance);
  r.pass = r.rel_dev < r.tolerance && extras_pass(r);
  if (N % 2 == 0)
    r.note = "for even N the conjugate-root normalization contributes (-1)^(N-1); see README";
  r.seconds = since(t0);
  return r;
}

SpecializationReport verify_lpsi(const ColoredLink& cl, int delta, int N, const std::string& name, int bits) {
  cl.validate();
  if (delta <= 0 || delta >= N) throw SkeinError(ErrorKind::InvalidArgument, "need 0 < delta < N");
  for (const auto& c : cl.colors)
    if (c.size() >= N) throw SkeinError(ErrorKind::InvalidArgument, "every color needs fewer than N boxes");
  const auto t0 = Clock::now();
  SpecializationReport r;
  r.identity = "conjugate_specialization";
  r.link = name;
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& c : cl.colors) colors.push_back(c.parts());
  r.params = {{"delta", delta}, {"N", N}, {"colors", colors}};
  r.tolerance = kRootTolerance;

  const Scalar corr = (Scalar::a(-1) * Scalar::v()).pow(cl.cable_fdeg());
  const Scalar x = corr * reduced_colored_homfly(cl, 0);
  const ColoredLink conj = cl.conjugate();
  const Scalar y = corr * reduced_colored_homfly(conj, 0);
  const Complex lhs = eval_root(psi_delta(x, delta), N, false, bits);
  const Complex rhs = eval_root(psi_delta(y, N - delta), N, true, bits);
  finish(r, lhs, rhs, t0);
  const bool dual = x == y.theta();
  r.extra["theta_of_conjugate_coloring"] = {{"exact", true}, {"pass", dual}};
  r.pass = r.rel_dev < r.tolerance && extras_pass(r);
  r.seconds = since(t0);
  return r;
}

SpecializationReport verify_lpsi_scalar(const Scalar& x, int delta, int N, const std::string& name, int bits) {
  if (delta <= 0 || delta >= N) throw SkeinError(ErrorKind::InvalidArgument, "need 0 < delta < N");
  const auto t0 = Clock::now();
  SpecializationReport r;
  r.identity = "conjugate_specialization_scalar";
  r.link = name;
  r.params = {{"delta", delta}, {"N", N}, {"x", x.str()}};
  r.tolerance = kRootTolerance;
  const Complex lhs = eval_root(psi_delta(x.theta(), delta), N, false, bits);
  const Complex rhs = eval_root(psi_delta(x, N - delta), N, true, bits);
  finish(r, lhs, rhs, t0);
  r.pass = r.rel_dev < r.tolerance;
  return r;
}

SpecializationReport verify_lg2alex(const LinkPresentation& L, int m, int a, const std::string& name, int bits) {
  const auto t0 = Clock::now();
  SpecializationReport r;
  r.identity = "links_gould_alexander";
  r.link = name;
  r.params = {{"m", m}, {"a", a}};
  r.tolerance = kRootTolerance;

  set_precision_bits(bits);
  const AlexanderValue delta = alexander_knot(L.braid);
  // tau^{2m} with tau = e^{-i pi a / m}
  const Complex lhs = eval_poly_at_roots(delta.poly, {-2LL * m * a}, m);

  ColoredLink cl = rectangle_coloring(L, m, {a});
  std::string method;
  psi_reduced(cl, m, 0, &method);
  const QFraction lg = links_gould(L, m, a);
  const QFraction direct = links_gould_direct(L, m, a);
  const Complex rhs = eval_root(lg, m, false, bits);
  finish(r, lhs, rhs, t0);
  r.extra["two_paths_exact"] = {{"exact", true}, {"pass", lg == direct}};
  r.params["method"] = method;
  r.pass = r.rel_dev < r.tolerance && extras_pass(r);
  r.seconds = since(t0);
  return r;
}

SpecializationReport verify_m2alex(const LinkPresentation& L, int m, const std::vector<int>& colors,
                                   const std::string& name, int bits) {
  require_colors(L, colors);
  const auto t0 = Clock::now();
  SpecializationReport r;
  r.identity = "multivariable_alexander";
  r.link = name;
  r.params = {{"m", m}, {"colors", colors}};
  r.tolerance = kRootTolerance;
  set_precision_bits(bits);

  if (L.num_components() == 1) {
    // Both sides have a simple pole at q = xi_m; compare the residues
    // (t - t^-1) nabla(t) = Delta(t^2) and the Links-Gould value.
    const AlexanderValue delta = alexander_knot(L.braid);
    const Complex rhs = eval_poly_at_roots(delta.poly, {2LL * m * colors[0]}, m);
    const Complex lhs = eval_root(links_gould(L, m, colors[0]), m, false, bits);
    finish(r, lhs, rhs, t0);
    r.params["comparison"] = "exact, pole removed";
    r.pass = r.rel_dev < r.tolerance;
    return r;
  }

  const MInvariantValue M = m_invariant(L, m, colors, 0);
  const Complex lhs = unit_root(m - 1, 2) * eval_root(M.value, m, false, bits);
  const AlexanderValue delta = multivariable_alexander(L);
  std::vector<int64_t> k;
  for (int a : colors) k.push_back(2LL * m * a);  // nabla(t) ~ Delta(t^2) at t_i = xi^{m a_i}
  const Complex rhs = eval_poly_at_roots(delta.poly, k, m);
  finish(r, lhs, rhs, t0);
  const Complex neg = Complex(Real(0)) - rhs;
  const double flipped = relative_deviation(lhs, neg);
  if (flipped < r.rel_dev) {
    r.rel_dev = flipped;
    r.abs_dev = (lhs - neg).abs().convert_to<double>();
    r.params["unit"] = -1;
  } else {
    r.params["unit"] = 1;
  }
  r.params["comparison"] = "up to sign";
  const MInvariantValue other = m_invariant(L, m, colors, 1);
  r.extra["cut_independent"] = {{"exact", true}, {"pass", other.value == M.value}};
  r.pass = r.rel_dev < r.tolerance && extras_pass(r);
  r.seconds = since(t0);
  return r;
}

}  // namespace skein
