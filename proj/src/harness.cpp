#include "skein/harness.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "skein/errors.hpp"
#include "skein/hecke.hpp"
#include "skein/oracles.hpp"

namespace skein {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kTol = 1e-9;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SpecializationReport exact(const std::string& identity, const std::string& link, nlohmann::json params,
                           const std::string& lhs, const std::string& rhs, bool ok, Clock::time_point t0) {
  SpecializationReport r;
  r.identity = identity;
  r.link = link;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_dev = r.rel_dev = ok ? 0 : 1;
  r.tolerance = 0;
  r.pass = ok;
  r.seconds = since(t0);
  return r;
}

SpecializationReport numeric(const std::string& identity, const std::string& link, nlohmann::json params,
                             const Complex& lhs, const Complex& rhs, Clock::time_point t0) {
  SpecializationReport r;
  r.identity = identity;
  r.link = link;
  r.params = std::move(params);
  r.lhs = lhs.to_json();
  r.rhs = rhs.to_json();
  r.abs_dev = (lhs - rhs).abs().convert_to<double>();
  r.rel_dev = relative_deviation(lhs, rhs);
  r.tolerance = kTol;
  r.pass = r.rel_dev < kTol;
  r.seconds = since(t0);
  return r;
}

LinkPresentation named(const std::string& name) { return analyze_closure(*named_braid(name)); }

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n == 0) return {Partition()};
  std::vector<Partition> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (const auto& rest : partitions_of(n - first, first)) {
      std::vector<int> parts{first};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(parts);
    }
  return out;
}

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int n = 1; n <= k; ++n)
    for (auto& p : partitions_of(n, n)) out.push_back(std::move(p));
  return out;
}

nlohmann::json colors_json(const std::vector<Partition>& cs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cs) j.push_back(c.parts());
  return j;
}

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_len) {
  BraidWord b;
  b.strands = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_strands));
  if (b.strands == 1) return b;
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1));
    b.letters.push_back(rng() % 2 ? g : -g);
  }
  return b;
}

// ---- criterion 1 ----
void skein_suite(SuiteResult& s) {
  auto t0 = Clock::now();
  s.checks.push_back(exact("circle_value", "unknot", {}, markov_eval(HeckeElement::identity(1)).str(),
                           Scalar::delta_h().str(), markov_eval(HeckeElement::identity(1)) == Scalar::delta_h(), t0));
  t0 = Clock::now();
  {
    const Scalar curl = markov_eval(hecke_from_braid(BraidWord{2, {1}}));
    const Scalar expect = Scalar::a() * Scalar::v(-1) * Scalar::delta_h();
    s.checks.push_back(exact("curl_value", "BR[2; 1]", {}, curl.str(), expect.str(), curl == expect, t0));
  }
  std::mt19937 rng(20240611);
  for (int k = 0; k < 12; ++k) {
    t0 = Clock::now();
    BraidWord b = random_braid(rng, 4, 6);
    while (b.strands < 2) b = random_braid(rng, 4, 6);
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1));
    const size_t at = rng() % (b.letters.size() + 1);
    BraidWord plus = b, minus = b;
    plus.letters.insert(plus.letters.begin() + static_cast<std::ptrdiff_t>(at), g);
    minus.letters.insert(minus.letters.begin() + static_cast<std::ptrdiff_t>(at), -g);
    const Scalar lhs = Scalar::a(-1) * markov_eval(hecke_from_braid(plus)) - Scalar::a() * markov_eval(hecke_from_braid(minus));
    const Scalar rhs = Scalar::z() * markov_eval(hecke_from_braid(b));
    s.checks.push_back(exact("skein_relation", format_braid(plus), {{"crossing", at + 1}}, lhs.str(), rhs.str(), lhs == rhs, t0));
  }
  std::vector<std::pair<std::string, BraidWord>> suite;
  for (const char* n : {"unknot", "hopf", "trefoil", "figure8", "t24"}) suite.emplace_back(n, *named_braid(n));
  for (int k = 0; k < 20; ++k) {
    BraidWord b = random_braid(rng, 4, 8);
    suite.emplace_back(format_braid(b), b);
  }
  for (const auto& [name, b] : suite) {
    t0 = Clock::now();
    const Scalar h = markov_eval(hecke_from_braid(b));
    const Scalar o = naive_skein_homfly(b);
    s.checks.push_back(exact("skein_oracle_agreement", name, {{"braid", format_braid(b)}}, h.str(), o.str(), h == o, t0));
  }
}

// ---- criterion 2 ----
void idempotent_suite(SuiteResult& s) {
  for (const auto& lambda : partitions_up_to(4)) {
    auto t0 = Clock::now();
    const auto idem = build_idempotent(lambda);
    const HeckeElement& y = idem->element;
    const nlohmann::json p = {{"partition", lambda.parts()}};
    const HeckeElement y2 = y * y;
    s.checks.push_back(exact("idempotent_square", lambda.str(), p, "y^2", "y", y2 == y, t0));
    t0 = Clock::now();
    auto d = y.fdeg();
    s.checks.push_back(exact("idempotent_framing_degree", lambda.str(), p, d ? std::to_string(*d) : "mixed", "0",
                             d && *d == 0, t0));
    t0 = Clock::now();
    const PermTable& t = perm_table(lambda.size());
    bool minimal = true;
    for (uint32_t k = 0; k < t.size && minimal; ++k) {
      HeckeElement probe = y * HeckeElement::basis(lambda.size(), k) * y;
      if (!probe.is_zero() && !probe.proportional_to(y)) minimal = false;
    }
    s.checks.push_back(exact("idempotent_minimality", lambda.str(), p, minimal ? "y w y in Q y for all w" : "not minimal",
                             "y w y in Q y for all w", minimal, t0));
    t0 = Clock::now();
    const auto tw = measured_twist(lambda);
    const Scalar expect = twist_eigenvalue(lambda);
    s.checks.push_back(exact("twist_eigenvalue", lambda.str(), p, tw ? tw->str() : "not proportional", expect.str(),
                             tw && *tw == expect, t0));
  }
}

// ---- criterion 3 ----
void duality_suite(SuiteResult& s) {
  const auto parts = partitions_up_to(3);
  auto check = [&](const std::string& name, const std::vector<Partition>& colors) {
    const auto t0 = Clock::now();
    ColoredLink cl = make_colored(*named_braid(name), colors);
    const Scalar h = colored_homfly(cl);
    const Scalar hc = colored_homfly(cl.conjugate());
    s.checks.push_back(exact("rank_level_duality", name, {{"colors", colors_json(colors)}}, "theta(H(L, colors))",
                             "H(L, conjugate colors)", h.theta() == hc, t0));
  };
  for (const auto& l : parts) check("trefoil", {l});
  for (const auto& l1 : parts)
    for (const auto& l2 : parts) check("hopf", {l1, l2});
}

// ---- criterion 4 ----
void quantum_dimension_suite(SuiteResult& s) {
  for (int m : {2, 3})
    for (const auto& lambda : partitions_up_to(3)) {
      const auto t0 = Clock::now();
      const QFraction lhs = psi_delta(colored_unknot(lambda), m);
      const QFraction rhs = quantum_weyl_dimension(lambda, m);
      s.checks.push_back(exact("quantum_dimension", "unknot", {{"m", m}, {"partition", lambda.parts()}}, lhs.str(),
                               rhs.str(), lhs == rhs, t0));
    }
}

// ---- criterion 5 ----
void kashaev_suite(SuiteResult& s, int bits) {
  for (int N : {2, 3, 4}) {
    const auto t0 = Clock::now();
    s.checks.push_back(numeric("kashaev_unknot", "unknot", {{"N", N}}, kashaev(named("unknot"), N, bits),
                               Complex(Real(1)), t0));
  }
  for (const char* name : {"trefoil", "figure8"}) {
    const auto t0 = Clock::now();
    const Complex k = kashaev(named(name), 2, bits);
    const AlexanderValue d = alexander_knot(*named_braid(name));
    const Complex det = eval_poly_at_roots(d.poly, {1}, 1);  // t = -1
    s.checks.push_back(numeric("kashaev_determinant", name, {{"N", 2}}, Complex(k.abs()), Complex(det.abs()), t0));
  }
}

// ---- criterion 6 ----
void lg2k_suite(SuiteResult& s, int bits) {
  for (const char* name : {"unknot", "trefoil", "figure8"}) s.checks.push_back(verify_lg2k(named(name), 3, name, bits));
}

// ---- criterion 7 ----
void lpsi_suite(SuiteResult& s, int bits) {
  for (auto [delta, N] : {std::pair{2, 3}, std::pair{2, 4}})
    for (const char* name : {"trefoil", "hopf"}) {
      ColoredLink cl = make_colored(*named_braid(name), Partition::row(1));
      s.checks.push_back(verify_lpsi(cl, delta, N, name, bits));
    }
  std::mt19937 rng(77);
  auto coef = [&] { return static_cast<int64_t>(rng() % 7) - 3; };
  for (int k = 0; k < 4; ++k) {
    std::vector<Term> terms;
    for (int t = 0; t < 5; ++t)
      terms.push_back({monomial::pack({0, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 5) - 2, 0}),
                       Rational(coef() == 0 ? 1 : coef())});
    Poly num = Poly::from_unsorted(std::move(terms));
    if (num.is_zero()) num = Poly(Rational(1));
    // s^2 + 3 has no zero on the unit circle
    Poly den = Poly::monomial({0, 2, 0, 0}) + Poly(Rational(3));
    const Scalar x(num, den);
    for (auto [delta, N] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 5}})
      s.checks.push_back(verify_lpsi_scalar(x, delta, N, "random", bits));
  }
}

// ---- criterion 8 ----
void lg2alex_suite(SuiteResult& s, int bits) {
  for (const char* name : {"trefoil", "figure8"})
    for (int a : {1, 2}) s.checks.push_back(verify_lg2alex(named(name), 2, a, name, bits));
}

// ---- criterion 9 ----
void m2alex_suite(SuiteResult& s, int bits) {
  for (const char* name : {"hopf", "t24"})
    for (const std::vector<int>& c : {std::vector<int>{1, 1}, std::vector<int>{1, 2}})
      s.checks.push_back(verify_m2alex(named(name), 2, c, name, bits));
  for (int a : {1, 2}) s.checks.push_back(verify_m2alex(named("trefoil"), 2, {a}, "trefoil", bits));
}

// ---- criterion 10 ----
void modified_dimension_suite(SuiteResult& s, int bits) {
  for (auto [m, a] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    const auto t0 = Clock::now();
    const QFraction M = m_invariant(named("unknot"), m, {a}).value;
    const QFraction d = modified_dimension(m, a);
    s.checks.push_back(exact("unknot_modified_dimension", "unknot", {{"m", m}, {"a", a}}, M.str(), d.str(), M == d, t0));
  }
  set_precision_bits(bits);
  for (int m = 2; m <= 5; ++m) {
    // prod_i (q^i q1 - q^-i q1^-1) at q = xi_m against e^{i pi (m-1)/2} (q1^m - q1^-m),
    // at q1 = e^{i pi k / (m M)} for a few generic k.
    const int64_t M = 97;
    for (int64_t k : {1, 13, 50, 131}) {
      const auto t0 = Clock::now();
      const Complex q1 = unit_root(k, m * M);
      Complex prod(Real(1));
      for (int i = 0; i < m; ++i) {
        const Complex qi = unit_root(i, m);
        const Complex qmi = unit_root(-i, m);
        prod = prod * (qi * q1 - qmi * unit_root(-k, m * M));
      }
      const Complex rhs = unit_root(m - 1, 2) * (unit_root(k * m, m * M) - unit_root(-k * m, m * M));
      s.checks.push_back(numeric("modified_dimension_root_identity", "-", {{"m", m}, {"q1_angle", {k, m * M}}}, prod,
                                 rhs, t0));
    }
    for (int l = 1; l < m; ++l) {
      auto t0 = Clock::now();
      const QFraction binom = psi_delta(qbinom(m, l), 1);
      QLaurent num(1), den(1);
      for (int i = 1; i <= l; ++i)
        for (int j = l + 1; j <= m; ++j) {
          num = num * bracket(j - i + 1);
          den = den * bracket(j - i);
        }
      const QFraction prod(num, den);
      s.checks.push_back(exact("binomial_product_form", "-", {{"m", m}, {"l", l}}, binom.str(), prod.str(),
                               binom == prod, t0));
      t0 = Clock::now();
      s.checks.push_back(numeric("binomial_vanishes_at_root", "-", {{"m", m}, {"l", l}},
                                 eval_root(binom, m, false, bits), Complex(Real(0)), t0));
    }
  }
}

// ---- criterion 11 ----
void integrality_suite(SuiteResult& s) {
  for (const char* name : {"hopf", "t24"})
    for (const std::vector<int>& c : {std::vector<int>{1, 1}, std::vector<int>{1, 2}, std::vector<int>{2, 2}}) {
      const auto t0 = Clock::now();
      std::string text;
      bool ok = false;
      try {
        const MInvariantValue M = m_invariant(named(name), 2, c);
        ok = M.value.is_laurent() && M.value.num().is_integral();
        text = M.value.str();
      } catch (const SkeinError& e) {
        if (e.kind() != ErrorKind::IntegralityViolation) throw;
        text = e.what();
      }
      s.checks.push_back(exact("integrality", name, {{"m", 2}, {"colors", c}}, text, "Laurent polynomial in q", ok, t0));
    }
}

struct SuiteEntry {
  std::string name;
  int criterion;
  std::string title;
  double time_limit;
  std::function<void(SuiteResult&, int)> body;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> all = {
      {"skein", 1, "skein axioms and agreement with the skein oracle", 10, [](SuiteResult& s, int) { skein_suite(s); }},
      {"idempotents", 2, "minimal idempotents and twist eigenvalues for |lambda| <= 4", 60,
       [](SuiteResult& s, int) { idempotent_suite(s); }},
      {"duality", 3, "rank-level duality on trefoil and Hopf link", 300, [](SuiteResult& s, int) { duality_suite(s); }},
      {"quantum_dimension", 4, "unknot against the sl(m) quantum dimension", 0,
       [](SuiteResult& s, int) { quantum_dimension_suite(s); }},
      {"kashaev_determinant", 5, "Kashaev invariant at N = 2 against the determinant", 0, kashaev_suite},
      {"links_gould_kashaev", 6, "Kashaev invariant against the column-colored sl(N-1|1) route", 300, lg2k_suite},
      {"conjugate_specialization", 7, "conjugate specializations at xi and xi-bar", 0, lpsi_suite},
      {"links_gould_alexander", 8, "Links-Gould at xi_m against the Alexander polynomial", 0, lg2alex_suite},
      {"multivariable_alexander", 9, "sl(2|1) invariant against the Conway function", 0, m2alex_suite},
      {"modified_dimension", 10, "modified dimensions and their root-of-unity identities", 0,
       modified_dimension_suite},
      {"integrality", 11, "integrality of the sl(2|1) invariant of links", 0,
       [](SuiteResult& s, int) { integrality_suite(s); }},
  };
  return all;
}

}  // namespace

int SuiteResult::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back(c.to_json());
  nlohmann::json j{{"suite", name},          {"criterion", criterion}, {"title", title},
                   {"pass", pass},           {"seconds", seconds},     {"passed", passed()},
                   {"total", checks.size()}, {"checks", cs}};
  if (time_limit > 0) j["time_limit"] = time_limit;
  if (!error.empty()) j["error"] = error;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : registry()) n.push_back(s.name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, int bits) {
  for (const auto& entry : registry()) {
    if (entry.name != name) continue;
    SuiteResult r;
    r.name = entry.name;
    r.criterion = entry.criterion;
    r.title = entry.title;
    r.time_limit = entry.time_limit;
    const auto t0 = Clock::now();
    set_precision_bits(bits);
    try {
      entry.body(r, bits);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    r.seconds = since(t0);
    r.pass = r.error.empty() && !r.checks.empty() && r.passed() == static_cast<int>(r.checks.size()) &&
             (r.time_limit == 0 || r.seconds < r.time_limit);
    return r;
  }
  throw SkeinError(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace skein
