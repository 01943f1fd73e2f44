#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "skein/braid.hpp"
#include "skein/colored.hpp"
#include "skein/qlaurent.hpp"
#include "skein/root_eval.hpp"

namespace skein {

/// Outcome of one identity check between two computed values.
struct SpecializationReport {
  std::string identity;
  std::string link;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json lhs;
  nlohmann::json rhs;
  double abs_dev = 0;
  double rel_dev = 0;
  /// 0 for exact checks.
  double tolerance = 0;
  bool pass = false;
  double seconds = 0;
  std::string note;
  /// Further named sub-checks folded into `pass`.
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// The sl(m|1) invariant at integer colors q_i = q^{a_i}.
struct MInvariantValue {
  int m = 2;
  std::vector<int> colors;
  int cut = 0;
  QFraction value;
  /// Framing exponent numerator over m-1.
  int64_t framing_exponent = 0;

  nlohmann::json to_json() const;
};

/// 1 / prod_{i<m} (q^{a+i} - q^{-(a+i)})
QFraction modified_dimension(int m, int a);

/// psi_2(theta_[N-1]^-w H'(L, [N-1])) before evaluation.
QFraction kashaev_fraction(const LinkPresentation& L, int N);
Complex kashaev(const LinkPresentation& L, int N, int bits = kDefaultBits);

/// q^{m sum lk_ij a_i - r sum lk_ij a_i a_j}, r = m/(1-m), as q^{k/(m-1)}.
QLaurent framing_factor(const LinkPresentation& L, int m, const std::vector<int>& colors);

MInvariantValue m_invariant(const LinkPresentation& L, int m, const std::vector<int>& colors, int cut = 0);

/// prod_{i<m} (q^{a+i} - q^{-(a+i)}) times the invariant above.
QFraction links_gould(const LinkPresentation& L, int m, int a);
/// Framing factor times psi_{m-1}(H'), no modified dimension in between.
QFraction links_gould_direct(const LinkPresentation& L, int m, int a);

/// Kashaev invariant against the column-colored sl(N-1|1) route at the
/// conjugate root, plus the Links-Gould value and the d(V_1) evaluation.
SpecializationReport verify_lg2k(const LinkPresentation& L, int N, const std::string& name,
                                 int bits = kDefaultBits);

/// psi_delta at xi against psi_{N-delta} of the conjugate coloring at xi-bar,
/// both corrected by (a^-1 v)^w.
SpecializationReport verify_lpsi(const ColoredLink& cl, int delta, int N, const std::string& name,
                                 int bits = kDefaultBits);

/// psi_delta(Theta x) at xi against psi_{N-delta}(x) at xi-bar.
SpecializationReport verify_lpsi_scalar(const Scalar& x, int delta, int N, const std::string& name,
                                        int bits = kDefaultBits);

/// Delta(tau^{2m}) at tau = xi_m^{-a} against the Links-Gould value at xi_m.
SpecializationReport verify_lg2alex(const LinkPresentation& L, int m, int a, const std::string& name,
                                    int bits = kDefaultBits);

/// e^{i pi (m-1)/2} M(xi_m, xi_m^{a_i}) against the Conway function at
/// t_i = xi_m^{m a_i}. Links are compared up to sign; knots use the
/// Links-Gould value against Delta, since both sides have a simple pole there.
SpecializationReport verify_m2alex(const LinkPresentation& L, int m, const std::vector<int>& colors,
                                   const std::string& name, int bits = kDefaultBits);

}  // namespace skein
