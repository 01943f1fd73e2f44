#include "skein/young.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw SkeinError(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw SkeinError(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') s += ch;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw SkeinError(ErrorKind::InvalidArgument, "malformed partition '" + std::string(text) + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

std::vector<Partition::Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j) out.push_back({i, j});
  return out;
}

int Partition::hook(const Cell& c) const {
  Partition conj = conjugate();
  return parts_[static_cast<size_t>(c.row)] + conj.parts()[static_cast<size_t>(c.col)] - c.row - c.col - 1;
}

int Partition::n_lambda() const {
  int s = 0;
  for (const auto& c : cells()) s += content(c);
  return s;
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + "]";
}

Scalar quantum_hook_product(const Partition& p) {
  Scalar r(1);
  for (const auto& c : p.cells()) r *= qint(p.hook(c));
  return r;
}

namespace {

HeckeElement signed_sum(int r, bool anti) {
  const PermTable& t = perm_table(r);
  HeckeElement out(r);
  for (uint32_t k = 0; k < t.size; ++k) {
    const int l = t.length[k];
    // f: (a/s)^-l = a^-l s^l ; g: (-as)^-l = (-1)^l a^-l s^-l
    Rational sign = anti && (l & 1) ? Rational(-1) : Rational(1);
    out.set_coeff(k, Poly::monomial({-l, anti ? -l : l, 0, 0}, sign));
  }
  const int e = r * (r - 1) / 2;
  out.set_scale(Scalar::s(anti ? e : -e) / qfact(r));
  return out;
}

HeckeElement tensor_all(const std::vector<HeckeElement>& xs) {
  HeckeElement out = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) out = tensor(out, xs[i]);
  return out;
}

std::optional<std::filesystem::path> cache_file(const Partition& p) {
  const char* dir = std::getenv("SKEIN_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::string name = "idempotent";
  for (int x : p.parts()) name += "_" + std::to_string(x);
  return std::filesystem::path(dir) / (name + ".json");
}

std::shared_ptr<const Idempotent> load_cached(const Partition& p) {
  auto path = cache_file(p);
  if (!path || !std::filesystem::exists(*path)) return nullptr;
  try {
    std::ifstream in(*path);
    auto j = nlohmann::json::parse(in);
    if (j.at("partition").get<std::vector<int>>() != p.parts()) return nullptr;
    auto idem = std::make_shared<Idempotent>(
        Idempotent{p, HeckeElement::from_json(j.at("element")), Scalar::from_json(j.at("alpha"))});
    if (idem->element.strands() != p.size()) return nullptr;
    return idem;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void store_cached(const Idempotent& idem) {
  auto path = cache_file(idem.partition);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  std::ofstream out(*path);
  if (!out) return;
  out << nlohmann::json{{"partition", idem.partition.parts()},
                        {"alpha", idem.alpha.to_json()},
                        {"element", idem.element.to_json()}}
             .dump();
}

Idempotent construct(const Partition& lambda) {
  const int r = lambda.size();
  const Partition conj = lambda.conjugate();
  std::vector<HeckeElement> rows, cols;
  for (int p : lambda.parts()) rows.push_back(symmetrizer(p));
  for (int p : conj.parts()) cols.push_back(antisymmetrizer(p));
  const HeckeElement F = tensor_all(rows);
  const HeckeElement G = tensor_all(cols);

  // rho(column-reading position) = row-reading position
  std::vector<int> row_start(static_cast<size_t>(lambda.length()), 0), col_start(static_cast<size_t>(conj.length()), 0);
  for (int i = 1; i < lambda.length(); ++i) row_start[static_cast<size_t>(i)] = row_start[static_cast<size_t>(i - 1)] + lambda.part(i);
  for (int j = 1; j < conj.length(); ++j) col_start[static_cast<size_t>(j)] = col_start[static_cast<size_t>(j - 1)] + conj.part(j);
  OneLine rho{}, rho_inv{};
  for (const auto& c : lambda.cells()) {
    const int R = row_start[static_cast<size_t>(c.row)] + c.col;
    const int C = col_start[static_cast<size_t>(c.col)] + c.row;
    rho[static_cast<size_t>(C)] = static_cast<uint8_t>(R);
    rho_inv[static_cast<size_t>(R)] = static_cast<uint8_t>(C);
  }
  const PermTable& t = perm_table(r);
  for (const OneLine& w : {rho, rho_inv}) {
    const uint32_t rank = t.rank(w);
    HeckeElement conjG = HeckeElement::basis(r, rank) * G * basis_inverse(r, rank);
    HeckeElement E = F * conjG;
    if (E.is_zero()) continue;
    HeckeElement E2 = E * E;
    auto alpha = E2.proportional_to(E);
    if (!alpha || alpha->is_zero()) continue;
    HeckeElement y = E * alpha->inverse();
    return Idempotent{lambda, std::move(y), *alpha};
  }
  throw SkeinError(ErrorKind::DegenerateIdempotent, "no idempotent found for " + lambda.str());
}

}  // namespace

HeckeElement symmetrizer(int r) {
  if (r < 1) throw SkeinError(ErrorKind::InvalidArgument, "symmetrizer needs r >= 1");
  return signed_sum(r, false);
}

HeckeElement antisymmetrizer(int r) {
  if (r < 1) throw SkeinError(ErrorKind::InvalidArgument, "antisymmetrizer needs r >= 1");
  return signed_sum(r, true);
}

std::shared_ptr<const Idempotent> build_idempotent(const Partition& lambda) {
  if (lambda.empty()) throw SkeinError(ErrorKind::InvalidArgument, "idempotent of the empty partition");
  perm_table(lambda.size());  // budget check before locking
  static std::mutex mu;
  static std::map<Partition, std::shared_ptr<const Idempotent>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  auto idem = load_cached(lambda);
  if (!idem) {
    auto built = std::make_shared<const Idempotent>(construct(lambda));
    store_cached(*built);
    idem = built;
  }
  cache.emplace(lambda, idem);
  return idem;
}

Scalar twist_eigenvalue(const Partition& lambda) {
  const int r = lambda.size();
  return Scalar::monomial(r * r, 2 * lambda.n_lambda(), -r);
}

std::optional<Scalar> measured_twist(const Partition& lambda) {
  const int r = lambda.size();
  const auto idem = build_idempotent(lambda);
  HeckeElement x = idem->element;
  std::vector<int> twist;
  for (int k = 0; k < r; ++k)
    for (int i = 1; i < r; ++i) twist.push_back(i);
  x.mul_word(twist);
  x *= (Scalar::a() * Scalar::v(-1)).pow(r);
  return x.proportional_to(idem->element);
}

std::optional<std::vector<int>> partition_to_weight(const Partition& lambda, int m, int n) {
  if (m < 1 || n < 0) throw SkeinError(ErrorKind::InvalidArgument, "need m >= 1 and n >= 0");
  if (lambda.part(m + 1) > n) return std::nullopt;
  std::vector<int> w;
  for (int i = 1; i < m; ++i) w.push_back(lambda.part(i) - lambda.part(i + 1));
  if (n == 0) return w;
  const Partition conj = lambda.conjugate();
  auto dd = [&](int i) { return std::max(conj.part(i) - m, 0); };
  w.push_back(lambda.part(m) - dd(1));
  for (int i = 1; i < n; ++i) w.push_back(dd(i) - dd(i + 1));
  return w;
}

Partition partition_for_color(int m, int n, const std::vector<int>& c, int a) {
  if (m < 1 || n < 1) throw SkeinError(ErrorKind::NotRepresentable, "need m >= 1 and n >= 1");
  if (static_cast<int>(c.size()) != m + n - 2)
    throw SkeinError(ErrorKind::NotRepresentable, "weight data must have m+n-2 entries");
  for (int x : c)
    if (x < 0) throw SkeinError(ErrorKind::NotRepresentable, "weight data must be nonnegative");
  const bool zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  if (zero && n == 1 && a <= 0)
    throw SkeinError(ErrorKind::NotRepresentable, "color " + std::to_string(a) + " is atypical for c = 0");
  auto cj = [&](int j) { return c[static_cast<size_t>(j - 1)]; };  // 1-based
  int S = 0;
  for (int j = m; j <= m + n - 2; ++j) S += cj(j);
  const int diff = a - n + S;  // l' - l
  const int lp = std::max(diff, 0), l = std::max(-diff, 0);
  std::vector<int> parts;
  for (int i = 1; i <= m; ++i) {
    int mu1 = 0;
    for (int j = i; j <= m - 1; ++j) mu1 += cj(j);
    parts.push_back(n + lp + mu1);
  }
  for (int i = 0; i < l; ++i) parts.push_back(n);
  std::vector<int> mu2;
  for (int i = 1; i <= n; ++i) {
    int s = 0;
    for (int j = m - 1 + i; j <= m + n - 2; ++j) s += cj(j);
    mu2.push_back(s);
  }
  Partition mu2p = Partition(mu2).conjugate();
  for (int p : mu2p.parts()) parts.push_back(p);
  Partition lambda(parts);
  if (!partition_to_weight(lambda, m, n))
    throw SkeinError(ErrorKind::NotRepresentable, "constructed partition gives the zero module");
  return lambda;
}

}  // namespace skein
