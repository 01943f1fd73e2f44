#include "skein/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

void BraidWord::validate() const {
  if (strands < 1) throw SkeinError(ErrorKind::IndexError, "braid needs at least one strand");
  for (int g : letters) {
    if (g == 0 || std::abs(g) >= strands)
      throw SkeinError(ErrorKind::IndexError,
                       "generator " + std::to_string(g) + " out of range for " + std::to_string(strands) + " strands");
  }
}

nlohmann::json BraidWord::to_json() const { return {{"n", strands}, {"word", letters}}; }

BraidWord BraidWord::from_json(const nlohmann::json& j) {
  BraidWord b{j.at("n").get<int>(), j.at("word").get<std::vector<int>>()};
  b.validate();
  return b;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    int v = 0;
    const char* b = s.data() + start + (start < s.size() && s[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(b, s.data() + pos, v);
    if (ec != std::errc() || ptr != s.data() + pos || pos == start) throw ParseError(start, "expected integer");
    return v;
  }
};

}  // namespace

BraidWord parse_braid(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (text.substr(c.pos, 2) != "BR") throw ParseError(c.pos, "expected 'BR'");
  c.pos += 2;
  c.expect('[');
  BraidWord b;
  size_t npos = c.pos;
  b.strands = c.integer();
  if (b.strands < 1) throw ParseError(npos, "strand count must be positive");
  c.expect(';');
  while (!c.peek(']')) {
    if (c.pos >= text.size()) throw ParseError(c.pos, "unterminated braid");
    if (c.peek(',')) {
      ++c.pos;
      continue;
    }
    size_t at = c.pos;
    int g = c.integer();
    if (g == 0) throw ParseError(at, "generator index 0");
    b.letters.push_back(g);
  }
  c.expect(']');
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError(c.pos, "trailing characters");
  b.validate();
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream os;
  os << "BR[" << b.strands << ";";
  for (int g : b.letters) os << " " << g;
  os << "]";
  return os.str();
}

std::optional<BraidWord> named_braid(std::string_view name) {
  if (name == "unknot") return BraidWord{1, {}};
  if (name == "hopf") return BraidWord{2, {1, 1}};
  if (name == "trefoil") return BraidWord{2, {1, 1, 1}};
  if (name == "figure8" || name == "figure-eight") return BraidWord{3, {1, -2, 1, -2}};
  if (name == "t24") return BraidWord{2, {1, 1, 1, 1}};
  return std::nullopt;
}

std::vector<int> closure_permutation(const BraidWord& b) {
  // at[p] = starting strand currently at position p
  std::vector<int> at(static_cast<size_t>(b.strands));
  for (int j = 0; j < b.strands; ++j) at[static_cast<size_t>(j)] = j;
  for (int g : b.letters) {
    int i = std::abs(g) - 1;
    std::swap(at[static_cast<size_t>(i)], at[static_cast<size_t>(i) + 1]);
  }
  std::vector<int> perm(static_cast<size_t>(b.strands));
  for (int p = 0; p < b.strands; ++p) perm[static_cast<size_t>(at[static_cast<size_t>(p)])] = p;
  return perm;
}

nlohmann::json LinkPresentation::to_json() const {
  return {{"braid", braid.to_json()}, {"components", components}, {"lk", lk}, {"fdeg", fdeg}};
}

LinkPresentation analyze_closure(const BraidWord& b) {
  b.validate();
  LinkPresentation L;
  L.braid = b;
  const auto perm = closure_permutation(b);
  const size_t n = static_cast<size_t>(b.strands);
  L.component_of.assign(n, -1);
  for (size_t j = 0; j < n; ++j) {
    if (L.component_of[j] >= 0) continue;
    std::vector<int> cyc;
    size_t k = j;
    const int id = static_cast<int>(L.components.size());
    while (L.component_of[k] < 0) {
      L.component_of[k] = id;
      cyc.push_back(static_cast<int>(k) + 1);
      k = static_cast<size_t>(perm[k]);
    }
    std::sort(cyc.begin(), cyc.end());
    L.components.push_back(std::move(cyc));
  }
  const size_t k = L.components.size();
  std::vector<std::vector<int>> twice(k, std::vector<int>(k, 0));
  std::vector<int> at(n);
  for (size_t j = 0; j < n; ++j) at[j] = static_cast<int>(j);
  for (int g : b.letters) {
    const size_t i = static_cast<size_t>(std::abs(g) - 1);
    const int sign = g > 0 ? 1 : -1;
    const int ci = L.component_of[static_cast<size_t>(at[i])];
    const int cj = L.component_of[static_cast<size_t>(at[i + 1])];
    if (ci == cj) {
      twice[static_cast<size_t>(ci)][static_cast<size_t>(ci)] += 2 * sign;
    } else {
      twice[static_cast<size_t>(ci)][static_cast<size_t>(cj)] += sign;
      twice[static_cast<size_t>(cj)][static_cast<size_t>(ci)] += sign;
    }
    std::swap(at[i], at[i + 1]);
    L.fdeg += sign;
  }
  L.lk.assign(k, std::vector<int>(k, 0));
  for (size_t x = 0; x < k; ++x)
    for (size_t y = 0; y < k; ++y) L.lk[x][y] = twice[x][y] / 2;
  return L;
}

std::vector<int> block_swap(int offset, int p, int q) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(p * q));
  for (int i = p - 1; i >= 0; --i)
    for (int j = 0; j < q; ++j) w.push_back(offset + i + j + 1);
  return w;
}

BraidWord cable_braid_by_strand(const LinkPresentation& L, const std::vector<int>& strand_widths) {
  const size_t n = static_cast<size_t>(L.braid.strands);
  if (strand_widths.size() != n) throw SkeinError(ErrorKind::WidthMismatch, "one width per strand required");
  std::vector<int> comp_width(L.components.size(), 0);
  for (size_t j = 0; j < n; ++j) {
    int w = strand_widths[j];
    if (w < 1) throw SkeinError(ErrorKind::WidthMismatch, "widths must be positive");
    int& cw = comp_width[static_cast<size_t>(L.component_of[j])];
    if (cw != 0 && cw != w) throw SkeinError(ErrorKind::WidthMismatch, "strands of one component have different widths");
    cw = w;
  }
  std::vector<int> width(strand_widths);  // width at each current position
  BraidWord out;
  out.strands = 0;
  for (int w : width) out.strands += w;
  for (int g : L.braid.letters) {
    const size_t i = static_cast<size_t>(std::abs(g) - 1);
    int offset = 0;
    for (size_t t = 0; t < i; ++t) offset += width[t];
    const int p = width[i], q = width[i + 1];
    if (g > 0) {
      auto w = block_swap(offset, p, q);
      out.letters.insert(out.letters.end(), w.begin(), w.end());
    } else {
      auto w = block_swap(offset, q, p);
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-*it);
    }
    std::swap(width[i], width[i + 1]);
  }
  return out;
}

BraidWord cable_braid(const LinkPresentation& L, const std::vector<int>& widths) {
  if (widths.size() != L.components.size())
    throw SkeinError(ErrorKind::WidthMismatch, "one width per component required");
  std::vector<int> per_strand(L.component_of.size());
  for (size_t j = 0; j < per_strand.size(); ++j) per_strand[j] = widths[static_cast<size_t>(L.component_of[j])];
  return cable_braid_by_strand(L, per_strand);
}

}  // namespace skein
