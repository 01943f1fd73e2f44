#include "skein/perm.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "skein/errors.hpp"

namespace skein {

uint32_t PermTable::rank(const OneLine& p) const {
  // Lehmer code in the factorial number system matches lexicographic order.
  uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    uint32_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<size_t>(j)] < p[static_cast<size_t>(i)]) ++smaller;
    r = r * static_cast<uint32_t>(n - i) + smaller;
  }
  return r;
}

std::vector<int> PermTable::reduced_word(uint32_t r) const {
  std::vector<int> rev;
  OneLine p = perms[r];
  bool found = true;
  while (found) {
    found = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(i) + 1]) {
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]);
        rev.push_back(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

namespace {

std::unique_ptr<PermTable> build(int n) {
  auto t = std::make_unique<PermTable>();
  t->n = n;
  OneLine p{};
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  do {
    t->perms.push_back(p);
    uint8_t inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    t->length.push_back(inv);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  t->size = static_cast<uint32_t>(t->perms.size());
  if (n > 1) {
    t->right.resize(static_cast<size_t>(t->size) * static_cast<size_t>(n - 1));
    for (uint32_t r = 0; r < t->size; ++r) {
      for (int i = 0; i + 1 < n; ++i) {
        OneLine q = t->perms[r];
        std::swap(q[static_cast<size_t>(i)], q[static_cast<size_t>(i) + 1]);
        t->right[static_cast<size_t>(r) * static_cast<size_t>(n - 1) + static_cast<size_t>(i)] = t->rank(q);
      }
    }
  }
  return t;
}

}  // namespace

const PermTable& perm_table(int n) {
  if (n < 1) throw SkeinError(ErrorKind::InvalidArgument, "permutation degree must be positive");
  if (n > kMaxStrands)
    throw SkeinError(ErrorKind::BudgetError,
                     std::to_string(n) + " strands exceeds the ceiling of " + std::to_string(kMaxStrands));
  static std::mutex mu;
  static std::unique_ptr<PermTable> tables[kMaxStrands + 1];
  std::lock_guard lock(mu);
  if (!tables[n]) tables[n] = build(n);
  return *tables[n];
}

uint32_t direct_sum_rank(int n1, uint32_t r1, int n2, uint32_t r2) {
  const PermTable& t = perm_table(n1 + n2);
  const OneLine& a = perm_table(n1).perms[r1];
  const OneLine& b = perm_table(n2).perms[r2];
  OneLine p{};
  for (int i = 0; i < n1; ++i) p[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
  for (int i = 0; i < n2; ++i) p[static_cast<size_t>(n1 + i)] = static_cast<uint8_t>(n1 + b[static_cast<size_t>(i)]);
  return t.rank(p);
}

}  // namespace skein
