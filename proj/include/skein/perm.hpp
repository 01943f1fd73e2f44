#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace skein {

inline constexpr int kMaxStrands = 8;

using OneLine = std::array<uint8_t, kMaxStrands>;

/// All permutations of {0..n-1} in lexicographic order of one-line notation,
/// with lengths and the right action of simple transpositions.
/// Right action: (pi s_i) swaps one-line positions i and i+1 (0-based i).
struct PermTable {
  int n = 0;
  uint32_t size = 0;
  std::vector<OneLine> perms;
  std::vector<uint8_t> length;
  /// right[r * (n-1) + i] = rank of perm[r] * s_i
  std::vector<uint32_t> right;

  uint32_t rank(const OneLine& p) const;
  uint32_t times(uint32_t r, int i) const { return right[static_cast<size_t>(r) * static_cast<size_t>(n - 1) + static_cast<size_t>(i)]; }
  /// True if l(pi s_i) > l(pi).
  bool ascent(uint32_t r, int i) const { return perms[r][static_cast<size_t>(i)] < perms[r][static_cast<size_t>(i) + 1]; }
  /// 0-based generator indices i_1..i_k with pi = s_{i_1} ... s_{i_k} reduced.
  std::vector<int> reduced_word(uint32_t r) const;
};

/// Cached table; throws BudgetError beyond kMaxStrands.
const PermTable& perm_table(int n);

/// Rank of the block sum pi (+) sigma in S_{n1+n2}.
uint32_t direct_sum_rank(int n1, uint32_t r1, int n2, uint32_t r2);

}  // namespace skein
