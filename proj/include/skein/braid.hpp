#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace skein {

/// Braid on `strands` strands. Letter g > 0 is sigma_g, g < 0 is sigma_|g|^-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  /// Throws IndexError if a letter is out of range.
  void validate() const;
  nlohmann::json to_json() const;
  static BraidWord from_json(const nlohmann::json& j);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Grammar: BR[<n>; <g1> <g2> ...]. Whitespace anywhere; commas also separate letters.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

/// Small catalogue of named closures: unknot, hopf, trefoil, figure8, t24.
std::optional<BraidWord> named_braid(std::string_view name);

/// perm[j] is the bottom position (0-based) reached by the strand starting at top position j.
std::vector<int> closure_permutation(const BraidWord& b);

struct LinkPresentation {
  BraidWord braid;
  /// Cycles of the closure permutation, 1-based strand indices, ordered by smallest member.
  std::vector<std::vector<int>> components;
  /// component_of[j] for 0-based top position j.
  std::vector<int> component_of;
  /// Symmetric; diagonal holds each component's writhe.
  std::vector<std::vector<int>> lk;
  int fdeg = 0;

  int num_components() const { return static_cast<int>(components.size()); }
  nlohmann::json to_json() const;
};

LinkPresentation analyze_closure(const BraidWord& b);

/// Replaces each strand by `widths[component]` parallel strands.
BraidWord cable_braid(const LinkPresentation& L, const std::vector<int>& widths);

/// Cable with a width for every top strand; throws WidthMismatch when strands of
/// one component disagree.
BraidWord cable_braid_by_strand(const LinkPresentation& L, const std::vector<int>& strand_widths);

/// The positive permutation braid moving a block of p strands across a block
/// of q strands, starting after position `offset` (0-based).
std::vector<int> block_swap(int offset, int p, int q);

}  // namespace skein
