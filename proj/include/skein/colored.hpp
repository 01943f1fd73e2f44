#pragma once

#include <vector>

#include "skein/braid.hpp"
#include "skein/scalar.hpp"
#include "skein/young.hpp"

namespace skein {

struct ColoredLink {
  LinkPresentation link;
  std::vector<Partition> colors;  // one per component

  /// Throws InvalidArgument when the counts disagree.
  void validate() const;
  std::vector<int> widths() const;
  /// Framing degree of the cabled link: w^T lk w with w the widths.
  int cable_fdeg() const;
  ColoredLink conjugate() const;
};

ColoredLink make_colored(const BraidWord& b, std::vector<Partition> colors);
/// Every component colored by the same partition.
ColoredLink make_colored(const BraidWord& b, const Partition& color);

/// H(L, lambda*) as the closure of the cabled braid with y_lambda inserted on
/// every original strand. Results are memoized.
Scalar colored_homfly(const ColoredLink& cl);

/// H(unknot, lambda)
Scalar colored_unknot(const Partition& lambda);

/// H / H(unknot, colors[cut])
Scalar reduced_colored_homfly(const ColoredLink& cl, int cut);

/// theta_lambda^{-w} x for a single shared color; rejects mixed colorings.
Scalar unframe(const Scalar& x, const ColoredLink& cl);

}  // namespace skein
