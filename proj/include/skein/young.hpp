#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "skein/hecke.hpp"
#include "skein/scalar.hpp"

namespace skein {

/// Young diagram with weakly decreasing positive rows.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// Parses "2,1" or "[2,1]"; an empty string is the empty partition.
  static Partition parse(std::string_view text);
  static Partition row(int r) { return Partition({r}); }
  static Partition column(int r) { return Partition(std::vector<int>(static_cast<size_t>(r), 1)); }
  static Partition rectangle(int rows, int cols) {
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based i; zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0; }
  Partition conjugate() const;

  struct Cell {
    int row, col;  // 0-based
  };
  std::vector<Cell> cells() const;
  int content(const Cell& c) const { return c.col - c.row; }
  int hook(const Cell& c) const;
  /// Sum of contents.
  int n_lambda() const;

  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Product of quantum integers of the hook lengths.
Scalar quantum_hook_product(const Partition& p);

HeckeElement symmetrizer(int r);
HeckeElement antisymmetrizer(int r);

struct Idempotent {
  Partition partition;
  HeckeElement element;
  /// E^2 = alpha * E for the unnormalized product E.
  Scalar alpha;
};

/// Minimal idempotent of type lambda, cached per partition (also on disk when
/// SKEIN_CACHE_DIR is set).
std::shared_ptr<const Idempotent> build_idempotent(const Partition& lambda);

/// a^{|l|^2} v^{-|l|} s^{2 n(l)}
Scalar twist_eigenvalue(const Partition& lambda);

/// (a v^-1)^r times the full twist acting on y_lambda, divided by y_lambda.
/// Returns nullopt if the result is not proportional to y_lambda.
std::optional<Scalar> measured_twist(const Partition& lambda);

/// Highest weight of the module picked out by y_lambda for gl(m|n); nullopt
/// stands for the zero module.
std::optional<std::vector<int>> partition_to_weight(const Partition& lambda, int m, int n);

/// Partition whose module is the typical module of color `a` with weight
/// data c (length m+n-2). Throws NotRepresentable when out of reach.
Partition partition_for_color(int m, int n, const std::vector<int>& c, int a);

}  // namespace skein
