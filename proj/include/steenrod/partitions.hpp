#pragma once

// Ordered partitions (compositions) of a positive integer.

#include <string>
#include <vector>

namespace steenrod {

inline constexpr int kMaxCompositionSize = 20;

class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part at 1-based position i.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  /// Sum of the parts strictly before 1-based position i.
  int offset(int i) const;

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All compositions of n in lexicographic order. Throws for n < 1 or
/// n > max_n.
std::vector<Composition> enumerate_compositions(int n, int max_n = kMaxCompositionSize);

/// Appends m - total() as a new last part; requires m > total().
Composition extend_composition(const Composition& nu, int m);

}  // namespace steenrod
