#pragma once

// Hot loops with an OpenMP version and the serial reference it must match.

#include <cstdint>
#include <string>
#include <vector>

#include "steenrod/grouptheory.hpp"

namespace steenrod::kernels {

using Index = FiniteGroupTable::Index;

/// Row-major composition table, entry a*|G| + b = index of a.b.
std::vector<Index> build_table_serial(const FiniteGroupTable& g);
std::vector<Index> build_table_parallel(const FiniteGroupTable& g);

/// Sorted distinct commutators [a, b], a in lhs, b in rhs.
std::vector<Index> commutator_set_serial(const FiniteGroupTable& g, const std::vector<Index>& lhs,
                                         const std::vector<Index>& rhs);
std::vector<Index> commutator_set_parallel(const FiniteGroupTable& g, const std::vector<Index>& lhs,
                                           const std::vector<Index>& rhs);

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;         // J-basis and spanning set overlap or miss
  std::uint64_t oracle_mismatches = 0;  // J-basis disagrees with cap reduction in A/J
  std::string first_failure;

  bool ok() const { return checked > 0 && violations == 0 && oracle_mismatches == 0; }
  bool operator==(const SweepResult&) const = default;
};

/// Every (E, R) with r_1..r_m < p^{k+2} and, for odd p, e_0..e_m in {0,1}.
SweepResult complementarity_sweep_serial(unsigned p, int k, int max_index = 4);
SweepResult complementarity_sweep_parallel(unsigned p, int k, int max_index = 4);

}  // namespace steenrod::kernels
