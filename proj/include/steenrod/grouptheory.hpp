#pragma once

// Finite groups G_{p,n}(A) over finite graded algebras, enumerated
// exhaustively, with lower central and derived series.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "steenrod/algebra.hpp"
#include "steenrod/group.hpp"

namespace steenrod {

inline constexpr std::size_t kDefaultGroupLimit = 100000;
/// Groups up to this order get a materialized composition table.
inline constexpr std::size_t kTableLimit = 2048;

/// Reads STEENROD_LIMIT, falling back to kDefaultGroupLimit.
std::size_t group_limit_from_env();

struct EnumerateOptions {
  bool ev_only = false;  // G_{p,n}^ev: eps-free, leading coefficient 1
  std::size_t limit = kDefaultGroupLimit;
  bool parallel = true;
};

class FiniteGroupTable {
 public:
  using Index = std::uint32_t;

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(Index i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }
  Index identity() const { return identity_; }
  unsigned prime() const { return p_; }
  int n() const { return n_; }
  bool ev_only() const { return ev_only_; }
  const PresentationPtr& coefficient_algebra() const { return coeffs_; }

  bool has_table() const { return !table_.empty(); }
  const std::vector<Index>& table() const { return table_; }

  Index product(Index a, Index b) const;
  Index inverse(Index a) const { return inverses_.at(a); }
  /// Index of an element of the group; nullopt if it is not a member.
  std::optional<Index> index_of(const GroupElement& g) const;

  /// Index of compose(a, b) computed from the elements, bypassing the table.
  Index compute_product(Index a, Index b) const;
  Index commutator(Index a, Index b) const;

  void set_table(std::vector<Index> table) { table_ = std::move(table); }

 private:
  friend FiniteGroupTable enumerate_group(const PresentationPtr&, int, const EnumerateOptions&);

  struct Component {
    std::vector<Monomial> basis;
    std::unordered_map<std::uint64_t, Index> position;  // coordinate code -> choice
  };

  unsigned p_ = 2;
  int n_ = 0;
  bool ev_only_ = false;
  PresentationPtr coeffs_;
  std::vector<Component> components_;    // one per coefficient alpha_0..alpha_n
  std::vector<std::size_t> radix_;       // choices per component
  std::vector<GroupElement> elements_;
  std::vector<Index> inverses_;
  std::vector<Index> table_;
  Index identity_ = 0;
};

/// Enumerates G_{p,n}(A) with p the characteristic of A. For odd p the
/// coefficients live in A[eps]; A may already carry eps.
FiniteGroupTable enumerate_group(const PresentationPtr& A, int n, const EnumerateOptions& opts = {});

/// True if every row and column of the table is a permutation.
bool is_latin_square(const FiniteGroupTable& g);

using Subgroup = std::vector<FiniteGroupTable::Index>;  // sorted

Subgroup whole_group(const FiniteGroupTable& g);
/// Breadth-first closure of the generating set.
Subgroup generated_subgroup(const FiniteGroupTable& g, const std::vector<FiniteGroupTable::Index>& gens);
/// The subgroup generated by [a, b] for a in lhs, b in rhs.
Subgroup commutator_subgroup(const FiniteGroupTable& g, const Subgroup& lhs, const Subgroup& rhs, bool parallel = true);
bool is_subset(const Subgroup& a, const Subgroup& b);

struct SeriesReport {
  std::string series;     // "lower_central", "derived", "ev_lower_central"
  unsigned p = 2;
  int n = 0;
  std::string algebra;
  std::size_t order = 0;
  std::vector<Subgroup> chain;  // chain[i] = Gamma_i or D_i
  std::optional<int> length;    // first i with a trivial term
  int bound = 0;
  bool filtration_ok = true;
  bool ok = false;
  std::vector<std::string> counterexamples;

  std::vector<std::size_t> orders() const;
};

/// Gamma_{i+1} = [Gamma_i, G]; bound n + 1; every element of Gamma_{i+1}
/// has filtration level >= i + 0.5.
SeriesReport lower_central_series(const FiniteGroupTable& g, const std::string& algebra_name = {});
/// D_{i+1} = [D_i, D_i]; every element of D_{i+1} has level >= 2i.
SeriesReport derived_series(const FiniteGroupTable& g, const std::string& algebra_name = {});
/// Lower central series of G_{p,n}^ev(A), bound n, levels >= i + 1.
SeriesReport ev_subgroup_series(const PresentationPtr& A, int n, const EnumerateOptions& opts = {},
                                const std::string& algebra_name = {});

std::string describe(const Presentation& a);

/// A coefficient algebra and truncation small enough to enumerate.
struct GroupCase {
  std::string name;
  PresentationPtr algebra;
  int n;
};

/// The desk-scale cases used by the sweep and the checks.
std::vector<GroupCase> standard_cases(unsigned p);

}  // namespace steenrod
