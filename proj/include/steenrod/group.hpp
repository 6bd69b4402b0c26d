#pragma once

// Truncated series sum_i a_i X^{p^i} with coefficients in A[eps]/(eps^2),
// composed as power series: (a.b)(X) = b(a(X)).
//
// A GroupElement carries its truncation level k (coefficients a_0..a_k are
// kept) and a flavor: the base group, or the level-j group G<j> whose
// coefficient degrees are scaled by p^j.

#include <compare>
#include <string>
#include <vector>

#include "steenrod/algebra.hpp"

namespace steenrod {

struct Flavor {
  int level = 0;  // 0: base group, j >= 1: level-j group

  static constexpr Flavor base() { return {0}; }
  static constexpr Flavor at_level(int j) { return {j}; }
  bool is_base() const { return level == 0; }

  bool operator==(const Flavor&) const = default;
  std::string to_string() const;
  static Flavor parse(const std::string& s);
};

/// Required degree of the i-th coefficient for the given prime and flavor.
Degree coefficient_degree(unsigned p, Flavor flavor, int i);

class GroupElement {
 public:
  /// Validates the flavor invariants; throws std::invalid_argument.
  GroupElement(std::vector<Element> coeffs, Flavor flavor = Flavor::base());

  static GroupElement identity(const PresentationPtr& algebra, int k, Flavor flavor = Flavor::base());
  /// Skips validation; for internal kernels whose output is known valid.
  static GroupElement unchecked(std::vector<Element> coeffs, Flavor flavor);

  unsigned prime() const { return coeffs_.front().prime(); }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  Flavor flavor() const { return flavor_; }
  const PresentationPtr& algebra_ptr() const { return coeffs_.front().algebra_ptr(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  const Element& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_identity() const;
  bool operator==(const GroupElement& other) const;

  std::string to_string() const;

 private:
  struct NoCheck {};
  GroupElement(std::vector<Element> coeffs, Flavor flavor, NoCheck);

  std::vector<Element> coeffs_;
  Flavor flavor_;
};

void require_compatible(const GroupElement& a, const GroupElement& b);

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement group_power(const GroupElement& a, unsigned m);

GroupElement invert_recursive(const GroupElement& a);
/// Signed sum over compositions of each index.
GroupElement invert_closed(const GroupElement& a);
/// Odd p, base flavor: separates each coefficient into even and eps parts.
GroupElement invert_split(const GroupElement& a);
inline GroupElement invert(const GroupElement& a) { return invert_recursive(a); }

/// (a^{-1} . b^{-1}) . (a . b)
GroupElement commutator(const GroupElement& a, const GroupElement& b);

enum class CommutatorCase { kBothGeneric = 1, kLeftDeep = 2, kBothDeep = 3 };

struct LeadingCoefficients {
  int first_index;  // position of the first predicted coefficient
  Element first;
  Element second;   // coefficient at first_index + 1
};

/// Predicted leading commutator coefficients when a_1..a_depth vanish
/// (case 1: depth 0; case 2: depth >= 1; case 3: depth >= 1 and b_1 = 0).
LeadingCoefficients commutator_leading(const GroupElement& a, const GroupElement& b, CommutatorCase c,
                                       int depth);

GroupElement project(const GroupElement& a, int k);
/// Drops the eps-part of the top coefficient.
GroupElement half_quotient(const GroupElement& a);
bool in_half_stage(const GroupElement& a);
GroupElement star_product(const GroupElement& a, const GroupElement& b);
GroupElement star_inverse(const GroupElement& a);

/// A stage of the descending filtration, stored as twice its value.
class FiltrationLevel {
 public:
  enum class Kind { kBottom, kFinite, kTop };

  static FiltrationLevel bottom() { return FiltrationLevel(Kind::kBottom, 0); }
  static FiltrationLevel top() { return FiltrationLevel(Kind::kTop, 0); }
  static FiltrationLevel twice(int t) { return FiltrationLevel(Kind::kFinite, t); }

  Kind kind() const { return kind_; }
  int twice_value() const { return twice_; }
  double value() const { return twice_ / 2.0; }
  /// True if the element lies in the stage of the given (doubled) index.
  bool at_least_twice(int t) const;

  bool operator==(const FiltrationLevel&) const = default;
  std::string to_string() const;

 private:
  FiltrationLevel(Kind k, int t) : kind_(k), twice_(t) {}
  Kind kind_;
  int twice_;
};

FiltrationLevel filtration_level(const GroupElement& a);

bool in_Gpn(const GroupElement& a, int n);

GroupElement pi_ev(const GroupElement& a);
bool in_G_od(const GroupElement& a);
bool in_G_ev(const GroupElement& a);

/// Base -> level 1, level j -> level j+1.
GroupElement rho(const GroupElement& a);
bool in_abelian_kernel(const GroupElement& a);

/// Applies a ring map to every coefficient. The target must carry eps
/// wherever the source does.
GroupElement map_coefficients(const AlgebraMap& f, const GroupElement& a);

}  // namespace steenrod
