#pragma once

// Seeded random elements for property checks.

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "steenrod/algebra.hpp"
#include "steenrod/group.hpp"
#include "steenrod/hopf.hpp"

namespace steenrod {

/// Components with at most this many basis monomials are sampled
/// uniformly; larger ones as sparse sums of up to three monomials.
inline constexpr std::size_t kUniformBasisLimit = 12;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::uint64_t uniform(std::uint64_t n);  // in [0, n)
  bool coin(double p_true);

  /// Random homogeneous element of degree d; the filter restricts the basis.
  Element element(const PresentationPtr& a, Degree d, bool eps_free_only = false);
  /// Same, never zero unless the component is.
  Element nonzero_element(const PresentationPtr& a, Degree d, bool eps_free_only = false);

  /// Random element of the given flavor at truncation k. Each coefficient
  /// is zero with probability zero_prob.
  GroupElement group_element(const PresentationPtr& a, int k, Flavor flavor = Flavor::base(), double zero_prob = 0.1);

  /// Random point of h with values in target (eps-free values).
  AlgebraMap assignment(const HopfAlgebra& h, const PresentationPtr& target);

  const std::vector<Monomial>& basis(const PresentationPtr& a, Degree d, bool eps_free_only);
  /// Number of basis monomials of degree d, without enumerating them.
  double basis_size(const PresentationPtr& a, Degree d, bool eps_free_only);
  /// A basis monomial of degree d drawn uniformly; requires basis_size > 0.
  Monomial monomial(const PresentationPtr& a, Degree d, bool eps_free_only);

 private:
  // Monomial counts by degree over the non-eps generators, which must all
  // have positive degree.
  struct Counts {
    std::vector<std::size_t> gens;
    std::vector<std::vector<double>> ways;  // ways[i][r]: generators i.. reach degree r
  };
  const Counts* counts(const PresentationPtr& a, Degree d);

  std::mt19937_64 rng_;
  std::map<std::tuple<const Presentation*, Degree, bool>, std::vector<Monomial>> cache_;
  std::map<const Presentation*, Counts> counts_;
  std::vector<PresentationPtr> keep_alive_;
};

/// Coefficient algebra used by the random group checks: the dual Steenrod
/// algebra on generators of index <= k, with eps for odd p.
PresentationPtr sample_algebra(unsigned p, int k);

}  // namespace steenrod
