#pragma once

// The dual Steenrod algebra family as symbolic Hopf algebras.
//
// Every preset is a Presentation whose generators carry a role: zeta_i
// (p = 2), xi_i or tau_i (odd p), possibly raised to a Frobenius shift
// p^s. Caps realize the monomial quotients; cap 1 kills a generator.
// Coproducts and antipodes are fixed on generators at construction and
// extended multiplicatively.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steenrod/algebra.hpp"
#include "steenrod/group.hpp"

namespace steenrod {

enum class GeneratorKind { kZeta, kXi, kTau };

struct HopfGenerator {
  GeneratorKind kind;
  int index;
  int shift;  // the generator is (kind_index)^{p^shift}
};

/// Sparse element of a tensor power A^{(x)r}. Legs are monomials of one
/// presentation; products carry the Koszul sign of the interchange.
class Tensor {
 public:
  using Key = std::vector<Monomial>;

  Tensor(PresentationPtr algebra, int arity);

  /// x_1 (x) ... (x) x_r.
  static Tensor pure(const std::vector<Element>& legs);

  const Presentation& algebra() const { return *alg_; }
  const PresentationPtr& algebra_ptr() const { return alg_; }
  int arity() const { return arity_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& key, long long c);

  Tensor operator+(const Tensor& other) const;
  Tensor operator-(const Tensor& other) const;
  Tensor operator*(const Tensor& other) const;
  Tensor scaled(long long c) const;
  bool operator==(const Tensor& other) const;

  std::string to_string() const;

 private:
  PresentationPtr alg_;
  int arity_;
  std::map<Key, Coeff> terms_;
};

Tensor tensor_power(const Tensor& t, std::uint64_t e);

class HopfAlgebra {
 public:
  /// A_{p*} on generators of index <= N, degree bound D.
  static HopfAlgebra dual(unsigned p, int N, Degree D);
  /// A_p(n)_*.
  static HopfAlgebra quotient(unsigned p, int n, Degree D);
  /// A_p^ev(n)_*, odd p.
  static HopfAlgebra quotient_ev(unsigned p, int n, Degree D);
  /// A_p<k>_*: zeta_i^{2^k}, resp. tau_0 and xi_i^p (k = 1) or xi_i^{p^k}.
  static HopfAlgebra angle(unsigned p, int k, int N, Degree D);
  /// A_p<k>_* / I_p<k>.
  static HopfAlgebra mod_I(unsigned p, int k, int N, Degree D);
  /// A_{p*} / J_p<k>.
  static HopfAlgebra mod_J(unsigned p, int k, int N, Degree D);
  /// The ground field F_p.
  static HopfAlgebra ground(unsigned p);

  /// Parses names such as "A_dual", "A(2)", "A_ev(n)", "A_angle(1)",
  /// "A_mod_I(k)"; a literal n or k in parentheses is taken from the
  /// corresponding argument.
  static HopfAlgebra from_name(const std::string& name, unsigned p, int N, Degree D, int n, int k);

  const std::string& name() const { return name_; }
  const PresentationPtr& algebra() const { return alg_; }
  unsigned prime() const { return alg_->prime(); }
  int bound() const { return N_; }
  Degree degree_bound() const { return D_; }
  int shift() const { return shift_; }
  const std::vector<HopfGenerator>& roles() const { return roles_; }
  std::size_t size() const { return roles_.size(); }

  Element gen(std::size_t i) const { return Element::generator(alg_, i); }
  std::optional<std::size_t> find(GeneratorKind kind, int index) const;

  const Tensor& generator_coproduct(std::size_t i) const { return gen_coproduct_.at(i); }
  const Element& generator_antipode(std::size_t i) const { return gen_antipode_.at(i); }

 private:
  HopfAlgebra(std::string name, unsigned p, int N, Degree D, int shift,
              std::vector<HopfGenerator> roles, std::vector<std::uint32_t> caps);

  std::string name_;
  PresentationPtr alg_;
  int N_;
  Degree D_;
  int shift_;
  std::vector<HopfGenerator> roles_;
  std::vector<Tensor> gen_coproduct_;
  std::vector<Element> gen_antipode_;
};

Tensor coproduct(const HopfAlgebra& h, const Element& x);
Element antipode(const HopfAlgebra& h, const Element& x);
Coeff counit(const Element& x);

/// T(a (x) b) = (-1)^{|a||b|} b (x) a.
Tensor switch_map(const Tensor& t);
/// Applies the coproduct to one leg, raising the arity by one.
Tensor coproduct_on_leg(const HopfAlgebra& h, const Tensor& t, int leg);
/// Applies the antipode to one leg.
Tensor antipode_on_leg(const HopfAlgebra& h, const Tensor& t, int leg);
/// Applies the counit to one leg, lowering the arity by one.
Tensor counit_on_leg(const Tensor& t, int leg);
/// Multiplies the legs of an arity-2 tensor.
Element multiply_legs(const Tensor& t);
/// Reads an arity-1 tensor as an element.
Element as_element(const Tensor& t);

/// Rewrites x into another presentation by generator name; generators
/// missing from the target map to zero.
Element transport(const Element& x, const PresentationPtr& target);
Tensor transport(const Tensor& t, const PresentationPtr& target);

/// Degree-preserving assignment of target values to Hopf generators,
/// i.e. a point of the represented group scheme.
AlgebraMap make_assignment(const HopfAlgebra& h, const PresentationPtr& target, std::vector<Element> images);
AlgebraMap trivial_assignment(const HopfAlgebra& h, const PresentationPtr& target);
/// x |-> m(psi (x) phi)(mu(x)) on each generator.
AlgebraMap convolution(const HopfAlgebra& h, const AlgebraMap& phi, const AlgebraMap& psi);
/// phi o antipode.
AlgebraMap precompose_antipode(const HopfAlgebra& h, const AlgebraMap& phi);

/// The group element read off a point, truncated at K.
GroupElement theta(const HopfAlgebra& h, const AlgebraMap& phi, int K);
/// The presentation one Frobenius level up and the restricted point.
std::pair<HopfAlgebra, AlgebraMap> restrict_up(const HopfAlgebra& h, const AlgebraMap& phi);
bool rho_diagram_check(const HopfAlgebra& h, const AlgebraMap& phi, int K);

struct CheckReport {
  std::string check;
  std::string preset;
  Degree degree_bound = 0;
  bool ok = true;
  std::vector<std::string> counterexamples;

  void fail(std::string what);
};

/// mu(x) - T mu(x) for each generator of degree <= d, zero ones included.
std::vector<std::pair<std::string, Tensor>> cocommutativity_defect(const HopfAlgebra& h, Degree d);
CheckReport cocommutativity_check(const HopfAlgebra& h, Degree d);
/// Monomial generators only.
CheckReport check_hopf_ideal(const HopfAlgebra& h, const std::vector<Element>& gens, Degree d);
CheckReport primitivity_check(const HopfAlgebra& h);

CheckReport coassociativity_check(const HopfAlgebra& h, Degree d);
CheckReport counit_check(const HopfAlgebra& h, Degree d);
CheckReport antipode_check(const HopfAlgebra& h, Degree d);
/// sum y_{n-k}^{p^k} iota(y_k) = 0 for zeta/xi, and the tau recursion.
CheckReport antipode_recursion_check(const HopfAlgebra& h);
/// Reduction h -> q commutes with coproducts on generators of degree <= d.
CheckReport quotient_map_check(const HopfAlgebra& h, const HopfAlgebra& q, Degree d);
/// Primitive generators with caps tau^2 = 0, xi^p = 0 (zeta^2 = 0 for p = 2).
CheckReport monogenic_check(const HopfAlgebra& h);

}  // namespace steenrod
