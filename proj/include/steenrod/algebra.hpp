#pragma once

// Finitely presented graded-commutative algebras over F_p.
//
// A presentation is an ordered list of generators with signed degrees and
// nilpotency caps (g^cap = 0). Elements are kept in normal form: a sorted
// list of (exponent vector, nonzero coefficient) pairs, every exponent below
// its generator's cap. Products carry the Koszul sign obtained by moving
// odd-degree generators past each other into presentation order.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steenrod {

using Coeff = std::uint32_t;
using Degree = std::int64_t;

/// Cap value meaning "no nilpotency relation".
inline constexpr std::uint32_t kNoCap = 0;

/// Name of the exterior generator adjoined by adjoin_epsilon().
inline constexpr std::string_view kEpsilonName = "eps";

struct Generator {
  std::string name;
  int degree = 0;
  std::uint32_t cap = kNoCap;

  bool operator==(const Generator&) const = default;
};

bool is_prime(unsigned n);

class Presentation {
 public:
  /// Validates and normalizes: p prime, names unique, caps of odd-degree
  /// generators clamped to 2 for odd p.
  Presentation(unsigned p, std::vector<Generator> generators);

  unsigned prime() const { return p_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> epsilon_index() const { return eps_; }

  /// True when generator i anticommutes with other odd generators.
  bool sign_relevant(std::size_t i) const { return odd_[i]; }
  bool has_signs() const { return any_odd_; }
  bool all_capped() const;

  bool operator==(const Presentation& other) const {
    return p_ == other.p_ && gens_ == other.gens_;
  }

 private:
  unsigned p_;
  std::vector<Generator> gens_;
  std::vector<bool> odd_;
  bool any_odd_ = false;
  std::optional<std::size_t> eps_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr make_algebra(unsigned p, std::vector<Generator> generators);

/// Appends eps (degree -1, cap 2). Identity for p = 2.
PresentationPtr adjoin_epsilon(const PresentationPtr& base);

/// A_p(n)_* as a plain algebra: F_2[z1..zn]/(z_i^{2^{n-i+1}}) for p = 2,
/// E(t0..tn) (x) F_p[x1..xn]/(x_i^{p^{n-i+1}}) for odd p.
PresentationPtr steenrod_quotient(unsigned p, int n);
/// F_p[x1..xn]/(x_i^{p^{n-i+1}}), odd p only.
PresentationPtr steenrod_quotient_ev(unsigned p, int n);
/// The dual Steenrod algebra on generators of index <= n, no relations
/// beyond the exterior ones.
PresentationPtr steenrod_dual(unsigned p, int n);

/// Exponent vector indexed by generator position.
struct Monomial {
  std::vector<std::uint32_t> exps;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

  bool is_one() const;
};

Degree degree_of(const Presentation& a, const Monomial& m);

struct SignedMonomial {
  Monomial mono;
  bool negative = false;
};

/// Normal-form product of two monomials; nullopt if a cap is reached.
std::optional<SignedMonomial> multiply_monomials(const Presentation& a, const Monomial& x, const Monomial& y);

struct Term {
  Monomial mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

class Element {
 public:
  explicit Element(PresentationPtr algebra);

  static Element zero(PresentationPtr algebra) { return Element(std::move(algebra)); }
  static Element scalar(PresentationPtr algebra, long long c);
  static Element one(PresentationPtr algebra) { return scalar(std::move(algebra), 1); }
  static Element generator(PresentationPtr algebra, std::string_view name);
  static Element generator(PresentationPtr algebra, std::size_t index);
  /// Single monomial; returns zero if a cap is exceeded.
  static Element monomial(PresentationPtr algebra, Monomial m, long long c = 1);
  /// Builds from arbitrary terms: reduces coefficients, drops capped
  /// monomials, merges duplicates. Exponents of sign-relevant generators
  /// must be 0 or 1.
  static Element from_terms(PresentationPtr algebra, std::vector<Term> terms);

  const Presentation& algebra() const { return *alg_; }
  const PresentationPtr& algebra_ptr() const { return alg_; }
  unsigned prime() const { return alg_->prime(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element.
  std::optional<Degree> degree() const;
  Coeff constant_term() const;
  /// Coefficient of the given monomial (0 if absent).
  Coeff coefficient(const Monomial& m) const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;
  Element scaled(long long c) const;

  Element& operator+=(const Element& other) { return *this = *this + other; }
  Element& operator-=(const Element& other) { return *this = *this - other; }
  Element& operator*=(const Element& other) { return *this = *this * other; }

  bool operator==(const Element& other) const;

  std::string to_string() const;

 private:
  Element(PresentationPtr algebra, std::vector<Term> normal_terms);

  PresentationPtr alg_;
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument unless x and y live in equal presentations.
void require_same_algebra(const Element& x, const Element& y);

Element mul(const Element& x, const Element& y);
Element power(const Element& x, std::uint64_t e);
/// x^{p^j}, termwise.
Element frobenius(const Element& x, unsigned j);
/// Deletes every monomial containing eps.
Element eps_reduce(const Element& x);
/// The b in x = a + b*eps (a, b eps-free).
Element eps_coefficient(const Element& x);
/// True if every monomial contains eps (zero included).
bool in_eps_ideal(const Element& x);
bool eps_free(const Element& x);

/// Normal-form monomials of degree d, sorted.
std::vector<Monomial> component_basis(const Presentation& a, Degree d);
/// Every element of degree d, zero first, in lexicographic coordinate order.
std::vector<Element> enumerate_component(const PresentationPtr& a, Degree d);

/// Coordinates of a homogeneous element in the given basis.
std::vector<Coeff> coordinates(const Element& x, const std::vector<Monomial>& basis);
Element from_coordinates(const PresentationPtr& a, const std::vector<Monomial>& basis,
                         const std::vector<Coeff>& coords);

/// A ring map between presentations, given by generator images.
class AlgebraMap {
 public:
  AlgebraMap(PresentationPtr source, PresentationPtr target, std::vector<Element> images);

  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& x) const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<Element> images_;
};

}  // namespace steenrod
