#pragma once

// Milnor basis bookkeeping: exponent sequences R = (r_1, r_2, ...),
// exterior sequences E = (e_0, e_1, ...), the monomials tau(E)xi(R) or
// zeta(R), and the formal dual symbols Sq(R), Q(E)P(R).

#include <cstdint>
#include <string>
#include <vector>

#include "steenrod/algebra.hpp"
#include "steenrod/hopf.hpp"

namespace steenrod {

/// (r_1, r_2, ...) with trailing zeros removed.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<std::uint32_t> entries);

  /// r_i for i >= 1; zero past the support.
  std::uint32_t operator[](int i) const;
  int length() const { return static_cast<int>(r_.size()); }
  const std::vector<std::uint32_t>& entries() const { return r_; }

  Seq operator+(const Seq& other) const;
  bool operator==(const Seq&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> r_;
};

/// (e_0, e_1, ...) with entries 0 or 1, trailing zeros removed.
class SeqB {
 public:
  SeqB() = default;
  explicit SeqB(std::vector<std::uint32_t> entries);
  /// The sequence with a single 1 in position n.
  static SeqB unit(int n);

  std::uint32_t operator[](int i) const;
  int length() const { return static_cast<int>(e_.size()); }
  const std::vector<std::uint32_t>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  bool operator==(const SeqB&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> e_;
};

/// Componentwise order.
bool seq_leq(const Seq& r, const Seq& s);
bool seqb_leq(const SeqB& e, const SeqB& f);

struct DualSymbol {
  enum class Kind { kSq, kQP };
  Kind kind;
  unsigned p;
  SeqB E;
  Seq R;

  static DualSymbol sq(Seq R);
  static DualSymbol qp(unsigned p, SeqB E, Seq R);

  bool operator==(const DualSymbol&) const = default;
  std::string to_string() const;
};

/// The dual symbol of the basis monomial indexed by (E, R).
DualSymbol dual(unsigned p, const SeqB& E, const Seq& R);

/// tau(E) xi(R) (odd p) or zeta(R) (p = 2) in the given presentation.
Element monomial_of(const SeqB& E, const Seq& R, const HopfAlgebra& h);

bool in_J_basis(const SeqB& E, const Seq& R, int k, unsigned p);
bool in_dual_span(const DualSymbol& sym, int k);
Coeff kronecker_pair(const DualSymbol& sym, const SeqB& E, const Seq& R);
/// Linear extension over the monomials of x (basis elements of A_{p*}).
Coeff kronecker_pair(const DualSymbol& sym, const Element& x, const HopfAlgebra& h);

// Raw forms used by the sweep kernels; r[0] is r_1, e[0] is e_0.
inline bool in_J_raw(const std::uint32_t* r, int nr, bool e0, int k, unsigned p, std::uint64_t threshold) {
  if (p != 2 && k == 0 && e0) return true;
  for (int i = 0; i < nr; ++i) {
    if (r[i] >= threshold) return true;
  }
  return false;
}

inline bool in_span_raw(const std::uint32_t* r, int nr, bool e0, int k, unsigned p, std::uint64_t threshold) {
  if (p != 2 && k == 0 && e0) return false;
  for (int i = 0; i < nr; ++i) {
    if (r[i] >= threshold) return false;
  }
  return true;
}

/// p^{k+1}: the exponent bound shared by the J-basis and the spanning set.
std::uint64_t milnor_threshold(unsigned p, int k);

}  // namespace steenrod
