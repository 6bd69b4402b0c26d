#include "steenrod/milnor.hpp"

#include <stdexcept>

namespace steenrod {

namespace {

template <class V>
void trim(V& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

template <class V>
std::string paren(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

Seq::Seq(std::vector<std::uint32_t> entries) : r_(std::move(entries)) { trim(r_); }

std::uint32_t Seq::operator[](int i) const {
  if (i < 1) throw std::out_of_range("Seq entries start at index 1");
  return i <= length() ? r_[static_cast<std::size_t>(i - 1)] : 0;
}

Seq Seq::operator+(const Seq& other) const {
  std::vector<std::uint32_t> v(std::max(r_.size(), other.r_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = (i < r_.size() ? r_[i] : 0) + (i < other.r_.size() ? other.r_[i] : 0);
  }
  return Seq(std::move(v));
}

std::string Seq::to_string() const { return paren(r_); }

SeqB::SeqB(std::vector<std::uint32_t> entries) : e_(std::move(entries)) {
  for (auto x : e_) {
    if (x > 1) throw std::invalid_argument("exterior sequence entries must be 0 or 1");
  }
  trim(e_);
}

SeqB SeqB::unit(int n) {
  if (n < 0) throw std::invalid_argument("negative position");
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n) + 1, 0);
  v.back() = 1;
  return SeqB(std::move(v));
}

std::uint32_t SeqB::operator[](int i) const {
  if (i < 0) throw std::out_of_range("SeqB entries start at index 0");
  return i < length() ? e_[static_cast<std::size_t>(i)] : 0;
}

std::string SeqB::to_string() const { return paren(e_); }

bool seq_leq(const Seq& r, const Seq& s) {
  for (int i = 1; i <= r.length(); ++i) {
    if (r[i] > s[i]) return false;
  }
  return true;
}

bool seqb_leq(const SeqB& e, const SeqB& f) {
  for (int i = 0; i < e.length(); ++i) {
    if (e[i] > f[i]) return false;
  }
  return true;
}

DualSymbol DualSymbol::sq(Seq R) { return {Kind::kSq, 2, SeqB{}, std::move(R)}; }

DualSymbol DualSymbol::qp(unsigned p, SeqB E, Seq R) {
  if (p == 2) throw std::invalid_argument("Q(E)P(R) symbols need an odd prime");
  return {Kind::kQP, p, std::move(E), std::move(R)};
}

std::string DualSymbol::to_string() const {
  if (kind == Kind::kSq) return "Sq" + R.to_string();
  return "Q" + E.to_string() + "P" + R.to_string();
}

DualSymbol dual(unsigned p, const SeqB& E, const Seq& R) {
  if (p == 2) {
    if (!E.is_zero()) throw std::invalid_argument("p = 2 has no exterior part");
    return DualSymbol::sq(R);
  }
  return DualSymbol::qp(p, E, R);
}

Element monomial_of(const SeqB& E, const Seq& R, const HopfAlgebra& h) {
  const unsigned p = h.prime();
  const auto& alg = h.algebra();
  if (p == 2 && !E.is_zero()) throw std::invalid_argument("p = 2 has no exterior part");
  if (R.length() > h.bound() || E.length() > h.bound() + 1) throw std::invalid_argument("index exceeds the generator bound");
  Element out = Element::one(alg);
  for (int n = 0; n < E.length(); ++n) {
    if (!E[n]) continue;
    const auto idx = h.find(GeneratorKind::kTau, n);
    if (!idx) return Element::zero(alg);
    out = out * h.gen(*idx);
  }
  const GeneratorKind poly = p == 2 ? GeneratorKind::kZeta : GeneratorKind::kXi;
  for (int n = 1; n <= R.length(); ++n) {
    if (!R[n]) continue;
    const auto idx = h.find(poly, n);
    if (!idx || h.roles()[*idx].shift != 0) throw std::invalid_argument("presentation lacks the unshifted generator");
    out = out * power(h.gen(*idx), R[n]);
  }
  return out;
}

std::uint64_t milnor_threshold(unsigned p, int k) {
  if (k < 0) throw std::invalid_argument("negative level");
  std::uint64_t t = 1;
  for (int i = 0; i <= k; ++i) {
    t *= p;
    if (t > (std::uint64_t{1} << 40)) throw std::overflow_error("threshold overflow");
  }
  return t;
}

bool in_J_basis(const SeqB& E, const Seq& R, int k, unsigned p) {
  if (p == 2 && !E.is_zero()) throw std::invalid_argument("p = 2 has no exterior part");
  return in_J_raw(R.entries().data(), R.length(), E[0] != 0, k, p, milnor_threshold(p, k));
}

bool in_dual_span(const DualSymbol& sym, int k) {
  return in_span_raw(sym.R.entries().data(), sym.R.length(), sym.E[0] != 0, k, sym.p, milnor_threshold(sym.p, k));
}

Coeff kronecker_pair(const DualSymbol& sym, const SeqB& E, const Seq& R) {
  if (sym.kind == DualSymbol::Kind::kSq && !E.is_zero()) throw std::invalid_argument("p = 2 has no exterior part");
  return sym.E == E && sym.R == R ? 1 : 0;
}

Coeff kronecker_pair(const DualSymbol& sym, const Element& x, const HopfAlgebra& h) {
  if (x.prime() != sym.p) throw std::invalid_argument("pairing across different primes");
  const Element basis = monomial_of(sym.E, sym.R, h);
  if (basis.is_zero()) return 0;
  // tau(E)xi(R) may carry a sign in normal form; read the coefficient back.
  const auto& b = basis.terms().front();
  const Coeff c = x.coefficient(b.mono);
  const unsigned p = sym.p;
  Coeff inv = 1;
  for (Coeff t = 1; t < p; ++t) {
    if (t * b.coeff % p == 1) inv = t;
  }
  return c * inv % p;
}

}  // namespace steenrod
