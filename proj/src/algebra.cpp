#include "steenrod/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace steenrod {

namespace {

Coeff reduce_mod(long long c, unsigned p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

// Sorts by monomial and merges equal monomials; drops zero coefficients.
std::vector<Term> normalize_sorted(std::vector<Term> terms, unsigned p) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = static_cast<Coeff>((out.back().coeff + t.coeff) % p);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

bool exceeds_cap(const Presentation& a, const Monomial& m) {
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    const auto cap = a.generator(i).cap;
    if (cap != kNoCap && m.exps[i] >= cap) return true;
  }
  return false;
}

// Number of transpositions of odd generators needed to bring (a)(b) to
// normal order: each odd generator of b passes every odd generator of a
// with a larger index.
unsigned koszul_swaps(const Presentation& alg, const Monomial& a, const Monomial& b) {
  unsigned swaps = 0;
  unsigned odd_after = 0;
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (!alg.sign_relevant(i)) continue;
    if (b.exps[i] & 1u) swaps += odd_after;
    if (a.exps[i] & 1u) ++odd_after;
  }
  return swaps;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Presentation::Presentation(unsigned p, std::vector<Generator> generators)
    : p_(p), gens_(std::move(generators)) {
  if (!is_prime(p_)) throw std::invalid_argument("characteristic " + std::to_string(p_) + " is not prime");
  std::set<std::string> seen;
  for (auto& g : gens_) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    const bool odd = (g.degree % 2) != 0;
    if (p_ != 2 && odd && (g.cap == kNoCap || g.cap > 2)) g.cap = 2;
  }
  odd_.resize(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    odd_[i] = p_ != 2 && (gens_[i].degree % 2) != 0;
    any_odd_ = any_odd_ || odd_[i];
    if (gens_[i].name == kEpsilonName) eps_ = i;
  }
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Presentation::all_capped() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.cap != kNoCap; });
}

PresentationPtr make_algebra(unsigned p, std::vector<Generator> generators) {
  return std::make_shared<const Presentation>(p, std::move(generators));
}

PresentationPtr adjoin_epsilon(const PresentationPtr& base) {
  if (base->prime() == 2) return base;
  if (base->epsilon_index()) throw std::invalid_argument("eps already adjoined");
  auto gens = base->generators();
  gens.push_back({std::string(kEpsilonName), -1, 2});
  return make_algebra(base->prime(), std::move(gens));
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("power overflow");
    r *= b;
  }
  return r;
}

PresentationPtr steenrod_family(unsigned p, int n, bool capped, bool with_tau) {
  if (n < 0) throw std::invalid_argument("negative generator bound");
  std::vector<Generator> gens;
  if (p == 2) {
    for (int i = 1; i <= n; ++i) {
      const auto cap = capped ? static_cast<std::uint32_t>(ipow(2, n - i + 1)) : kNoCap;
      gens.push_back({"z" + std::to_string(i), static_cast<int>(ipow(2, i) - 1), cap});
    }
  } else {
    if (with_tau) {
      for (int i = 0; i <= n; ++i) {
        gens.push_back({"t" + std::to_string(i), static_cast<int>(2 * ipow(p, i) - 1), 2});
      }
    }
    for (int i = 1; i <= n; ++i) {
      const auto cap = capped ? static_cast<std::uint32_t>(ipow(p, n - i + 1)) : kNoCap;
      gens.push_back({"x" + std::to_string(i), static_cast<int>(2 * (ipow(p, i) - 1)), cap});
    }
  }
  return make_algebra(p, std::move(gens));
}

}  // namespace

PresentationPtr steenrod_quotient(unsigned p, int n) { return steenrod_family(p, n, true, true); }

PresentationPtr steenrod_quotient_ev(unsigned p, int n) {
  if (p == 2) throw std::invalid_argument("even quotient is defined for odd p only");
  return steenrod_family(p, n, true, false);
}

PresentationPtr steenrod_dual(unsigned p, int n) { return steenrod_family(p, n, false, true); }

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

Degree degree_of(const Presentation& a, const Monomial& m) {
  Degree d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += static_cast<Degree>(m.exps[i]) * a.generator(i).degree;
  return d;
}

std::optional<SignedMonomial> multiply_monomials(const Presentation& a, const Monomial& x, const Monomial& y) {
  SignedMonomial out{Monomial{std::vector<std::uint32_t>(a.size())}, false};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t e = static_cast<std::uint64_t>(x.exps[i]) + y.exps[i];
    const auto cap = a.generator(i).cap;
    if ((cap != kNoCap && e >= cap) || e > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
    out.mono.exps[i] = static_cast<std::uint32_t>(e);
  }
  out.negative = a.has_signs() && (koszul_swaps(a, x, y) & 1u);
  return out;
}

// ---------------------------------------------------------------- Element

Element::Element(PresentationPtr algebra) : alg_(std::move(algebra)) {
  if (!alg_) throw std::invalid_argument("null presentation");
}

Element::Element(PresentationPtr algebra, std::vector<Term> normal_terms)
    : alg_(std::move(algebra)), terms_(std::move(normal_terms)) {}

Element Element::scalar(PresentationPtr algebra, long long c) {
  const Coeff r = reduce_mod(c, algebra->prime());
  std::vector<Term> t;
  if (r != 0) t.push_back({Monomial{std::vector<std::uint32_t>(algebra->size(), 0)}, r});
  return Element(std::move(algebra), std::move(t));
}

Element Element::generator(PresentationPtr algebra, std::string_view name) {
  const auto idx = algebra->index_of(name);
  if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return generator(std::move(algebra), *idx);
}

Element Element::generator(PresentationPtr algebra, std::size_t index) {
  if (index >= algebra->size()) throw std::out_of_range("generator index");
  Monomial m{std::vector<std::uint32_t>(algebra->size(), 0)};
  m.exps[index] = 1;
  return monomial(std::move(algebra), std::move(m));
}

Element Element::monomial(PresentationPtr algebra, Monomial m, long long c) {
  return from_terms(std::move(algebra), {Term{std::move(m), reduce_mod(c, algebra->prime())}});
}

Element Element::from_terms(PresentationPtr algebra, std::vector<Term> terms) {
  const auto& a = *algebra;
  for (auto& t : terms) {
    if (t.mono.exps.size() != a.size()) throw std::invalid_argument("exponent vector has wrong length");
    t.coeff %= a.prime();
  }
  std::erase_if(terms, [&](const Term& t) { return t.coeff == 0 || exceeds_cap(a, t.mono); });
  return Element(algebra, normalize_sorted(std::move(terms), a.prime()));
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Degree d = degree_of(*alg_, terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return degree_of(*alg_, t.mono) == d; });
}

std::optional<Degree> Element::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return degree_of(*alg_, terms_.front().mono);
}

Coeff Element::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

Coeff Element::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

void require_same_algebra(const Element& x, const Element& y) {
  if (x.algebra_ptr() != y.algebra_ptr() && !(x.algebra() == y.algebra())) {
    throw std::invalid_argument("elements belong to different presentations");
  }
}

Element Element::operator+(const Element& other) const {
  require_same_algebra(*this, other);
  const unsigned p = prime();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      const Coeff c = static_cast<Coeff>((a->coeff + b->coeff) % p);
      if (c != 0) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return Element(alg_, std::move(out));
}

Element Element::operator-() const { return scaled(-1); }

Element Element::operator-(const Element& other) const { return *this + (-other); }

Element Element::scaled(long long c) const {
  const unsigned p = prime();
  const Coeff r = reduce_mod(c, p);
  if (r == 0) return Element(alg_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = static_cast<Coeff>((static_cast<std::uint64_t>(t.coeff) * r) % p);
  return Element(alg_, std::move(out));
}

Element Element::operator*(const Element& other) const {
  require_same_algebra(*this, other);
  const auto& a = *alg_;
  const unsigned p = a.prime();
  const std::size_t n = a.size();
  if (terms_.empty() || other.terms_.empty()) return Element(alg_);
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  Monomial prod{std::vector<std::uint32_t>(n)};
  for (const auto& x : terms_) {
    for (const auto& y : other.terms_) {
      bool dead = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t e = static_cast<std::uint64_t>(x.mono.exps[i]) + y.mono.exps[i];
        const auto cap = a.generator(i).cap;
        if ((cap != kNoCap && e >= cap) || e > std::numeric_limits<std::uint32_t>::max()) {
          dead = true;
          break;
        }
        prod.exps[i] = static_cast<std::uint32_t>(e);
      }
      if (dead) continue;
      Coeff c = static_cast<Coeff>((static_cast<std::uint64_t>(x.coeff) * y.coeff) % p);
      if (a.has_signs() && (koszul_swaps(a, x.mono, y.mono) & 1u)) c = (p - c) % p;
      out.push_back({prod, c});
    }
  }
  return Element(alg_, normalize_sorted(std::move(out), p));
}

bool Element::operator==(const Element& other) const {
  if (alg_ != other.alg_ && !(*alg_ == *other.alg_)) return false;
  return terms_ == other.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      const auto e = t.mono.exps[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << alg_->generator(i).name;
      if (e != 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- free functions

Element mul(const Element& x, const Element& y) { return x * y; }

Element power(const Element& x, std::uint64_t e) {
  Element result = Element::one(x.algebra_ptr());
  Element base = x;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Element frobenius(const Element& x, unsigned j) {
  if (j == 0) return x;
  const auto& a = x.algebra();
  std::uint64_t q = 1;
  for (unsigned s = 0; s < j && q <= std::numeric_limits<std::uint32_t>::max(); ++s) q *= a.prime();
  std::vector<Term> out;
  out.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    bool dead = false;
    Monomial m{t.mono.exps};
    for (std::size_t i = 0; i < m.exps.size() && !dead; ++i) {
      if (m.exps[i] == 0) continue;
      // An odd generator squares to zero, so any p-th power containing one vanishes.
      if (a.sign_relevant(i)) {
        dead = true;
        break;
      }
      const std::uint64_t e = static_cast<std::uint64_t>(m.exps[i]) * q;
      const auto cap = a.generator(i).cap;
      if (cap != kNoCap && e >= cap) {
        dead = true;
      } else if (e > std::numeric_limits<std::uint32_t>::max()) {
        throw std::overflow_error("exponent overflow in frobenius");
      } else {
        m.exps[i] = static_cast<std::uint32_t>(e);
      }
    }
    if (!dead) out.push_back({std::move(m), t.coeff});
  }
  // Scaling exponents by q keeps the lexicographic order.
  return Element::from_terms(x.algebra_ptr(), std::move(out));
}

Element eps_reduce(const Element& x) {
  const auto eps = x.algebra().epsilon_index();
  if (!eps) return x;
  std::vector<Term> out;
  for (const auto& t : x.terms()) {
    if (t.mono.exps[*eps] == 0) out.push_back(t);
  }
  return Element::from_terms(x.algebra_ptr(), std::move(out));
}

Element eps_coefficient(const Element& x) {
  const auto& a = x.algebra();
  const auto eps = a.epsilon_index();
  if (!eps) return Element(x.algebra_ptr());
  std::vector<Term> out;
  for (const auto& t : x.terms()) {
    if (t.mono.exps[*eps] == 0) continue;
    Term b = t;
    b.mono.exps[*eps] = 0;
    // b * eps reorders eps past the odd generators that follow it.
    unsigned after = 0;
    for (std::size_t i = *eps + 1; i < a.size(); ++i) {
      if (a.sign_relevant(i) && b.mono.exps[i]) ++after;
    }
    if (after & 1u) b.coeff = (a.prime() - b.coeff) % a.prime();
    out.push_back(std::move(b));
  }
  return Element::from_terms(x.algebra_ptr(), std::move(out));
}

bool in_eps_ideal(const Element& x) {
  const auto eps = x.algebra().epsilon_index();
  if (!eps) return x.is_zero();
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const Term& t) { return t.mono.exps[*eps] != 0; });
}

bool eps_free(const Element& x) {
  const auto eps = x.algebra().epsilon_index();
  if (!eps) return true;
  return std::none_of(x.terms().begin(), x.terms().end(),
                      [&](const Term& t) { return t.mono.exps[*eps] != 0; });
}

// ---------------------------------------------------------------- components

namespace {

constexpr Degree kInf = std::numeric_limits<Degree>::max() / 4;

struct ComponentSearch {
  const Presentation& alg;
  Degree target;
  std::vector<Degree> suffix_min, suffix_max;
  Monomial current;
  std::vector<Monomial> out;

  ComponentSearch(const Presentation& a, Degree d) : alg(a), target(d) {
    const std::size_t n = a.size();
    bool uncapped_pos = false, uncapped_neg = false;
    for (const auto& g : a.generators()) {
      if (g.cap != kNoCap) continue;
      if (g.degree == 0) throw std::domain_error("generator '" + g.name + "' has degree 0 and no cap; component is infinite");
      (g.degree > 0 ? uncapped_pos : uncapped_neg) = true;
    }
    if (uncapped_pos && uncapped_neg) {
      throw std::domain_error("uncapped generators of both signs; components are infinite");
    }
    suffix_min.assign(n + 1, 0);
    suffix_max.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      const auto& g = a.generator(i);
      Degree lo = 0, hi = 0;
      if (g.cap == kNoCap) {
        (g.degree > 0 ? hi : lo) = g.degree > 0 ? kInf : -kInf;
      } else {
        const Degree span = static_cast<Degree>(g.cap - 1) * g.degree;
        lo = std::min<Degree>(0, span);
        hi = std::max<Degree>(0, span);
      }
      suffix_min[i] = std::max(-kInf, suffix_min[i + 1] + lo);
      suffix_max[i] = std::min(kInf, suffix_max[i + 1] + hi);
    }
    current.exps.assign(n, 0);
  }

  void run(std::size_t i, Degree remaining) {
    if (i == alg.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    if (remaining < suffix_min[i] || remaining > suffix_max[i]) return;
    const auto& g = alg.generator(i);
    for (std::uint64_t e = 0;; ++e) {
      if (g.cap != kNoCap && e >= g.cap) break;
      const Degree rest = remaining - static_cast<Degree>(e) * g.degree;
      if (g.cap == kNoCap) {
        if (g.degree > 0 && rest < suffix_min[i + 1]) break;
        if (g.degree < 0 && rest > suffix_max[i + 1]) break;
      }
      if (rest >= suffix_min[i + 1] && rest <= suffix_max[i + 1]) {
        current.exps[i] = static_cast<std::uint32_t>(e);
        run(i + 1, rest);
      }
    }
    current.exps[i] = 0;
  }
};

}  // namespace

std::vector<Monomial> component_basis(const Presentation& a, Degree d) {
  ComponentSearch search(a, d);
  search.run(0, d);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

std::vector<Element> enumerate_component(const PresentationPtr& a, Degree d) {
  const auto basis = component_basis(*a, d);
  const unsigned p = a->prime();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= p;
    if (count > 10'000'000) throw std::length_error("component too large to enumerate");
  }
  std::vector<Element> out;
  out.reserve(count);
  std::vector<Coeff> coords(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = basis.size(); i-- > 0;) {
      coords[i] = static_cast<Coeff>(v % p);
      v /= p;
    }
    out.push_back(from_coordinates(a, basis, coords));
  }
  return out;
}

std::vector<Coeff> coordinates(const Element& x, const std::vector<Monomial>& basis) {
  std::vector<Coeff> coords(basis.size(), 0);
  for (const auto& t : x.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t.mono);
    if (it == basis.end() || !(*it == t.mono)) throw std::invalid_argument("element is not in the span of the basis");
    coords[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return coords;
}

Element from_coordinates(const PresentationPtr& a, const std::vector<Monomial>& basis,
                         const std::vector<Coeff>& coords) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords[i] % a->prime() != 0) terms.push_back({basis[i], coords[i]});
  }
  return Element::from_terms(a, std::move(terms));
}

// ---------------------------------------------------------------- AlgebraMap

AlgebraMap::AlgebraMap(PresentationPtr source, PresentationPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (source_->prime() != target_->prime()) throw std::invalid_argument("algebra map between different characteristics");
  if (images_.size() != source_->size()) throw std::invalid_argument("algebra map needs one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (img.algebra_ptr() != target_ && !(img.algebra() == *target_)) {
      throw std::invalid_argument("image outside the target algebra");
    }
    const auto& g = source_->generator(i);
    if (!img.is_zero() && img.degree() != std::optional<Degree>(g.degree)) {
      throw std::invalid_argument("image of '" + g.name + "' is not homogeneous of the generator's degree");
    }
    if (g.cap != kNoCap && !power(img, g.cap).is_zero()) {
      throw std::invalid_argument("image of '" + g.name + "' violates its nilpotency relation");
    }
  }
}

Element AlgebraMap::operator()(const Element& x) const {
  if (x.algebra_ptr() != source_ && !(x.algebra() == *source_)) throw std::invalid_argument("element outside the source algebra");
  Element result(target_);
  for (const auto& t : x.terms()) {
    Element prod = Element::scalar(target_, t.coeff);
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i]) prod = prod * power(images_[i], t.mono.exps[i]);
    }
    result += prod;
  }
  return result;
}

}  // namespace steenrod
