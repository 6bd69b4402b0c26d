#include "steenrod/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace steenrod {

namespace {

Coeff mod_p(long long c, unsigned p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 40)) throw std::overflow_error("generator degree overflow");
    r *= b;
  }
  return r;
}

bool odd_degree(const Presentation& a, const Monomial& m) { return (degree_of(a, m) & 1) != 0; }

Monomial unit_monomial(const Presentation& a) { return Monomial{std::vector<std::uint32_t>(a.size(), 0)}; }

void require_same(const Tensor& a, const Tensor& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor arities differ");
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra() == b.algebra())) {
    throw std::invalid_argument("tensors over different algebras");
  }
}

}  // namespace

// ---------------------------------------------------------------- Tensor

Tensor::Tensor(PresentationPtr algebra, int arity) : alg_(std::move(algebra)), arity_(arity) {
  if (!alg_) throw std::invalid_argument("null presentation");
  if (arity_ < 1) throw std::invalid_argument("tensor arity must be positive");
}

void Tensor::add(const Key& key, long long c) {
  const unsigned p = alg_->prime();
  const Coeff r = mod_p(c, p);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, r);
  if (!inserted) {
    it->second = (it->second + r) % p;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor Tensor::pure(const std::vector<Element>& legs) {
  if (legs.empty()) throw std::invalid_argument("empty tensor");
  for (const auto& x : legs) require_same_algebra(legs.front(), x);
  const auto& alg = legs.front().algebra_ptr();
  const auto& a = *alg;
  Tensor out(alg, static_cast<int>(legs.size()));
  std::vector<std::pair<Key, long long>> partial{{Key{}, 1}};
  for (const auto& x : legs) {
    std::vector<std::pair<Key, long long>> next;
    for (const auto& [key, c] : partial) {
      for (const auto& t : x.terms()) {
        Key k = key;
        k.push_back(t.mono);
        next.emplace_back(std::move(k), c * t.coeff % a.prime());
      }
    }
    partial = std::move(next);
  }
  for (const auto& [key, c] : partial) out.add(key, c);
  return out;
}

Tensor Tensor::operator+(const Tensor& other) const {
  require_same(*this, other);
  Tensor out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k, c);
  return out;
}

Tensor Tensor::operator-(const Tensor& other) const {
  require_same(*this, other);
  Tensor out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k, -static_cast<long long>(c));
  return out;
}

Tensor Tensor::scaled(long long c) const {
  Tensor out(alg_, arity_);
  for (const auto& [k, v] : terms_) out.add(k, static_cast<long long>(v) * mod_p(c, alg_->prime()));
  return out;
}

Tensor Tensor::operator*(const Tensor& other) const {
  require_same(*this, other);
  const auto& a = *alg_;
  const unsigned p = a.prime();
  Tensor out(alg_, arity_);
  const auto n = static_cast<std::size_t>(arity_);
  for (const auto& [ka, ca] : terms_) {
    std::vector<bool> odd_a(n);
    for (std::size_t i = 0; i < n; ++i) odd_a[i] = a.has_signs() && odd_degree(a, ka[i]);
    for (const auto& [kb, cb] : other.terms_) {
      Key key(n);
      bool negative = false;
      bool dead = false;
      unsigned odd_a_after = 0;
      for (std::size_t i = n; i-- > 0;) {
        // leg i of b moves past legs i+1.. of a
        if (a.has_signs() && odd_degree(a, kb[i]) && (odd_a_after & 1u)) negative = !negative;
        if (odd_a[i]) ++odd_a_after;
        auto prod = multiply_monomials(a, ka[i], kb[i]);
        if (!prod) {
          dead = true;
          break;
        }
        if (prod->negative) negative = !negative;
        key[i] = std::move(prod->mono);
      }
      if (dead) continue;
      const long long c = static_cast<long long>(ca) * cb % p;
      out.add(key, negative ? -c : c);
    }
  }
  return out;
}

bool Tensor::operator==(const Tensor& other) const {
  return arity_ == other.arity_ && alg_->prime() == other.alg_->prime() && terms_ == other.terms_;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << '*';
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << " (x) ";
      os << Element::monomial(alg_, key[i]).to_string();
    }
  }
  return os.str();
}

Tensor tensor_power(const Tensor& t, std::uint64_t e) {
  Tensor result(t.algebra_ptr(), t.arity());
  result.add(Tensor::Key(static_cast<std::size_t>(t.arity()), unit_monomial(t.algebra())), 1);
  Tensor base = t;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- presets

namespace {

struct RoleSpec {
  HopfGenerator role;
  std::uint32_t cap;
};

std::string role_name(unsigned p, const HopfGenerator& g) {
  std::string base = g.kind == GeneratorKind::kZeta ? "z" : g.kind == GeneratorKind::kXi ? "x" : "t";
  base += std::to_string(g.index);
  if (g.shift > 0) base += "^" + std::to_string(upow(p, g.shift));
  return base;
}

Degree role_degree(unsigned p, const HopfGenerator& g) {
  const auto pi = static_cast<Degree>(upow(p, g.index));
  const auto ps = static_cast<Degree>(upow(p, g.shift));
  switch (g.kind) {
    case GeneratorKind::kZeta:
      return (pi - 1) * ps;
    case GeneratorKind::kXi:
      return 2 * (pi - 1) * ps;
    case GeneratorKind::kTau:
      return 2 * pi - 1;
  }
  return 0;
}

std::uint32_t cap_of(std::uint64_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("cap overflow");
  return static_cast<std::uint32_t>(v);
}

void check_args(unsigned p, int N) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (N < 0) throw std::invalid_argument("negative generator bound");
}

// Generators of A<k>_* with the given caps on tau and on the polynomial
// generators (kNoCap for none).
std::vector<RoleSpec> angle_roles(unsigned p, int k, int N, std::uint32_t tau_cap, std::uint32_t poly_cap,
                                  std::uint32_t tau0_cap) {
  std::vector<RoleSpec> out;
  if (p == 2) {
    for (int i = 1; i <= N; ++i) out.push_back({{GeneratorKind::kZeta, i, k}, poly_cap});
    return out;
  }
  if (k == 0) {
    for (int i = 0; i <= N; ++i) out.push_back({{GeneratorKind::kTau, i, 0}, i == 0 ? tau0_cap : tau_cap});
  } else if (k == 1) {
    out.push_back({{GeneratorKind::kTau, 0, 0}, tau0_cap});
  }
  for (int i = 1; i <= N; ++i) out.push_back({{GeneratorKind::kXi, i, k}, poly_cap});
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::string name, unsigned p, int N, Degree D, int shift,
                         std::vector<HopfGenerator> roles, std::vector<std::uint32_t> caps)
    : name_(std::move(name)), N_(N), D_(D), shift_(shift), roles_(std::move(roles)) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    const Degree deg = role_degree(p, roles_[i]);
    if (deg > std::numeric_limits<int>::max()) throw std::overflow_error("generator degree overflow");
    gens.push_back({role_name(p, roles_[i]), static_cast<int>(deg), caps[i]});
  }
  alg_ = make_algebra(p, std::move(gens));

  const auto one = Element::one(alg_);
  auto same_family = [&](GeneratorKind kind, int j) -> Element {
    if (j == 0) return one;
    const auto idx = find(kind, j);
    return idx ? gen(*idx) : Element::zero(alg_);
  };
  auto tau = [&](int j) {
    const auto idx = find(GeneratorKind::kTau, j);
    return idx ? gen(*idx) : Element::zero(alg_);
  };

  gen_coproduct_.assign(roles_.size(), Tensor(alg_, 2));
  gen_antipode_.assign(roles_.size(), Element::zero(alg_));

  // Polynomial generators first, by index, so tau can use iota(xi_j).
  std::vector<std::size_t> order(roles_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = roles_[a].kind == GeneratorKind::kTau, tb = roles_[b].kind == GeneratorKind::kTau;
    if (ta != tb) return !ta;
    return roles_[a].index < roles_[b].index;
  });

  for (std::size_t i : order) {
    const auto& r = roles_[i];
    const int n = r.index;
    Tensor mu(alg_, 2);
    Element iota = Element::zero(alg_);
    if (r.kind != GeneratorKind::kTau) {
      for (int k = 0; k <= n; ++k) {
        mu = mu + Tensor::pure({power(same_family(r.kind, n - k), upow(p, k)), same_family(r.kind, k)});
      }
      for (int k = 0; k < n; ++k) {
        const Element prev = k == 0 ? one : gen_antipode_[*find(r.kind, k)];
        iota -= power(same_family(r.kind, n - k), upow(p, k)) * prev;
      }
    } else {
      for (int k = 0; k <= n; ++k) {
        mu = mu + Tensor::pure({power(same_family(GeneratorKind::kXi, n - k), upow(p, k)), tau(k)});
        const auto xi = n - k == 0 ? std::optional<std::size_t>{} : find(GeneratorKind::kXi, n - k);
        const Element iota_xi = n - k == 0 ? one : (xi ? gen_antipode_[*xi] : Element::zero(alg_));
        iota -= power(iota_xi, upow(p, k)) * tau(k);
      }
      mu = mu + Tensor::pure({gen(i), one});
    }
    gen_coproduct_[i] = std::move(mu);
    gen_antipode_[i] = std::move(iota);
  }
}

std::optional<std::size_t> HopfAlgebra::find(GeneratorKind kind, int index) const {
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i].kind == kind && roles_[i].index == index) return i;
  }
  return std::nullopt;
}

HopfAlgebra HopfAlgebra::dual(unsigned p, int N, Degree D) {
  check_args(p, N);
  auto specs = angle_roles(p, 0, N, 2, kNoCap, 2);
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  for (const auto& s : specs) roles.push_back(s.role), caps.push_back(s.cap);
  return HopfAlgebra("A_dual", p, N, D, 0, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::quotient(unsigned p, int n, Degree D) {
  check_args(p, n);
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  if (p != 2) {
    for (int i = 0; i <= n; ++i) roles.push_back({GeneratorKind::kTau, i, 0}), caps.push_back(2);
  }
  for (int i = 1; i <= n; ++i) {
    roles.push_back({p == 2 ? GeneratorKind::kZeta : GeneratorKind::kXi, i, 0});
    caps.push_back(cap_of(upow(p, n - i + 1)));
  }
  return HopfAlgebra("A(" + std::to_string(n) + ")", p, n, D, 0, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::quotient_ev(unsigned p, int n, Degree D) {
  check_args(p, n);
  if (p == 2) throw std::invalid_argument("the even quotient needs an odd prime");
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  for (int i = 1; i <= n; ++i) {
    roles.push_back({GeneratorKind::kXi, i, 0});
    caps.push_back(cap_of(upow(p, n - i + 1)));
  }
  return HopfAlgebra("A_ev(" + std::to_string(n) + ")", p, n, D, 0, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::angle(unsigned p, int k, int N, Degree D) {
  check_args(p, N);
  if (k < 0) throw std::invalid_argument("negative level");
  auto specs = angle_roles(p, k, N, 2, kNoCap, 2);
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  for (const auto& s : specs) roles.push_back(s.role), caps.push_back(s.cap);
  return HopfAlgebra("A_angle(" + std::to_string(k) + ")", p, N, D, k, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::mod_I(unsigned p, int k, int N, Degree D) {
  check_args(p, N);
  if (k < 0) throw std::invalid_argument("negative level");
  // p = 2: zeta_i^{2^{k+1}} = 0. Odd p, k = 0: tau_0 = 0, xi_i^p = 0;
  // k = 1: xi_i^{p^2} = 0; k >= 2: xi_i^{p^{k+1}} = 0.
  const std::uint32_t poly_cap = p;
  const std::uint32_t tau0_cap = (p != 2 && k == 0) ? 1 : 2;
  auto specs = angle_roles(p, k, N, 2, poly_cap, tau0_cap);
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  for (const auto& s : specs) roles.push_back(s.role), caps.push_back(s.cap);
  return HopfAlgebra("A_mod_I(" + std::to_string(k) + ")", p, N, D, k, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::mod_J(unsigned p, int k, int N, Degree D) {
  check_args(p, N);
  if (k < 0) throw std::invalid_argument("negative level");
  const std::uint32_t poly_cap = cap_of(upow(p, k + 1));
  const std::uint32_t tau0_cap = (p != 2 && k == 0) ? 1 : 2;
  auto specs = angle_roles(p, 0, N, 2, poly_cap, tau0_cap);
  std::vector<HopfGenerator> roles;
  std::vector<std::uint32_t> caps;
  for (const auto& s : specs) roles.push_back(s.role), caps.push_back(s.cap);
  return HopfAlgebra("A_mod_J(" + std::to_string(k) + ")", p, N, D, 0, std::move(roles), std::move(caps));
}

HopfAlgebra HopfAlgebra::ground(unsigned p) {
  check_args(p, 0);
  return HopfAlgebra("F_p", p, 0, 0, 0, {}, {});
}

HopfAlgebra HopfAlgebra::from_name(const std::string& name, unsigned p, int N, Degree D, int n, int k) {
  std::string head = name;
  std::string arg;
  if (const auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw std::invalid_argument("malformed preset '" + name + "'");
    head = name.substr(0, open);
    arg = name.substr(open + 1, name.size() - open - 2);
  }
  auto number = [&](int fallback) {
    if (arg.empty() || arg == "n" || arg == "k") return fallback;
    if (!std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("malformed preset argument in '" + name + "'");
    }
    return std::stoi(arg);
  };
  if (head == "A_dual") {
    if (!arg.empty()) {
      std::istringstream is(arg);
      char c1 = 0, c2 = 0;
      long long pp = 0, nn = 0, dd = 0;
      if (!(is >> pp >> c1 >> nn >> c2 >> dd) || c1 != ',' || c2 != ',') {
        throw std::invalid_argument("A_dual takes (p,N,D)");
      }
      return dual(static_cast<unsigned>(pp), static_cast<int>(nn), dd);
    }
    return dual(p, N, D);
  }
  if (head == "A" || head == "A2n") return quotient(p, number(n), D);
  if (head == "A_ev") return quotient_ev(p, number(n), D);
  if (head == "A_angle") return angle(p, number(k), N, D);
  if (head == "A_mod_I") return mod_I(p, number(k), N, D);
  if (head == "A_mod_J") return mod_J(p, number(k), N, D);
  if (head == "F_p" || head == "ground") return ground(p);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------- maps

namespace {

void require_in(const HopfAlgebra& h, const Element& x) {
  if (x.algebra_ptr() != h.algebra() && !(x.algebra() == *h.algebra())) {
    throw std::invalid_argument("element outside the Hopf algebra");
  }
}

Tensor monomial_coproduct(const HopfAlgebra& h, const Monomial& m) {
  const auto& alg = h.algebra();
  Tensor out(alg, 2);
  out.add({unit_monomial(*alg), unit_monomial(*alg)}, 1);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i]) out = out * tensor_power(h.generator_coproduct(i), m.exps[i]);
  }
  return out;
}

Element monomial_antipode(const HopfAlgebra& h, const Monomial& m) {
  Element out = Element::one(h.algebra());
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i]) out = out * power(h.generator_antipode(i), m.exps[i]);
  }
  return out;
}

}  // namespace

Tensor coproduct(const HopfAlgebra& h, const Element& x) {
  require_in(h, x);
  const auto& alg = h.algebra();
  Tensor out(alg, 2);
  for (const auto& t : x.terms()) {
    if (h.degree_bound() > 0 && degree_of(*alg, t.mono) > h.degree_bound()) {
      throw std::domain_error("coproduct requested above the degree bound " + std::to_string(h.degree_bound()));
    }
    out = out + monomial_coproduct(h, t.mono).scaled(t.coeff);
  }
  return out;
}

Element antipode(const HopfAlgebra& h, const Element& x) {
  require_in(h, x);
  Element out = Element::zero(h.algebra());
  for (const auto& t : x.terms()) out += monomial_antipode(h, t.mono).scaled(t.coeff);
  return out;
}

Coeff counit(const Element& x) { return x.constant_term(); }

Tensor switch_map(const Tensor& t) {
  if (t.arity() != 2) throw std::invalid_argument("switch map needs a two-fold tensor");
  const auto& a = t.algebra();
  Tensor out(t.algebra_ptr(), 2);
  for (const auto& [key, c] : t.terms()) {
    const bool negative = a.has_signs() && odd_degree(a, key[0]) && odd_degree(a, key[1]);
    out.add({key[1], key[0]}, negative ? -static_cast<long long>(c) : c);
  }
  return out;
}

Tensor coproduct_on_leg(const HopfAlgebra& h, const Tensor& t, int leg) {
  if (leg < 0 || leg >= t.arity()) throw std::out_of_range("tensor leg");
  Tensor out(t.algebra_ptr(), t.arity() + 1);
  const auto l = static_cast<std::size_t>(leg);
  for (const auto& [key, c] : t.terms()) {
    const Tensor mu = monomial_coproduct(h, key[l]);
    for (const auto& [k2, c2] : mu.terms()) {
      Tensor::Key nk(key.begin(), key.begin() + leg);
      nk.push_back(k2[0]);
      nk.push_back(k2[1]);
      nk.insert(nk.end(), key.begin() + leg + 1, key.end());
      out.add(nk, static_cast<long long>(c) * c2);
    }
  }
  return out;
}

Tensor antipode_on_leg(const HopfAlgebra& h, const Tensor& t, int leg) {
  if (leg < 0 || leg >= t.arity()) throw std::out_of_range("tensor leg");
  Tensor out(t.algebra_ptr(), t.arity());
  const auto l = static_cast<std::size_t>(leg);
  for (const auto& [key, c] : t.terms()) {
    const Element img = monomial_antipode(h, key[l]);
    for (const auto& term : img.terms()) {
      Tensor::Key nk = key;
      nk[l] = term.mono;
      out.add(nk, static_cast<long long>(c) * term.coeff);
    }
  }
  return out;
}

Tensor counit_on_leg(const Tensor& t, int leg) {
  if (leg < 0 || leg >= t.arity()) throw std::out_of_range("tensor leg");
  if (t.arity() == 1) throw std::invalid_argument("cannot drop the only leg");
  Tensor out(t.algebra_ptr(), t.arity() - 1);
  for (const auto& [key, c] : t.terms()) {
    if (!key[static_cast<std::size_t>(leg)].is_one()) continue;
    Tensor::Key nk = key;
    nk.erase(nk.begin() + leg);
    out.add(nk, c);
  }
  return out;
}

Element multiply_legs(const Tensor& t) {
  if (t.arity() != 2) throw std::invalid_argument("multiplication needs a two-fold tensor");
  const auto& a = t.algebra();
  std::vector<Term> terms;
  for (const auto& [key, c] : t.terms()) {
    auto prod = multiply_monomials(a, key[0], key[1]);
    if (!prod) continue;
    terms.push_back({std::move(prod->mono), prod->negative ? (a.prime() - c) % a.prime() : c});
  }
  return Element::from_terms(t.algebra_ptr(), std::move(terms));
}

Element as_element(const Tensor& t) {
  if (t.arity() != 1) throw std::invalid_argument("not a one-fold tensor");
  std::vector<Term> terms;
  for (const auto& [key, c] : t.terms()) terms.push_back({key[0], c});
  return Element::from_terms(t.algebra_ptr(), std::move(terms));
}

Element transport(const Element& x, const PresentationPtr& target) {
  if (x.prime() != target->prime()) throw std::invalid_argument("transport between different characteristics");
  const auto& src = x.algebra();
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.generator(i).name);
  Element out = Element::zero(target);
  for (const auto& t : x.terms()) {
    Element prod = Element::scalar(target, t.coeff);
    for (std::size_t i = 0; i < src.size() && !prod.is_zero(); ++i) {
      if (!t.mono.exps[i]) continue;
      if (!where[i]) {
        prod = Element::zero(target);
        break;
      }
      prod = prod * power(Element::generator(target, *where[i]), t.mono.exps[i]);
    }
    out += prod;
  }
  return out;
}

Tensor transport(const Tensor& t, const PresentationPtr& target) {
  Tensor out(target, t.arity());
  const unsigned p = target->prime();
  for (const auto& [key, c] : t.terms()) {
    Tensor::Key nk;
    long long coeff = c;
    for (const auto& m : key) {
      const Element img = transport(Element::monomial(t.algebra_ptr(), m), target);
      if (img.is_zero()) {
        coeff = 0;
        break;
      }
      coeff = coeff * img.terms().front().coeff % p;
      nk.push_back(img.terms().front().mono);
    }
    if (coeff) out.add(nk, coeff);
  }
  return out;
}

AlgebraMap make_assignment(const HopfAlgebra& h, const PresentationPtr& target, std::vector<Element> images) {
  return AlgebraMap(h.algebra(), target, std::move(images));
}

AlgebraMap trivial_assignment(const HopfAlgebra& h, const PresentationPtr& target) {
  return AlgebraMap(h.algebra(), target, std::vector<Element>(h.size(), Element::zero(target)));
}

namespace {

void require_point_of(const HopfAlgebra& h, const AlgebraMap& phi) {
  if (phi.source() != h.algebra() && !(*phi.source() == *h.algebra())) {
    throw std::invalid_argument("assignment is not defined on this Hopf algebra");
  }
}

}  // namespace

AlgebraMap convolution(const HopfAlgebra& h, const AlgebraMap& phi, const AlgebraMap& psi) {
  require_point_of(h, phi);
  require_point_of(h, psi);
  if (phi.target() != psi.target() && !(*phi.target() == *psi.target())) {
    throw std::invalid_argument("assignments have different targets");
  }
  const auto& target = phi.target();
  std::vector<Element> images;
  for (std::size_t i = 0; i < h.size(); ++i) {
    Element acc = Element::zero(target);
    for (const auto& [key, c] : h.generator_coproduct(i).terms()) {
      const Element a = psi(Element::monomial(h.algebra(), key[0]));
      if (a.is_zero()) continue;
      acc += (a * phi(Element::monomial(h.algebra(), key[1]))).scaled(c);
    }
    images.push_back(std::move(acc));
  }
  return AlgebraMap(h.algebra(), target, std::move(images));
}

AlgebraMap precompose_antipode(const HopfAlgebra& h, const AlgebraMap& phi) {
  require_point_of(h, phi);
  std::vector<Element> images;
  for (std::size_t i = 0; i < h.size(); ++i) images.push_back(phi(h.generator_antipode(i)));
  return AlgebraMap(h.algebra(), phi.target(), std::move(images));
}

GroupElement theta(const HopfAlgebra& h, const AlgebraMap& phi, int K) {
  require_point_of(h, phi);
  if (K < 0) throw std::invalid_argument("negative truncation");
  if (K > h.bound()) throw std::invalid_argument("truncation exceeds the generator bound");
  const auto& target = phi.target();
  const unsigned p = h.prime();
  auto image = [&](GeneratorKind kind, int i) -> Element {
    const auto idx = h.find(kind, i);
    if (!idx) return Element::zero(target);
    const Element& v = phi.images()[*idx];
    if (!eps_free(v)) throw std::invalid_argument("assignment values must not involve eps");
    return v;
  };
  std::vector<Element> c;
  c.push_back(Element::one(target));
  const bool with_tau = p != 2 && h.shift() <= 1 && h.find(GeneratorKind::kTau, 0).has_value();
  Element eps = Element::zero(target);
  if (with_tau) {
    const auto e = target->epsilon_index();
    if (!e) throw std::invalid_argument("target algebra needs eps for odd p");
    eps = Element::generator(target, *e);
    c[0] += image(GeneratorKind::kTau, 0) * eps;
  }
  const GeneratorKind poly = p == 2 ? GeneratorKind::kZeta : GeneratorKind::kXi;
  for (int i = 1; i <= K; ++i) {
    Element a = image(poly, i);
    if (with_tau && h.shift() == 0) a += image(GeneratorKind::kTau, i) * eps;
    c.push_back(std::move(a));
  }
  return GroupElement(std::move(c), Flavor::at_level(h.shift()));
}

std::pair<HopfAlgebra, AlgebraMap> restrict_up(const HopfAlgebra& h, const AlgebraMap& phi) {
  require_point_of(h, phi);
  HopfAlgebra up = HopfAlgebra::angle(h.prime(), h.shift() + 1, h.bound(), h.degree_bound());
  std::vector<Element> images;
  for (const auto& r : up.roles()) {
    if (r.kind == GeneratorKind::kTau) {
      const auto idx = h.find(GeneratorKind::kTau, r.index);
      images.push_back(idx ? phi.images()[*idx] : Element::zero(phi.target()));
      continue;
    }
    const auto idx = h.find(r.kind, r.index);
    if (!idx) throw std::invalid_argument("source lacks a generator needed one level up");
    images.push_back(phi(power(h.gen(*idx), h.prime())));
  }
  AlgebraMap restricted(up.algebra(), phi.target(), std::move(images));
  return {std::move(up), std::move(restricted)};
}

bool rho_diagram_check(const HopfAlgebra& h, const AlgebraMap& phi, int K) {
  const GroupElement lhs = rho(theta(h, phi, K));
  const auto [up, restricted] = restrict_up(h, phi);
  return lhs == theta(up, restricted, K);
}

// ---------------------------------------------------------------- checks

void CheckReport::fail(std::string what) {
  ok = false;
  if (counterexamples.size() < 8) counterexamples.push_back(std::move(what));
}

namespace {

CheckReport report(std::string check, const HopfAlgebra& h, Degree d) {
  CheckReport r;
  r.check = std::move(check);
  r.preset = h.name();
  r.degree_bound = d;
  return r;
}

std::vector<std::size_t> generators_up_to(const HopfAlgebra& h, Degree d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.algebra()->generator(i).degree <= d) out.push_back(i);
  }
  return out;
}

std::string gname(const HopfAlgebra& h, std::size_t i) { return h.algebra()->generator(i).name; }

}  // namespace

std::vector<std::pair<std::string, Tensor>> cocommutativity_defect(const HopfAlgebra& h, Degree d) {
  std::vector<std::pair<std::string, Tensor>> out;
  for (std::size_t i : generators_up_to(h, d)) {
    const Tensor mu = coproduct(h, h.gen(i));
    out.emplace_back(gname(h, i), mu - switch_map(mu));
  }
  return out;
}

CheckReport cocommutativity_check(const HopfAlgebra& h, Degree d) {
  auto r = report("cocommutativity", h, d);
  for (const auto& [name, defect] : cocommutativity_defect(h, d)) {
    if (!defect.is_zero()) r.fail(name + ": mu - T mu = " + defect.to_string());
  }
  return r;
}

CheckReport check_hopf_ideal(const HopfAlgebra& h, const std::vector<Element>& gens, Degree d) {
  auto r = report("hopf_ideal", h, d);
  const auto& alg = h.algebra();
  std::vector<Monomial> ideal;
  for (const auto& g : gens) {
    require_in(h, g);
    if (g.is_zero()) continue;
    if (g.terms().size() != 1) throw std::invalid_argument("ideal generators must be monomials");
    ideal.push_back(g.terms().front().mono);
  }
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& g) {
      for (std::size_t i = 0; i < g.exps.size(); ++i) {
        if (g.exps[i] > m.exps[i]) return false;
      }
      return true;
    });
  };
  for (const auto& g : ideal) {
    const Degree dg = degree_of(*alg, g);
    const Element ge = Element::monomial(alg, g);
    for (Degree e = 0; dg + e <= d; ++e) {
      for (const auto& m : component_basis(*alg, e)) {
        const Element x = Element::monomial(alg, m) * ge;
        if (x.is_zero()) continue;
        const std::string label = x.to_string();
        if (counit(x) != 0) r.fail("counit(" + label + ") != 0");
        const Element ix = antipode(h, x);
        for (const auto& t : ix.terms()) {
          if (!in_ideal(t.mono)) {
            r.fail("iota(" + label + ") has term " + Element::monomial(alg, t.mono).to_string() + " outside the ideal");
            break;
          }
        }
        const Tensor mx = coproduct(h, x);
        for (const auto& [key, c] : mx.terms()) {
          if (!in_ideal(key[0]) && !in_ideal(key[1])) {
            r.fail("mu(" + label + ") has term " + Element::monomial(alg, key[0]).to_string() + " (x) " +
                   Element::monomial(alg, key[1]).to_string() + " outside I(x)A + A(x)I");
            break;
          }
        }
      }
    }
  }
  return r;
}

CheckReport primitivity_check(const HopfAlgebra& h) {
  auto r = report("primitivity", h, h.degree_bound());
  const auto one = Element::one(h.algebra());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Element g = h.gen(i);
    const Tensor want = Tensor::pure({g, one}) + Tensor::pure({one, g});
    const Tensor& got = h.generator_coproduct(i);
    if (!(got == want)) r.fail(gname(h, i) + ": mu = " + got.to_string());
  }
  return r;
}

CheckReport coassociativity_check(const HopfAlgebra& h, Degree d) {
  auto r = report("coassociativity", h, d);
  for (std::size_t i : generators_up_to(h, d)) {
    const Tensor mu = coproduct(h, h.gen(i));
    const Tensor left = coproduct_on_leg(h, mu, 0);
    const Tensor right = coproduct_on_leg(h, mu, 1);
    if (!(left == right)) r.fail(gname(h, i) + ": (mu(x)id)mu = " + left.to_string() + " vs (id(x)mu)mu = " + right.to_string());
  }
  return r;
}

CheckReport counit_check(const HopfAlgebra& h, Degree d) {
  auto r = report("counit", h, d);
  for (std::size_t i : generators_up_to(h, d)) {
    const Element g = h.gen(i);
    const Tensor mu = coproduct(h, g);
    const Element left = as_element(counit_on_leg(mu, 0));
    const Element right = as_element(counit_on_leg(mu, 1));
    if (!(left == g)) r.fail(gname(h, i) + ": (e(x)id)mu = " + left.to_string());
    if (!(right == g)) r.fail(gname(h, i) + ": (id(x)e)mu = " + right.to_string());
  }
  return r;
}

CheckReport antipode_check(const HopfAlgebra& h, Degree d) {
  auto r = report("antipode", h, d);
  for (std::size_t i : generators_up_to(h, d)) {
    const Element g = h.gen(i);
    const Tensor mu = coproduct(h, g);
    const Element want = Element::scalar(h.algebra(), counit(g));
    const Element left = multiply_legs(antipode_on_leg(h, mu, 0));
    const Element right = multiply_legs(antipode_on_leg(h, mu, 1));
    if (!(left == want)) r.fail(gname(h, i) + ": m(iota(x)id)mu = " + left.to_string());
    if (!(right == want)) r.fail(gname(h, i) + ": m(id(x)iota)mu = " + right.to_string());
  }
  return r;
}

CheckReport antipode_recursion_check(const HopfAlgebra& h) {
  auto r = report("antipode_recursion", h, h.degree_bound());
  const auto& alg = h.algebra();
  const unsigned p = h.prime();
  const auto one = Element::one(alg);
  auto member = [&](GeneratorKind kind, int j) -> std::optional<Element> {
    if (j == 0) return one;
    const auto idx = h.find(kind, j);
    if (!idx) return std::nullopt;
    return h.gen(*idx);
  };
  auto iota_of = [&](GeneratorKind kind, int j) -> std::optional<Element> {
    if (j == 0) return one;
    const auto idx = h.find(kind, j);
    if (!idx) return std::nullopt;
    return antipode(h, h.gen(*idx));
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& role = h.roles()[i];
    const int n = role.index;
    if (role.kind == GeneratorKind::kTau) {
      Element sum = antipode(h, h.gen(i));
      bool complete = true;
      for (int k = 0; k <= n && complete; ++k) {
        const auto ix = iota_of(GeneratorKind::kXi, n - k);
        const auto idx = h.find(GeneratorKind::kTau, k);
        if (!ix || !idx) {
          complete = false;
          break;
        }
        sum += power(*ix, upow(p, k)) * h.gen(*idx);
      }
      if (complete && !sum.is_zero()) r.fail(gname(h, i) + ": tau recursion leaves " + sum.to_string());
      continue;
    }
    // Both one-sided recursions.
    Element left = Element::zero(alg), right = Element::zero(alg);
    bool complete = true;
    std::uint64_t pk = 1;
    for (int k = 0; k <= n; ++k, pk *= p) {
      const auto y_hi = member(role.kind, n - k), y_lo = member(role.kind, k);
      const auto i_hi = iota_of(role.kind, n - k), i_lo = iota_of(role.kind, k);
      if (!y_hi || !y_lo || !i_hi || !i_lo) {
        complete = false;
        break;
      }
      left += power(*y_hi, pk) * *i_lo;
      right += power(*i_hi, pk) * *y_lo;
    }
    if (!complete) continue;
    if (!left.is_zero()) r.fail(gname(h, i) + ": sum y_{n-k}^{p^k} iota(y_k) = " + left.to_string());
    if (!right.is_zero()) r.fail(gname(h, i) + ": sum iota(y_{n-k})^{p^k} y_k = " + right.to_string());
  }
  return r;
}

CheckReport quotient_map_check(const HopfAlgebra& h, const HopfAlgebra& q, Degree d) {
  auto r = report("quotient_map", h, d);
  r.preset = h.name() + " -> " + q.name();
  for (std::size_t i : generators_up_to(h, d)) {
    const Element g = h.gen(i);
    const Element gq = transport(g, q.algebra());
    const Tensor lhs = transport(coproduct(h, g), q.algebra());
    const Tensor rhs = coproduct(q, gq);
    if (!(lhs == rhs)) r.fail(gname(h, i) + ": reduced mu = " + lhs.to_string() + " but mu of reduction = " + rhs.to_string());
    const Element il = transport(antipode(h, g), q.algebra());
    const Element ir = antipode(q, gq);
    if (!(il == ir)) r.fail(gname(h, i) + ": reduced iota = " + il.to_string() + " but iota of reduction = " + ir.to_string());
  }
  return r;
}

CheckReport monogenic_check(const HopfAlgebra& h) {
  auto r = primitivity_check(h);
  r.check = "monogenic";
  const unsigned p = h.prime();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& g = h.algebra()->generator(i);
    const bool odd = p != 2 && (g.degree % 2) != 0;
    const std::uint32_t want = odd ? 2 : p;
    if (g.cap != want && g.cap != 1) {
      r.fail(g.name + ": cap " + std::to_string(g.cap) + " where " + std::to_string(want) + " is expected");
    }
  }
  return r;
}

}  // namespace steenrod
