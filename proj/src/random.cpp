#include "steenrod/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

std::uint64_t Sampler::uniform(std::uint64_t n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
}

bool Sampler::coin(double p_true) { return std::bernoulli_distribution(p_true)(rng_); }

const std::vector<Monomial>& Sampler::basis(const PresentationPtr& a, Degree d, bool eps_free_only) {
  const auto key = std::make_tuple(a.get(), d, eps_free_only);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  keep_alive_.push_back(a);
  auto all = component_basis(*a, d);
  if (eps_free_only) {
    if (const auto e = a->epsilon_index()) {
      std::erase_if(all, [&](const Monomial& m) { return m.exps[*e] != 0; });
    }
  }
  return cache_.emplace(key, std::move(all)).first->second;
}

const Sampler::Counts* Sampler::counts(const PresentationPtr& a, Degree d) {
  const auto eps = a->epsilon_index();
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (i != eps && a->generator(i).degree <= 0) return nullptr;
  }
  const auto top = static_cast<std::size_t>(std::max<Degree>(d + 1, 0));
  auto& c = counts_[a.get()];
  if (!c.ways.empty() && c.ways.front().size() > top) return &c;
  if (c.ways.empty()) keep_alive_.push_back(a);
  c.gens.clear();
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (i != eps) c.gens.push_back(i);
  }
  const std::size_t m = c.gens.size();
  c.ways.assign(m + 1, std::vector<double>(top + 1, 0.0));
  c.ways[m][0] = 1.0;
  for (std::size_t i = m; i-- > 0;) {
    const auto& g = a->generator(c.gens[i]);
    const auto deg = static_cast<std::size_t>(g.degree);
    for (std::size_t r = 0; r <= top; ++r) {
      double w = c.ways[i + 1][r];
      if (r >= deg) w += c.ways[i][r - deg];
      if (g.cap != kNoCap && r >= deg * g.cap) w -= c.ways[i + 1][r - deg * g.cap];
      c.ways[i][r] = w;
    }
  }
  return &c;
}

double Sampler::basis_size(const PresentationPtr& a, Degree d, bool eps_free_only) {
  const Counts* c = counts(a, d);
  if (!c) return static_cast<double>(basis(a, d, eps_free_only).size());
  const auto& w = c->ways.front();
  double total = d >= 0 ? w[static_cast<std::size_t>(d)] : 0.0;
  if (!eps_free_only && a->epsilon_index() && d + 1 >= 0) total += w[static_cast<std::size_t>(d + 1)];
  return total;
}

Monomial Sampler::monomial(const PresentationPtr& a, Degree d, bool eps_free_only) {
  const Counts* c = counts(a, d);
  if (!c) {
    const auto& b = basis(a, d, eps_free_only);
    if (b.empty()) throw std::invalid_argument("empty component");
    return b[uniform(b.size())];
  }
  const double total = basis_size(a, d, eps_free_only);
  if (total <= 0) throw std::invalid_argument("empty component");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Monomial m{std::vector<std::uint32_t>(a->size(), 0)};
  Degree r = d;
  const auto eps = a->epsilon_index();
  if (!eps_free_only && eps && d + 1 >= 0) {
    const double with = c->ways[0][static_cast<std::size_t>(d + 1)];
    if (unit(rng_) * total < with) {
      m.exps[*eps] = 1;
      r = d + 1;
    }
  }
  for (std::size_t i = 0; i < c->gens.size(); ++i) {
    const auto& g = a->generator(c->gens[i]);
    const auto& next = c->ways[i + 1];
    double left = unit(rng_) * c->ways[i][static_cast<std::size_t>(r)];
    std::uint32_t e = 0;
    for (;; ++e) {
      const Degree rest = r - static_cast<Degree>(e) * g.degree;
      const bool last = rest - g.degree < 0 || (g.cap != kNoCap && e + 1 >= g.cap);
      left -= next[static_cast<std::size_t>(rest)];
      if (left < 0 || last) break;
    }
    while (e > 0 && next[static_cast<std::size_t>(r - static_cast<Degree>(e) * g.degree)] == 0) --e;
    m.exps[c->gens[i]] = e;
    r -= static_cast<Degree>(e) * g.degree;
  }
  return m;
}

Element Sampler::element(const PresentationPtr& a, Degree d, bool eps_free_only) {
  const unsigned p = a->prime();
  std::vector<Term> terms;
  if (basis_size(a, d, eps_free_only) <= static_cast<double>(kUniformBasisLimit)) {
    for (const auto& m : basis(a, d, eps_free_only)) {
      const auto c = static_cast<Coeff>(uniform(p));
      if (c) terms.push_back({m, c});
    }
  } else {
    const auto count = 1 + uniform(3);
    for (std::uint64_t i = 0; i < count; ++i) {
      terms.push_back({monomial(a, d, eps_free_only), static_cast<Coeff>(1 + uniform(p - 1))});
    }
  }
  return Element::from_terms(a, std::move(terms));
}

Element Sampler::nonzero_element(const PresentationPtr& a, Degree d, bool eps_free_only) {
  if (basis_size(a, d, eps_free_only) == 0) return Element::zero(a);
  for (;;) {
    Element x = element(a, d, eps_free_only);
    if (!x.is_zero()) return x;
  }
}

GroupElement Sampler::group_element(const PresentationPtr& a, int k, Flavor flavor, double zero_prob) {
  const unsigned p = a->prime();
  std::vector<Element> c;
  Element lead = Element::one(a);
  const auto eps = a->epsilon_index();
  if (p != 2 && flavor.level <= 1 && eps && !coin(zero_prob)) {
    // 1 + c*eps with c of degree 1
    std::vector<Term> terms;
    for (const auto& m : basis(a, 0, false)) {
      if (m.exps[*eps] == 0) continue;
      const auto v = static_cast<Coeff>(uniform(p));
      if (v) terms.push_back({m, v});
    }
    lead += Element::from_terms(a, std::move(terms));
  }
  c.push_back(std::move(lead));
  for (int i = 1; i <= k; ++i) {
    if (coin(zero_prob)) {
      c.push_back(Element::zero(a));
      continue;
    }
    c.push_back(element(a, coefficient_degree(p, flavor, i), flavor.level >= 1));
  }
  return GroupElement(std::move(c), flavor);
}

AlgebraMap Sampler::assignment(const HopfAlgebra& h, const PresentationPtr& target) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& g = h.algebra()->generator(i);
    Element x = element(target, g.degree, true);
    if (g.cap != kNoCap && !power(x, g.cap).is_zero()) x = Element::zero(target);
    images.push_back(std::move(x));
  }
  return AlgebraMap(h.algebra(), target, std::move(images));
}

PresentationPtr sample_algebra(unsigned p, int k) {
  const auto base = steenrod_dual(p, std::max(k, 1));
  return p == 2 ? base : adjoin_epsilon(base);
}

}  // namespace steenrod
