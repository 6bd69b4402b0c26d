#include "steenrod/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>

#include "steenrod/kernels.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/random.hpp"

namespace steenrod {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

struct Ctx {
  const VerifyConfig& cfg;
  SuiteResult& out;
  Sampler rng;

  template <class F>
  void check(bool ok, F&& what) {
    ++out.checks;
    if (ok) return;
    ++out.failures;
    if (out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(what());
  }

  void absorb(const CheckReport& r) {
    check(r.ok, [&] { return to_json(r); });
  }

  unsigned p() const { return cfg.p; }
  int k() const { return cfg.k; }
  std::size_t samples() const { return cfg.samples; }
};

Json equation(const std::string& property, Json inputs, Json lhs, Json rhs) {
  return Json{{"property", property}, {"inputs", std::move(inputs)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
}

Json inputs(std::initializer_list<const GroupElement*> xs) {
  Json out = Json::array();
  for (const auto* x : xs) out.push_back(to_json(*x));
  return out;
}

std::vector<PresentationPtr> group_algebras(unsigned p, int k) {
  return {sample_algebra(p, k), adjoin_epsilon(steenrod_quotient(p, std::max(k, 1)))};
}

// Level flavors scale degrees by p^j; keep them within reach.
int level_truncation(unsigned p, int k, int level) {
  int t = k;
  while (t > 1 && coefficient_degree(p, Flavor::at_level(level), t) > 200000) --t;
  return t;
}

Element eps_multiple(Ctx& c, const PresentationPtr& a, Degree d) {
  const auto e = a->epsilon_index();
  if (!e) return Element::zero(a);
  return c.rng.element(a, d + 1, true) * Element::generator(a, *e);
}

// A random base element lying in the stage of doubled index t (t = -1: any).
GroupElement element_at_level(Ctx& c, const PresentationPtr& a, int k, int t, double zero_prob = 0.1) {
  GroupElement g = c.rng.group_element(a, k, Flavor::base(), zero_prob);
  if (t < 0) return g;
  auto coeffs = g.coeffs();
  coeffs[0] = Element::one(a);
  const int m = t / 2;
  for (int i = 1; i <= std::min(m, k); ++i) coeffs[static_cast<std::size_t>(i)] = Element::zero(a);
  if (t % 2 == 1 && m + 1 <= k) {
    coeffs[static_cast<std::size_t>(m + 1)] = eps_multiple(c, a, coefficient_degree(a->prime(), Flavor::base(), m + 1));
  }
  return GroupElement(std::move(coeffs), Flavor::base());
}

// An element of the even subgroup: eps-free, leading coefficient 1.
GroupElement even_element(Ctx& c, const PresentationPtr& a, int k) {
  std::vector<Element> coeffs{Element::one(a)};
  for (int i = 1; i <= k; ++i) {
    coeffs.push_back(c.rng.coin(0.1) ? Element::zero(a)
                                     : c.rng.element(a, coefficient_degree(a->prime(), Flavor::base(), i), true));
  }
  return GroupElement(std::move(coeffs), Flavor::base());
}

// The stage guaranteed for [x, y] from the levels of x and y.
int commutator_bound(const FiltrationLevel& x, const FiltrationLevel& y) {
  auto twice = [](const FiltrationLevel& l) { return l.kind() == FiltrationLevel::Kind::kBottom ? -1 : l.twice_value(); };
  const int hi = std::max(twice(x), twice(y));
  const int lo = std::min(twice(x), twice(y));
  int bound = 1;
  if (hi >= 0) bound = std::max(bound, hi % 2 == 0 ? hi + 1 : hi + 2);
  if (lo >= 1) bound = std::max(bound, 4);
  if (lo >= 2) bound = std::max(bound, 2 * (lo / 2) + 4);
  return bound;
}

bool is_top(const FiltrationLevel& l) { return l.kind() == FiltrationLevel::Kind::kTop; }

AlgebraMap name_map(const PresentationPtr& source, const PresentationPtr& target) {
  std::vector<Element> images;
  for (const auto& g : source->generators()) {
    const auto idx = target->index_of(g.name);
    images.push_back(idx ? Element::generator(target, *idx) : Element::zero(target));
  }
  return AlgebraMap(source, target, std::move(images));
}

AlgebraMap compose_maps(const AlgebraMap& f, const AlgebraMap& phi) {
  std::vector<Element> images;
  for (const auto& x : phi.images()) images.push_back(f(x));
  return AlgebraMap(phi.source(), f.target(), std::move(images));
}

Json map_json(const AlgebraMap& f) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.source()->size(); ++i) out[f.source()->generator(i).name] = to_json(f.images()[i]);
  return out;
}

// ---------------------------------------------------------------- algebra

void algebra_ring_laws(Ctx& c) {
  const unsigned p = c.p();
  const auto a = sample_algebra(p, std::min(c.k(), 3));
  const Degree top = p == 2 ? 15 : 2 * static_cast<Degree>(p * p);
  auto degree = [&] { return static_cast<Degree>(c.rng.uniform(static_cast<std::uint64_t>(top) + 2)) - 1; };
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const Degree dx = degree(), dy = degree(), dz = degree();
    const Element x = c.rng.element(a, dx), y = c.rng.element(a, dy), z = c.rng.element(a, dz);
    const Json in{to_json(x), to_json(y), to_json(z)};
    const Element l1 = (x * y) * z, r1 = x * (y * z);
    c.check(l1 == r1, [&] { return equation("associativity", in, to_json(l1), to_json(r1)); });
    const Element l2 = x * (y + z), r2 = x * y + x * z;
    c.check(l2 == r2, [&] { return equation("distributivity", in, to_json(l2), to_json(r2)); });
    const Element l3 = x * y;
    const Element r3 = (p != 2 && (dx * dy) % 2 != 0) ? -(y * x) : y * x;
    c.check(l3 == r3, [&] { return equation("graded_commutativity", in, to_json(l3), to_json(r3)); });
    const Element l4 = frobenius(x * y + z, 1), r4 = frobenius(x, 1) * frobenius(y, 1) + frobenius(z, 1);
    c.check(l4 == r4, [&] { return equation("frobenius_ring_map", in, to_json(l4), to_json(r4)); });
    const Element l5 = power(x, p), r5 = frobenius(x, 1);
    c.check(l5 == r5, [&] { return equation("frobenius_is_pth_power", in, to_json(l5), to_json(r5)); });
    const Element l6 = x * Element::one(a);
    c.check(l6 == x, [&] { return equation("unit", in, to_json(l6), to_json(x)); });
  }
}

// Counts normal-form monomials of degree d by walking all exponent vectors
// within the caps; the exponent of an uncapped generator is bounded by d.
std::size_t brute_force_count(const Presentation& a, Degree d) {
  std::size_t count = 0;
  std::vector<std::uint32_t> e(a.size(), 0);
  std::function<void(std::size_t, Degree)> walk = [&](std::size_t i, Degree deg) {
    if (i == a.size()) {
      count += deg == d;
      return;
    }
    const auto& g = a.generator(i);
    const std::uint32_t limit = g.cap != kNoCap ? g.cap : static_cast<std::uint32_t>(std::max<Degree>(d, 0) + 2);
    for (std::uint32_t x = 0; x < limit; ++x) walk(i + 1, deg + static_cast<Degree>(x) * g.degree);
  };
  walk(0, 0);
  return count;
}

void algebra_enumerate_component(Ctx& c) {
  const unsigned p = c.p();
  const auto a = adjoin_epsilon(steenrod_quotient(p, 2));
  const Degree top = p == 2 ? 6 : 2 * static_cast<Degree>(p * p) - 2;
  for (Degree d = -1; d <= top; ++d) {
    const auto basis = component_basis(*a, d);
    const auto want = brute_force_count(*a, d);
    c.check(basis.size() == want, [&] {
      return equation("component_dimension", Json{{"degree", d}}, basis.size(), want);
    });
    if (basis.size() > 6) continue;
    const auto all = enumerate_component(a, d);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= p;
    c.check(all.size() == expected, [&] { return equation("component_size", Json{{"degree", d}}, all.size(), expected); });
    std::set<std::vector<Coeff>> seen;
    bool roundtrip = true;
    for (const auto& x : all) {
      const auto coords = coordinates(x, basis);
      seen.insert(coords);
      if (!(from_coordinates(a, basis, coords) == x)) roundtrip = false;
      if (!x.is_zero() && x.degree() != std::optional<Degree>(d)) roundtrip = false;
    }
    c.check(roundtrip && seen.size() == all.size(), [&] {
      return equation("component_distinct_homogeneous", Json{{"degree", d}}, seen.size(), all.size());
    });
  }
}

// ---------------------------------------------------------------- partitions

void partitions_bijection(Ctx& c) {
  for (int m = 1; m <= 10; ++m) {
    std::set<std::vector<int>> images;
    std::size_t domain = 0;
    bool lengths_ok = true;
    for (int k = 1; k < m; ++k) {
      for (const auto& nu : enumerate_compositions(k)) {
        ++domain;
        const auto img = extend_composition(nu, m);
        if (img.total() != m || img.length() < 2) lengths_ok = false;
        images.insert(img.parts());
      }
    }
    std::set<std::vector<int>> targets;
    for (const auto& nu : enumerate_compositions(m)) {
      if (nu.length() >= 2) targets.insert(nu.parts());
    }
    c.check(lengths_ok && images.size() == domain, [&] {
      return equation("injective", Json{{"m", m}}, images.size(), domain);
    });
    c.check(images == targets, [&] {
      return equation("onto_length_at_least_2", Json{{"m", m}}, images.size(), targets.size());
    });
    // 2^{m-1} - 1 = sum_{k<m} 2^{k-1}, with the compositions counted by bitmask.
    const std::uint64_t lhs = (std::uint64_t{1} << (m - 1)) - 1;
    std::uint64_t rhs = 0;
    for (int k = 1; k < m; ++k) rhs += std::uint64_t{1} << (k - 1);
    c.check(lhs == rhs && domain == rhs, [&] { return equation("cardinality", Json{{"m", m}}, lhs, rhs); });
  }
}

void partitions_sigma(Ctx& c) {
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_compositions(n);
    // Oracle: a composition of n is a subset of the n-1 cut points.
    c.check(all.size() == (std::size_t{1} << (n - 1)), [&] {
      return equation("count", Json{{"n", n}}, all.size(), std::size_t{1} << (n - 1));
    });
    c.check(std::is_sorted(all.begin(), all.end()), [&] { return equation("lexicographic", Json{{"n", n}}, false, true); });
    for (const auto& nu : all) {
      int running = 0;
      bool ok = true;
      for (int i = 1; i <= nu.length(); ++i) {
        if (nu.offset(i) != running || nu.part(i) < 1) ok = false;
        running += nu.part(i);
      }
      ok = ok && running == n && nu.total() == n;
      c.check(ok, [&] { return equation("offsets", to_json(nu), running, n); });
    }
  }
}

// ---------------------------------------------------------------- group

void group_axioms(Ctx& c) {
  const unsigned p = c.p();
  const auto algebras = group_algebras(p, c.k());
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const auto& a = algebras[s % algebras.size()];
    const int level = s % 4 == 3 ? 1 + static_cast<int>(c.rng.uniform(2)) : 0;
    const Flavor f = Flavor::at_level(level);
    const int k = level == 0 ? c.k() : level_truncation(p, c.k(), level);
    const GroupElement x = c.rng.group_element(a, k, f), y = c.rng.group_element(a, k, f),
                       z = c.rng.group_element(a, k, f);
    const GroupElement e = GroupElement::identity(a, k, f);
    const Json in = inputs({&x, &y, &z});
    const GroupElement l1 = compose(compose(x, y), z), r1 = compose(x, compose(y, z));
    c.check(l1 == r1, [&] { return equation("associativity", in, to_json(l1), to_json(r1)); });
    const GroupElement l2 = compose(e, x), r2 = compose(x, e);
    c.check(l2 == x && r2 == x, [&] { return equation("identity", in, to_json(l2), to_json(r2)); });
    const GroupElement xi = invert(x);
    const GroupElement l3 = compose(x, xi), r3 = compose(xi, x);
    c.check(l3.is_identity() && r3.is_identity(), [&] { return equation("inverse", in, to_json(l3), to_json(r3)); });
    bool closed = true;
    try {
      GroupElement(l1.coeffs(), l1.flavor());
      GroupElement(xi.coeffs(), xi.flavor());
    } catch (const std::invalid_argument&) {
      closed = false;
    }
    c.check(closed, [&] { return equation("closure", in, to_json(l1), to_json(xi)); });
  }
}

void group_inverse_oracles(Ctx& c) {
  const unsigned p = c.p();
  const auto algebras = group_algebras(p, c.k());
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const auto& a = algebras[s % algebras.size()];
    const GroupElement x = c.rng.group_element(a, c.k());
    const Json in = inputs({&x});
    const GroupElement rec = invert_recursive(x), closed = invert_closed(x);
    c.check(rec == closed, [&] { return equation("closed_equals_recursive", in, to_json(closed), to_json(rec)); });
    if (p != 2) {
      const GroupElement split = invert_split(x);
      c.check(split == rec, [&] { return equation("split_equals_recursive", in, to_json(split), to_json(rec)); });
    }
    const GroupElement one = compose(x, closed);
    c.check(one.is_identity(), [&] { return equation("closed_is_inverse", in, to_json(one), to_json(GroupElement::identity(a, c.k()))); });
  }
}

void group_commutator_leading(Ctx& c) {
  const unsigned p = c.p();
  const auto algebras = group_algebras(p, std::max(c.k(), 3));
  for (int which = 1; which <= 3; ++which) {
    const auto kind = static_cast<CommutatorCase>(which);
    for (std::size_t s = 0; s < c.samples(); ++s) {
      const auto& a = algebras[s % algebras.size()];
      const int K = std::max(c.k(), 3);
      const int depth = which == 1 ? 0 : 1 + static_cast<int>(c.rng.uniform(static_cast<std::uint64_t>(K - 2)));
      auto ac = c.rng.group_element(a, K, Flavor::base(), 0.05).coeffs();
      for (int i = 1; i <= depth; ++i) ac[static_cast<std::size_t>(i)] = Element::zero(a);
      auto bc = c.rng.group_element(a, K, Flavor::base(), 0.05).coeffs();
      if (which == 3) {
        const int l = 1 + static_cast<int>(c.rng.uniform(static_cast<std::uint64_t>(depth)));
        for (int i = 1; i <= l; ++i) bc[static_cast<std::size_t>(i)] = Element::zero(a);
      }
      const GroupElement x(std::move(ac)), y(std::move(bc));
      const auto pred = commutator_leading(x, y, kind, depth);
      const GroupElement got = commutator(x, y);
      const Json in{{"case", which}, {"depth", depth}, {"alpha", to_json(x)}, {"beta", to_json(y)}};
      // Below the leading index the commutator is (alpha_0 - 1) beta_0 bbar_i.
      const GroupElement yi = invert(y);
      std::vector<Element> bcs(static_cast<std::size_t>(pred.first_index), Element::one(a));
      const Element shift = (x.coeff(0) - Element::one(a)) * y.coeff(0);
      for (int i = 1; i < pred.first_index; ++i) bcs[static_cast<std::size_t>(i)] = shift * yi.coeff(i);
      bool low = got.coeff(0) == Element::one(a);
      for (int i = 1; i < pred.first_index; ++i) low = low && got.coeff(i) == bcs[static_cast<std::size_t>(i)];
      c.check(low, [&] {
        Json want = Json::array();
        for (const auto& e : bcs) want.push_back(to_json(e));
        Json have = Json::array();
        for (int i = 0; i < pred.first_index; ++i) have.push_back(to_json(got.coeff(i)));
        return equation("below_leading", in, std::move(have), std::move(want));
      });
      const Element& g1 = got.coeff(pred.first_index);
      const Element& g2 = got.coeff(pred.first_index + 1);
      c.check(g1 == pred.first, [&] { return equation("first_coefficient", in, to_json(pred.first), to_json(g1)); });
      c.check(g2 == pred.second, [&] { return equation("second_coefficient", in, to_json(pred.second), to_json(g2)); });
    }
  }
}

void group_filtration_bounds(Ctx& c) {
  const unsigned p = c.p();
  const int k = c.k();
  const auto algebras = group_algebras(p, k);
  std::vector<const GroupElement*> none;

  // Every commutator in the tree must meet the pairwise bound of its inputs.
  auto bracket = [&](const GroupElement& x, const GroupElement& y, const char* property) {
    const auto lx = filtration_level(x), ly = filtration_level(y);
    GroupElement z = commutator(x, y);
    const auto lz = filtration_level(z);
    const int want = commutator_bound(lx, ly);
    c.check(is_top(lx) || is_top(ly) || lz.at_least_twice(want), [&] {
      return equation(property, inputs({&x, &y}), to_json(lz), FiltrationLevel::twice(want).to_string());
    });
    return z;
  };

  for (int depth = 1; depth <= 4; ++depth) {
    for (std::size_t s = 0; s < c.samples(); ++s) {
      const auto& a = algebras[s % algebras.size()];
      // Lower central: [[[x1, x2], x3], ...], starting at a random stage.
      {
        const int t0 = static_cast<int>(c.rng.uniform(4)) - 1;
        GroupElement z = element_at_level(c, a, k, t0);
        for (int j = 0; j < depth; ++j) {
          const int t = static_cast<int>(c.rng.uniform(4)) - 1;
          z = bracket(z, element_at_level(c, a, k, t), "pairwise_inclusion");
        }
        const auto lz = filtration_level(z);
        c.check(lz.at_least_twice(2 * depth - 1), [&] {
          return equation("lower_central_depth_" + std::to_string(depth), to_json(z), to_json(lz),
                          FiltrationLevel::twice(2 * depth - 1).to_string());
        });
      }
      // Derived: a balanced tree of 2^depth leaves.
      {
        std::vector<GroupElement> layer;
        for (int i = 0; i < (1 << depth); ++i) layer.push_back(c.rng.group_element(a, k));
        while (layer.size() > 1) {
          std::vector<GroupElement> next;
          for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(bracket(layer[i], layer[i + 1], "pairwise_inclusion"));
          layer = std::move(next);
        }
        const int want = depth == 1 ? 1 : 4 * (depth - 1);
        const auto lz = filtration_level(layer.front());
        c.check(lz.at_least_twice(want), [&] {
          return equation("derived_depth_" + std::to_string(depth), to_json(layer.front()), to_json(lz),
                          FiltrationLevel::twice(want).to_string());
        });
      }
      // Even subgroup, odd p: depth d lands in stage d.
      if (p != 2) {
        GroupElement z = even_element(c, a, k);
        for (int j = 0; j < depth; ++j) z = commutator(z, even_element(c, a, k));
        const auto lz = filtration_level(z);
        c.check(lz.at_least_twice(2 * depth), [&] {
          return equation("even_lower_central_depth_" + std::to_string(depth), to_json(z), to_json(lz),
                          FiltrationLevel::twice(2 * depth).to_string());
        });
      }
    }
  }
}

void group_gpn_closure(Ctx& c) {
  const unsigned p = c.p();
  const int n = std::min(c.k(), 3);
  const auto a = adjoin_epsilon(steenrod_quotient(p, n));
  auto sample = [&] {
    for (;;) {
      GroupElement g = c.rng.group_element(a, n, Flavor::base(), 0.3);
      if (in_Gpn(g, n)) return g;
    }
  };
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const GroupElement x = sample(), y = sample();
    const GroupElement xy = compose(x, y), xi = invert(x);
    c.check(in_Gpn(xy, n), [&] { return equation("compose_in_Gpn", inputs({&x, &y}), to_json(xy), true); });
    c.check(in_Gpn(xi, n), [&] { return equation("inverse_in_Gpn", inputs({&x}), to_json(xi), true); });
  }
}

void group_homomorphisms(Ctx& c) {
  const unsigned p = c.p();
  const int k = c.k();
  const auto algebras = group_algebras(p, k);
  const AlgebraMap f = name_map(algebras[0], algebras[1]);
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const auto& a = algebras[s % algebras.size()];
    const GroupElement x = c.rng.group_element(a, k), y = c.rng.group_element(a, k);
    const GroupElement xy = compose(x, y);
    const Json in = inputs({&x, &y});

    const int j = static_cast<int>(c.rng.uniform(static_cast<std::uint64_t>(k) + 1));
    const GroupElement pl = project(xy, j), pr = compose(project(x, j), project(y, j));
    c.check(pl == pr, [&] { return equation("project_" + std::to_string(j), in, to_json(pl), to_json(pr)); });

    const GroupElement rl = rho(xy), rr = compose(rho(x), rho(y));
    c.check(rl == rr, [&] { return equation("rho_base", in, to_json(rl), to_json(rr)); });

    const int level = 1 + static_cast<int>(c.rng.uniform(2));
    const int kl = level_truncation(p, k, level + 1);
    const GroupElement u = c.rng.group_element(a, kl, Flavor::at_level(level)),
                       v = c.rng.group_element(a, kl, Flavor::at_level(level));
    const GroupElement ul = rho(compose(u, v)), ur = compose(rho(u), rho(v));
    c.check(ul == ur, [&] { return equation("rho_level_" + std::to_string(level), inputs({&u, &v}), to_json(ul), to_json(ur)); });

    if (p != 2) {
      const GroupElement el = pi_ev(xy), er = compose(pi_ev(x), pi_ev(y));
      c.check(el == er, [&] { return equation("pi_ev", in, to_json(el), to_json(er)); });
      c.check(pi_ev(x).is_identity() == in_G_od(x), [&] { return equation("pi_ev_kernel_is_od", in, in_G_od(x), pi_ev(x).is_identity()); });
      const GroupElement ev = pi_ev(x);
      c.check(pi_ev(ev) == ev, [&] { return equation("pi_ev_idempotent", in, to_json(pi_ev(ev)), to_json(ev)); });
    }

    if (a == algebras[0]) {
      const GroupElement ml = map_coefficients(f, xy), mr = compose(map_coefficients(f, x), map_coefficients(f, y));
      c.check(ml == mr, [&] { return equation("ring_map_functoriality", in, to_json(ml), to_json(mr)); });
    }
  }
  const GroupElement e = GroupElement::identity(algebras[0], k);
  c.check(rho(e).is_identity(), [&] { return equation("rho_identity", inputs({&e}), to_json(rho(e)), "identity"); });
}

void group_abelian_kernel(Ctx& c) {
  const unsigned p = c.p();
  const int k = c.k();
  // Every positive-degree element of this algebra has vanishing p-th power.
  const auto base = HopfAlgebra::mod_I(p, 0, std::max(k, 1), 0).algebra();
  const auto a = adjoin_epsilon(base);
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const int level = static_cast<int>(c.rng.uniform(3));
    const Flavor f = Flavor::at_level(level);
    const int kl = level == 0 ? k : level_truncation(p, k, level);
    auto make = [&] {
      auto coeffs = c.rng.group_element(a, kl, f).coeffs();
      if (level != 1) coeffs[0] = Element::one(a);
      return GroupElement(std::move(coeffs), f);
    };
    const GroupElement x = make(), y = make();
    const Json in = inputs({&x, &y});
    c.check(in_abelian_kernel(x) && in_abelian_kernel(y), [&] { return equation("in_kernel", in, to_json(rho(x)), "identity"); });
    const GroupElement z = commutator(x, y);
    c.check(z.is_identity(), [&] { return equation("kernel_commutes", in, to_json(z), "identity"); });
  }
  // Spec example: X + z1 X^2 over F_2[z1]/(z1^2).
  if (p == 2) {
    const auto f2 = make_algebra(2, {{"z1", 1, 2}});
    const GroupElement g({Element::one(f2), Element::generator(f2, "z1")});
    c.check(in_abelian_kernel(g), [&] { return equation("example_z1", inputs({&g}), to_json(rho(g)), "identity"); });
  }
}

void group_star_product(Ctx& c) {
  const unsigned p = c.p();
  const int k = std::max(c.k(), 1);
  const auto algebras = group_algebras(p, k);
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const auto& a = algebras[s % algebras.size()];
    const GroupElement x = c.rng.group_element(a, k), y = c.rng.group_element(a, k), z = c.rng.group_element(a, k);
    const GroupElement hx = half_quotient(x), hy = half_quotient(y), hz = half_quotient(z);
    const Json in = inputs({&x, &y, &z});
    const GroupElement l1 = half_quotient(compose(x, y)), r1 = star_product(hx, hy);
    c.check(l1 == r1, [&] { return equation("half_quotient_homomorphism", in, to_json(l1), to_json(r1)); });
    const GroupElement l2 = star_product(star_product(hx, hy), hz), r2 = star_product(hx, star_product(hy, hz));
    c.check(l2 == r2, [&] { return equation("star_associativity", in, to_json(l2), to_json(r2)); });
    const GroupElement l3 = star_product(hx, star_inverse(hx));
    c.check(l3.is_identity(), [&] { return equation("star_inverse", in, to_json(l3), "identity"); });
  }
}

// ---------------------------------------------------------------- hopf

Degree axiom_degree(unsigned p) { return 2 * (static_cast<Degree>(p) * p * p * p - 1); }

std::vector<HopfAlgebra> axiom_presets(unsigned p) {
  const Degree D = axiom_degree(p);
  std::vector<HopfAlgebra> out{HopfAlgebra::dual(p, 4, D), HopfAlgebra::quotient(p, 3, D)};
  if (p != 2) out.push_back(HopfAlgebra::quotient_ev(p, 3, D));
  for (int k = 0; k <= 2; ++k) {
    if (k >= 1) out.push_back(HopfAlgebra::angle(p, k, 4, D));
    out.push_back(HopfAlgebra::mod_I(p, k, 4, D));
    out.push_back(HopfAlgebra::mod_J(p, k, 4, D));
  }
  return out;
}

void hopf_axioms(Ctx& c) {
  for (const auto& h : axiom_presets(c.p())) {
    const Degree D = h.degree_bound();
    c.absorb(coassociativity_check(h, D));
    c.absorb(counit_check(h, D));
    c.absorb(antipode_check(h, D));
    c.absorb(antipode_recursion_check(h));
  }
}

void hopf_quotient_maps(Ctx& c) {
  const unsigned p = c.p();
  const Degree D = axiom_degree(p);
  const auto dual = HopfAlgebra::dual(p, 4, D);
  for (int n = 1; n <= 3; ++n) c.absorb(quotient_map_check(dual, HopfAlgebra::quotient(p, n, D), D));
  if (p != 2) c.absorb(quotient_map_check(dual, HopfAlgebra::quotient_ev(p, 3, D), D));
  for (int k = 0; k <= 2; ++k) {
    c.absorb(quotient_map_check(dual, HopfAlgebra::mod_J(p, k, 4, D), D));
    const auto up = k == 0 ? dual : HopfAlgebra::angle(p, k, 4, D);
    c.absorb(quotient_map_check(up, HopfAlgebra::mod_I(p, k, 4, D), D));
  }
}

std::vector<Element> ideal_generators(const HopfAlgebra& h, std::uint64_t poly_exp, bool with_tau0) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& r = h.roles()[i];
    if (r.kind == GeneratorKind::kTau) {
      if (with_tau0 && r.index == 0) gens.push_back(h.gen(i));
    } else {
      gens.push_back(power(h.gen(i), poly_exp));
    }
  }
  return gens;
}

void hopf_hopf_ideals(Ctx& c) {
  const unsigned p = c.p();
  const Degree d = 2 * (static_cast<Degree>(p) * p * p - 1);
  const auto dual = HopfAlgebra::dual(p, 3, d);
  std::uint64_t pk1 = p;
  for (int k = 0; k <= 2; ++k, pk1 *= p) {
    // J<k> in the dual algebra, I<k> in A<k>.
    c.absorb(check_hopf_ideal(dual, ideal_generators(dual, pk1, p != 2 && k == 0), d));
    const auto up = k == 0 ? dual : HopfAlgebra::angle(p, k, 3, d);
    c.absorb(check_hopf_ideal(up, ideal_generators(up, p, p != 2 && k == 0), d));
  }
  // The ideal defining A(n).
  for (int n = 1; n <= 2; ++n) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < dual.size(); ++i) {
      const auto& r = dual.roles()[i];
      if (r.kind == GeneratorKind::kTau) {
        if (r.index > n) gens.push_back(dual.gen(i));
      } else if (r.index > n) {
        gens.push_back(dual.gen(i));
      } else {
        std::uint64_t e = 1;
        for (int s = 0; s < n - r.index + 1; ++s) e *= p;
        gens.push_back(power(dual.gen(i), e));
      }
    }
    c.absorb(check_hopf_ideal(dual, gens, d));
  }
}

void hopf_theta_homomorphism(Ctx& c) {
  const unsigned p = c.p();
  const int K = std::max(1, std::min(c.k(), 4));
  const auto target = sample_algebra(p, K);
  std::vector<HopfAlgebra> hs{HopfAlgebra::dual(p, K, 0), HopfAlgebra::angle(p, 1, K, 0), HopfAlgebra::angle(p, 2, K, 0)};
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const auto& h = hs[s % hs.size()];
    const AlgebraMap phi = c.rng.assignment(h, target), psi = c.rng.assignment(h, target);
    const Json in{{"preset", h.name()}, {"phi", map_json(phi)}, {"psi", map_json(psi)}};
    const GroupElement tp = theta(h, phi, K), tq = theta(h, psi, K);
    const GroupElement l1 = theta(h, convolution(h, phi, psi), K), r1 = compose(tq, tp);
    c.check(l1 == r1, [&] { return equation("convolution_to_composition", in, to_json(l1), to_json(r1)); });
    const GroupElement l2 = theta(h, precompose_antipode(h, phi), K), r2 = invert(tp);
    c.check(l2 == r2, [&] { return equation("antipode_to_inverse", in, to_json(l2), to_json(r2)); });
    const GroupElement l3 = theta(h, trivial_assignment(h, target), K);
    c.check(l3.is_identity(), [&] { return equation("counit_to_identity", in, to_json(l3), "identity"); });
  }
}

void hopf_naturality(Ctx& c) {
  const unsigned p = c.p();
  const int K = std::max(1, std::min(c.k(), 4));
  const auto source = sample_algebra(p, K);
  const auto target = adjoin_epsilon(steenrod_quotient(p, K));
  const AlgebraMap f = name_map(source, target);
  const auto h = HopfAlgebra::dual(p, K, 0);
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const AlgebraMap phi = c.rng.assignment(h, source);
    const GroupElement l = map_coefficients(f, theta(h, phi, K));
    const GroupElement r = theta(h, compose_maps(f, phi), K);
    c.check(l == r, [&] { return equation("theta_natural", Json{{"phi", map_json(phi)}}, to_json(l), to_json(r)); });
  }
}

void hopf_rho_diagram(Ctx& c) {
  const unsigned p = c.p();
  const int K = std::max(1, std::min(c.k(), 4));
  const auto target = sample_algebra(p, K);
  for (int k = 0; k <= 2; ++k) {
    const auto h = k == 0 ? HopfAlgebra::dual(p, K, 0) : HopfAlgebra::angle(p, k, K, 0);
    for (std::size_t s = 0; s < c.samples(); ++s) {
      const AlgebraMap phi = c.rng.assignment(h, target);
      const bool ok = rho_diagram_check(h, phi, K);
      c.check(ok, [&] {
        const auto [up, restricted] = restrict_up(h, phi);
        return equation("rho_theta_commutes", Json{{"preset", h.name()}, {"phi", map_json(phi)}},
                        to_json(rho(theta(h, phi, K))), to_json(theta(up, restricted, K)));
      });
    }
  }
}

void hopf_primitivity(Ctx& c) {
  const unsigned p = c.p();
  const Degree D = axiom_degree(p);
  for (int k = 0; k <= 2; ++k) {
    const auto q = HopfAlgebra::mod_I(p, k, 4, D);
    c.absorb(primitivity_check(q));
    c.absorb(monogenic_check(q));
    c.absorb(cocommutativity_check(q, D));
  }
  const auto dual = HopfAlgebra::dual(p, 4, D);
  const auto r = primitivity_check(dual);
  c.check(!r.ok, [&] { return equation("dual_not_primitive", Json{{"preset", dual.name()}}, to_json(r), false); });
}

void hopf_cocommutativity_witness(Ctx& c) {
  const unsigned p = c.p();
  const auto h = HopfAlgebra::dual(p, 2, 0);
  const auto& alg = h.algebra();
  std::string name;
  Tensor want(alg, 2);
  if (p == 2) {
    const Element z1 = Element::generator(alg, "z1");
    name = "z2";
    want = Tensor::pure({z1 * z1, z1}) - Tensor::pure({z1, z1 * z1});
  } else {
    const Element x1 = Element::generator(alg, "x1"), t0 = Element::generator(alg, "t0");
    name = "t1";
    want = Tensor::pure({x1, t0}) - Tensor::pure({t0, x1});
  }
  const Degree d = alg->generator(*alg->index_of(name)).degree;
  bool found = false;
  for (const auto& [g, defect] : cocommutativity_defect(h, d)) {
    if (g != name) continue;
    found = true;
    c.check(defect == want, [&] { return equation("defect_" + name, Json{{"generator", name}}, to_json(defect), to_json(want)); });
    c.check(!defect.is_zero(), [&] { return equation("defect_nonzero", Json{{"generator", name}}, to_json(defect), "nonzero"); });
  }
  c.check(found, [&] { return equation("defect_present", Json{{"generator", name}}, false, true); });
}

// ---------------------------------------------------------------- milnor

int sweep_index(unsigned p, int k) {
  const auto bound = milnor_threshold(p, k + 1);
  int m = 4;
  while (m > 1) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= bound;
    if (total <= 50000000) break;
    --m;
  }
  return m;
}

void milnor_complementarity(Ctx& c) {
  const unsigned p = c.p();
  for (int k = 0; k <= 2; ++k) {
    const int m = sweep_index(p, k);
    const auto r = c.cfg.parallel ? kernels::complementarity_sweep_parallel(p, k, m)
                                  : kernels::complementarity_sweep_serial(p, k, m);
    c.check(r.ok(), [&] { return equation("J_xor_span", Json{{"p", p}, {"k", k}, {"max_index", m}}, to_json(r), true); });
  }
}

Seq random_seq(Ctx& c, int len, std::uint32_t bound) {
  std::vector<std::uint32_t> r;
  for (int i = 0; i < len; ++i) r.push_back(static_cast<std::uint32_t>(c.rng.uniform(bound)));
  return Seq(r);
}

SeqB random_seqb(Ctx& c, int len) {
  std::vector<std::uint32_t> e;
  for (int i = 0; i < len; ++i) e.push_back(static_cast<std::uint32_t>(c.rng.uniform(2)));
  return SeqB(e);
}

void milnor_duality(Ctx& c) {
  const unsigned p = c.p();
  const auto h = HopfAlgebra::dual(p, 3, 0);
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const int k = static_cast<int>(c.rng.uniform(3));
    const auto bound = static_cast<std::uint32_t>(milnor_threshold(p, k + 1));
    const Seq R = random_seq(c, 3, bound), S = random_seq(c, 3, bound);
    const SeqB E = p == 2 ? SeqB() : random_seqb(c, 4), F = p == 2 ? SeqB() : random_seqb(c, 4);
    const Json in{{"E", E.to_string()}, {"R", R.to_string()}, {"F", F.to_string()}, {"S", S.to_string()}, {"k", k}};
    const DualSymbol sym = dual(p, E, R);
    const Coeff pair = kronecker_pair(sym, F, S);
    const Coeff want = (E == F && R == S) ? 1 : 0;
    c.check(pair == want, [&] { return equation("dual_basis", in, pair, want); });
    const Element x = monomial_of(F, S, h);
    const Coeff lin = kronecker_pair(sym, x, h);
    c.check(lin == want, [&] { return equation("pairing_on_monomial", in, lin, want); });
    const bool j = in_J_basis(E, R, k, p), span = in_dual_span(sym, k);
    c.check(j != span, [&] { return equation("J_xor_span", in, j, span); });
    std::vector<std::uint32_t> raw(R.entries());
    const auto th = milnor_threshold(p, k);
    const bool jr = in_J_raw(raw.data(), static_cast<int>(raw.size()), E[0] != 0, k, p, th);
    const bool sr = in_span_raw(raw.data(), static_cast<int>(raw.size()), E[0] != 0, k, p, th);
    c.check(jr == j && sr == span, [&] { return equation("raw_forms_agree", in, Json{jr, sr}, Json{j, span}); });
  }
}

void milnor_seq_order(Ctx& c) {
  for (std::size_t s = 0; s < c.samples(); ++s) {
    const Seq a = random_seq(c, 4, 3), b = random_seq(c, 4, 3), d = random_seq(c, 4, 3);
    const Json in{a.to_string(), b.to_string(), d.to_string()};
    c.check(seq_leq(a, a), [&] { return equation("reflexive", in, false, true); });
    c.check(!(seq_leq(a, b) && seq_leq(b, a)) || a == b, [&] { return equation("antisymmetric", in, false, true); });
    c.check(!(seq_leq(a, b) && seq_leq(b, d)) || seq_leq(a, d), [&] { return equation("transitive", in, false, true); });
    c.check(seq_leq(a, a + b), [&] { return equation("monotone_sum", in, (a + b).to_string(), true); });
    bool pointwise = true;
    for (int i = 1; i <= 4; ++i) pointwise = pointwise && (a + b)[i] == a[i] + b[i];
    c.check(pointwise, [&] { return equation("componentwise_sum", in, (a + b).to_string(), false); });
    const SeqB e = random_seqb(c, 4), f = random_seqb(c, 4);
    bool leq = true;
    for (int i = 0; i < 4; ++i) leq = leq && e[i] <= f[i];
    c.check(seqb_leq(e, f) == leq, [&] { return equation("seqb_order", Json{e.to_string(), f.to_string()}, seqb_leq(e, f), leq); });
  }
}

// ---------------------------------------------------------------- grouptheory

EnumerateOptions enum_options(const Ctx& c) {
  EnumerateOptions o;
  o.parallel = c.cfg.parallel;
  o.limit = group_limit_from_env();
  return o;
}

void grouptheory_thm37(Ctx& c) {
  const unsigned p = c.p();
  for (const auto& dg : standard_cases(p)) {
    const auto g = enumerate_group(dg.algebra, dg.n, enum_options(c));
    const auto lcs = lower_central_series(g, dg.name);
    c.check(lcs.ok, [&] { return equation("lower_central_bound", Json{{"algebra", dg.name}, {"n", dg.n}}, to_json(lcs), true); });
    const auto der = derived_series(g, dg.name);
    c.check(der.ok, [&] { return equation("derived_bound", Json{{"algebra", dg.name}, {"n", dg.n}}, to_json(der), true); });
    if (p != 2) {
      auto o = enum_options(c);
      const auto ev = ev_subgroup_series(dg.algebra, dg.n, o, dg.name);
      c.check(ev.ok, [&] { return equation("even_bound", Json{{"algebra", dg.name}, {"n", dg.n}}, to_json(ev), true); });
    }
  }
  if (p == 2) {
    const auto g1 = enumerate_group(make_algebra(2, {{"z1", 1, 2}}), 1, enum_options(c));
    c.check(g1.size() == 2, [&] { return equation("order_G21", Json{{"algebra", "F_2[z1]/(z1^2)"}}, g1.size(), 2); });
    const auto g2 = enumerate_group(steenrod_quotient(2, 2), 2, enum_options(c));
    c.check(g2.size() == 8, [&] { return equation("order_G22", Json{{"algebra", "A(2)"}}, g2.size(), 8); });
  } else {
    auto o = enum_options(c);
    o.ev_only = true;
    const auto t = enumerate_group(steenrod_quotient_ev(p, 1), 0, o);
    c.check(t.size() == 1, [&] { return equation("even_n0_trivial", Json{{"p", p}}, t.size(), 1); });
  }
}

void grouptheory_latin_square(Ctx& c) {
  for (const auto& dg : standard_cases(c.p())) {
    const auto g = enumerate_group(dg.algebra, dg.n, enum_options(c));
    c.check(is_latin_square(g), [&] { return equation("latin_square", Json{{"algebra", dg.name}}, false, true); });
    bool table_ok = true, inverse_ok = true, identity_ok = g.element(g.identity()).is_identity();
    for (FiniteGroupTable::Index a = 0; a < g.size(); ++a) {
      inverse_ok = inverse_ok && g.product(a, g.inverse(a)) == g.identity();
      for (FiniteGroupTable::Index b = 0; b < g.size() && table_ok; b += 1 + static_cast<FiniteGroupTable::Index>(g.size() / 64)) {
        const auto ab = compose(g.element(a), g.element(b));
        table_ok = g.index_of(ab) == std::optional<FiniteGroupTable::Index>(g.product(a, b));
      }
    }
    c.check(table_ok && inverse_ok && identity_ok, [&] {
      return equation("table_matches_compose", Json{{"algebra", dg.name}}, Json{table_ok, inverse_ok, identity_ok}, true);
    });
    bool members = true;
    for (const auto& x : g.elements()) members = members && in_Gpn(x, dg.n);
    c.check(members, [&] { return equation("members_in_Gpn", Json{{"algebra", dg.name}}, false, true); });
  }
}

void grouptheory_series(Ctx& c) {
  for (const auto& dg : standard_cases(c.p())) {
    const auto g = enumerate_group(dg.algebra, dg.n, enum_options(c));
    const auto lcs = lower_central_series(g, dg.name);
    const auto der = derived_series(g, dg.name);
    const Json in{{"algebra", dg.name}, {"n", dg.n}};
    bool nested = true;
    for (std::size_t i = 1; i < lcs.chain.size(); ++i) nested = nested && is_subset(lcs.chain[i], lcs.chain[i - 1]);
    for (std::size_t i = 1; i < der.chain.size(); ++i) nested = nested && is_subset(der.chain[i], der.chain[i - 1]);
    c.check(nested, [&] { return equation("chains_descend", in, Json{lcs.orders(), der.orders()}, true); });
    bool inside = true;
    for (std::size_t i = 0; i < der.chain.size(); ++i) {
      const auto& gamma = i < lcs.chain.size() ? lcs.chain[i] : lcs.chain.back();
      inside = inside && is_subset(der.chain[i], gamma);
    }
    c.check(inside, [&] { return equation("derived_inside_lower_central", in, Json{lcs.orders(), der.orders()}, true); });
    const bool first = der.chain.size() > 1 && lcs.chain.size() > 1 && der.chain[1] == lcs.chain[1];
    c.check(first || g.size() == 1, [&] { return equation("D1_equals_Gamma1", in, Json{lcs.orders(), der.orders()}, true); });
    c.check(lcs.filtration_ok && der.filtration_ok, [&] { return equation("series_filtration", in, to_json(lcs), to_json(der)); });
  }
}

void grouptheory_od_exponent(Ctx& c) {
  const unsigned p = c.p();
  if (p == 2) {
    // G_{2,0} is trivial.
    const auto g = enumerate_group(steenrod_quotient(2, 1), 0, enum_options(c));
    c.check(g.size() == 1, [&] { return equation("G20_trivial", Json::object(), g.size(), 1); });
    return;
  }
  for (const auto& dg : standard_cases(p)) {
    const auto g = enumerate_group(dg.algebra, dg.n, enum_options(c));
    std::vector<FiniteGroupTable::Index> od;
    for (FiniteGroupTable::Index a = 0; a < g.size(); ++a) {
      const auto& x = g.element(a);
      c.check(pi_ev(x).is_identity() == in_G_od(x), [&] { return equation("od_is_pi_ev_kernel", inputs({&x}), in_G_od(x), pi_ev(x).is_identity()); });
      if (!in_G_od(x)) continue;
      od.push_back(a);
      const GroupElement xp = group_power(x, p);
      c.check(xp.is_identity(), [&] { return equation("od_exponent_p", inputs({&x}), to_json(xp), "identity"); });
    }
    for (std::size_t i = 0; i < od.size() && i < 64; ++i) {
      for (std::size_t j = 0; j < od.size() && j < 64; ++j) {
        c.check(g.product(od[i], od[j]) == g.product(od[j], od[i]), [&] {
          return equation("od_abelian", inputs({&g.element(od[i]), &g.element(od[j])}), false, true);
        });
      }
    }
  }
}

void grouptheory_g0_additive(Ctx& c) {
  const unsigned p = c.p();
  if (p == 2) return grouptheory_od_exponent(c);
  const auto A = steenrod_quotient(p, 1);
  const auto g = enumerate_group(A, 0, enum_options(c));
  const auto a1 = component_basis(*A, 1);
  std::size_t expected = 1;
  for (std::size_t i = 0; i < a1.size(); ++i) expected *= p;
  c.check(g.size() == expected, [&] { return equation("order_is_A1", Json{{"p", p}}, g.size(), expected); });
  const auto& C = g.coefficient_algebra();
  auto to_a1 = [&](FiniteGroupTable::Index i) { return transport(eps_coefficient(g.element(i).coeff(0)), A); };
  std::set<std::vector<Coeff>> images;
  for (FiniteGroupTable::Index i = 0; i < g.size(); ++i) {
    images.insert(coordinates(to_a1(i), a1));
    for (FiniteGroupTable::Index j = 0; j < g.size(); ++j) {
      const Element l = to_a1(g.product(i, j)), r = to_a1(i) + to_a1(j);
      c.check(l == r, [&] { return equation("product_is_sum", inputs({&g.element(i), &g.element(j)}), to_json(l), to_json(r)); });
    }
  }
  c.check(images.size() == g.size(), [&] { return equation("bijective", Json{{"p", p}}, images.size(), g.size()); });
  (void)C;
}

// ---------------------------------------------------------------- kernels

void kernels_parallel_matches_serial(Ctx& c) {
  const unsigned p = c.p();
  for (const auto& dg : standard_cases(p)) {
    auto o = enum_options(c);
    o.parallel = false;
    const auto g = enumerate_group(dg.algebra, dg.n, o);
    const Json in{{"algebra", dg.name}, {"n", dg.n}};
    c.check(kernels::build_table_serial(g) == kernels::build_table_parallel(g), [&] {
      return equation("table", in, false, true);
    });
    const auto all = whole_group(g);
    const auto s = kernels::commutator_set_serial(g, all, all), q = kernels::commutator_set_parallel(g, all, all);
    c.check(s == q, [&] { return equation("commutator_set", in, s, q); });
  }
  for (int k = 0; k <= 1; ++k) {
    const auto s = kernels::complementarity_sweep_serial(p, k, 2), q = kernels::complementarity_sweep_parallel(p, k, 2);
    c.check(s == q, [&] { return equation("sweep", Json{{"p", p}, {"k", k}}, to_json(s), to_json(q)); });
  }
}

using SuiteFn = void (*)(Ctx&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"algebra.enumerate_component", algebra_enumerate_component},
      {"algebra.ring_laws", algebra_ring_laws},
      {"group.abelian_kernel", group_abelian_kernel},
      {"group.axioms", group_axioms},
      {"group.commutator_leading", group_commutator_leading},
      {"group.filtration_bounds", group_filtration_bounds},
      {"group.gpn_closure", group_gpn_closure},
      {"group.homomorphisms", group_homomorphisms},
      {"group.inverse_oracles", group_inverse_oracles},
      {"group.star_product", group_star_product},
      {"grouptheory.g0_additive", grouptheory_g0_additive},
      {"grouptheory.latin_square", grouptheory_latin_square},
      {"grouptheory.od_exponent", grouptheory_od_exponent},
      {"grouptheory.series", grouptheory_series},
      {"grouptheory.thm37", grouptheory_thm37},
      {"hopf.axioms", hopf_axioms},
      {"hopf.cocommutativity_witness", hopf_cocommutativity_witness},
      {"hopf.hopf_ideals", hopf_hopf_ideals},
      {"hopf.naturality", hopf_naturality},
      {"hopf.primitivity", hopf_primitivity},
      {"hopf.quotient_maps", hopf_quotient_maps},
      {"hopf.rho_diagram", hopf_rho_diagram},
      {"hopf.theta_homomorphism", hopf_theta_homomorphism},
      {"kernels.parallel_matches_serial", kernels_parallel_matches_serial},
      {"milnor.complementarity", milnor_complementarity},
      {"milnor.duality", milnor_duality},
      {"milnor.seq_order", milnor_seq_order},
      {"partitions.bijection", partitions_bijection},
      {"partitions.sigma", partitions_sigma},
  };
  return suites;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult out;
  out.name = name;
  Ctx c{cfg, out, Sampler(suite_seed(cfg.seed, name))};
  try {
    it->second(c);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (!is_prime(cfg.p)) throw std::invalid_argument("p must be prime");
  if (cfg.k < 1) throw std::invalid_argument("k must be positive");
  std::vector<std::string> names;
  for (const auto& n : suite_names()) {
    if (cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), n) != cfg.only.end()) names.push_back(n);
  }
  for (const auto& n : cfg.only) {
    if (!registry().count(n)) throw std::invalid_argument("unknown suite '" + n + "'");
  }
  VerifyReport report;
  report.config = cfg;
  report.suites.resize(names.size());
  const auto count = static_cast<long long>(names.size());
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel)
  for (long long i = 0; i < count; ++i) {
    report.suites[static_cast<std::size_t>(i)] = run_suite(names[static_cast<std::size_t>(i)], cfg);
  }
  return report;
}

Json to_json(const VerifyReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    Json j{{"name", s.name}, {"ok", s.ok()}, {"checks", s.checks}, {"failures", s.failures}};
    if (!s.error.empty()) j["error"] = s.error;
    j["counterexamples"] = s.counterexamples;
    suites.push_back(std::move(j));
  }
  return Json{{"p", r.config.p},
              {"k", r.config.k},
              {"seed", r.config.seed},
              {"samples", r.config.samples},
              {"ok", r.ok()},
              {"suites", std::move(suites)}};
}

}  // namespace steenrod
