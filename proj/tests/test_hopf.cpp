#include <gtest/gtest.h>

#include "steenrod/hopf.hpp"
#include "steenrod/random.hpp"

using namespace steenrod;

namespace {

Element gen(const HopfAlgebra& h, const char* name) { return Element::generator(h.algebra(), name); }

Tensor pure(const Element& a, const Element& b) { return Tensor::pure({a, b}); }

// Milnor's formula, written out directly: mu(z_n) = sum_i z_{n-i}^{2^i} (x) z_i.
Tensor milnor_zeta(const HopfAlgebra& h, int n) {
  const auto& a = h.algebra();
  Tensor out(a, 2);
  for (int i = 0; i <= n; ++i) {
    const Element left = n - i == 0 ? Element::one(a) : Element::generator(a, "z" + std::to_string(n - i));
    const Element right = i == 0 ? Element::one(a) : Element::generator(a, "z" + std::to_string(i));
    out = out + pure(frobenius(left, static_cast<unsigned>(i)), right);
  }
  return out;
}

// mu(t_n) = t_n (x) 1 + sum_i x_{n-i}^{p^i} (x) t_i for odd p.
Tensor milnor_tau(const HopfAlgebra& h, int n) {
  const auto& a = h.algebra();
  Tensor out = pure(Element::generator(a, "t" + std::to_string(n)), Element::one(a));
  for (int i = 0; i <= n; ++i) {
    const Element left = n - i == 0 ? Element::one(a) : Element::generator(a, "x" + std::to_string(n - i));
    out = out + pure(frobenius(left, static_cast<unsigned>(i)), Element::generator(a, "t" + std::to_string(i)));
  }
  return out;
}

Tensor milnor_xi(const HopfAlgebra& h, int n) {
  const auto& a = h.algebra();
  Tensor out(a, 2);
  for (int i = 0; i <= n; ++i) {
    const Element left = n - i == 0 ? Element::one(a) : Element::generator(a, "x" + std::to_string(n - i));
    const Element right = i == 0 ? Element::one(a) : Element::generator(a, "x" + std::to_string(i));
    out = out + pure(frobenius(left, static_cast<unsigned>(i)), right);
  }
  return out;
}

}  // namespace

TEST(Coproduct, GeneratorsMatchMilnorFormula) {
  const auto two = HopfAlgebra::dual(2, 4, 0);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(coproduct(two, gen(two, ("z" + std::to_string(n)).c_str())), milnor_zeta(two, n));
  for (unsigned p : {3u, 5u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(coproduct(h, gen(h, ("x" + std::to_string(n)).c_str())), milnor_xi(h, n));
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(coproduct(h, gen(h, ("t" + std::to_string(n)).c_str())), milnor_tau(h, n));
  }
}

TEST(Coproduct, SmallExamples) {
  const auto h = HopfAlgebra::dual(2, 2, 0);
  const auto one = Element::one(h.algebra()), z1 = gen(h, "z1");
  EXPECT_EQ(coproduct(h, z1), pure(z1, one) + pure(one, z1));
  EXPECT_EQ(coproduct(h, one), pure(one, one));
  const auto q = HopfAlgebra::dual(3, 1, 0);
  const auto t0 = gen(q, "t0"), u = Element::one(q.algebra());
  EXPECT_EQ(coproduct(q, t0), pure(u, t0) + pure(t0, u));
}

TEST(Coproduct, IsMultiplicative) {
  Sampler rng(31);
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    for (int s = 0; s < 40; ++s) {
      const auto x = rng.element(h.algebra(), rng.uniform(30)), y = rng.element(h.algebra(), rng.uniform(30));
      EXPECT_EQ(coproduct(h, x * y), coproduct(h, x) * coproduct(h, y));
    }
  }
}

TEST(Antipode, Examples) {
  const auto h = HopfAlgebra::dual(2, 2, 0);
  const auto z1 = gen(h, "z1"), z2 = gen(h, "z2");
  EXPECT_EQ(antipode(h, z1), z1);
  EXPECT_EQ(antipode(h, z2), z2 + z1 * z1 * z1);
  const auto q = HopfAlgebra::dual(3, 1, 0);
  EXPECT_EQ(antipode(q, gen(q, "t0")), -gen(q, "t0"));
}

TEST(Antipode, AxiomOnRandomElements) {
  Sampler rng(32);
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    for (int s = 0; s < 40; ++s) {
      const auto x = rng.element(h.algebra(), rng.uniform(40)) + Element::scalar(h.algebra(), static_cast<long long>(rng.uniform(p)));
      const Tensor mx = coproduct(h, x);
      const auto unit = Element::scalar(h.algebra(), counit(x));
      EXPECT_EQ(multiply_legs(antipode_on_leg(h, mx, 0)), unit);
      EXPECT_EQ(multiply_legs(antipode_on_leg(h, mx, 1)), unit);
      EXPECT_EQ(antipode(h, antipode(h, x)), x);
    }
  }
}

TEST(Coproduct, CoassociativeAndCounitalOnRandomElements) {
  Sampler rng(33);
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    for (int s = 0; s < 30; ++s) {
      const auto x = rng.element(h.algebra(), rng.uniform(40));
      const Tensor mx = coproduct(h, x);
      EXPECT_EQ(coproduct_on_leg(h, mx, 0), coproduct_on_leg(h, mx, 1));
      EXPECT_EQ(as_element(counit_on_leg(mx, 0)), x);
      EXPECT_EQ(as_element(counit_on_leg(mx, 1)), x);
    }
  }
}

TEST(Counit, Examples) {
  const auto h = HopfAlgebra::dual(3, 1, 0);
  const auto& a = h.algebra();
  EXPECT_EQ(counit(Element::one(a)), 1u);
  EXPECT_EQ(counit(gen(h, "x1")), 0u);
  EXPECT_EQ(counit(Element::scalar(a, 3) + gen(h, "x1")), 0u);
  const auto f = HopfAlgebra::dual(5, 1, 0);
  EXPECT_EQ(counit(Element::scalar(f.algebra(), 3) + gen(f, "x1")), 3u);
}

TEST(Checks, AxiomsOnPresets) {
  for (unsigned p : {2u, 3u}) {
    const Degree D = 2 * (static_cast<Degree>(p) * p * p * p - 1);
    std::vector<HopfAlgebra> presets{HopfAlgebra::dual(p, 4, D), HopfAlgebra::quotient(p, 3, D), HopfAlgebra::angle(p, 1, 4, D),
                                     HopfAlgebra::mod_I(p, 1, 4, D), HopfAlgebra::mod_J(p, 1, 4, D)};
    if (p != 2) presets.push_back(HopfAlgebra::quotient_ev(p, 3, D));
    for (const auto& h : presets) {
      EXPECT_TRUE(coassociativity_check(h, D).ok) << h.name();
      EXPECT_TRUE(counit_check(h, D).ok) << h.name();
      EXPECT_TRUE(antipode_check(h, D).ok) << h.name();
      EXPECT_TRUE(antipode_recursion_check(h).ok) << h.name();
    }
  }
}

TEST(Convolution, CounitAndAntipode) {
  Sampler rng(34);
  const auto h = HopfAlgebra::dual(2, 3, 0);
  const auto target = sample_algebra(2, 3);
  for (int s = 0; s < 20; ++s) {
    const AlgebraMap phi = rng.assignment(h, target);
    const AlgebraMap triv = trivial_assignment(h, target);
    EXPECT_EQ(convolution(h, phi, triv).images(), phi.images());
    EXPECT_EQ(convolution(h, triv, phi).images(), phi.images());
    EXPECT_EQ(convolution(h, phi, precompose_antipode(h, phi)).images(), triv.images());
  }
}

TEST(Theta, Examples) {
  const auto h = HopfAlgebra::dual(2, 2, 0);
  const auto target = make_algebra(2, {{"a", 1, kNoCap}, {"b", 3, kNoCap}});
  const auto a = Element::generator(target, "a");
  const AlgebraMap phi = make_assignment(h, target, {a, Element::zero(target)});
  const auto g = theta(h, phi, 2);
  EXPECT_EQ(g.coeff(1), a);
  EXPECT_TRUE(g.coeff(2).is_zero());
  EXPECT_TRUE(theta(h, trivial_assignment(h, target), 2).is_identity());
  EXPECT_TRUE(rho_diagram_check(h, trivial_assignment(h, target), 2));
}

TEST(Theta, TurnsConvolutionIntoComposition) {
  Sampler rng(35);
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    const auto target = sample_algebra(p, 3);
    for (int s = 0; s < 20; ++s) {
      const AlgebraMap phi = rng.assignment(h, target), psi = rng.assignment(h, target);
      EXPECT_EQ(theta(h, convolution(h, phi, psi), 3), compose(theta(h, psi, 3), theta(h, phi, 3)));
    }
  }
}

TEST(RhoDiagram, SingleGenerator) {
  const auto h = HopfAlgebra::dual(2, 2, 0);
  const auto target = make_algebra(2, {{"a", 1, kNoCap}, {"b", 3, kNoCap}});
  const auto a = Element::generator(target, "a");
  const AlgebraMap phi = make_assignment(h, target, {a, Element::zero(target)});
  const auto [up, restricted] = restrict_up(h, phi);
  EXPECT_EQ(restricted.images().front(), a * a);
  EXPECT_EQ(rho(theta(h, phi, 2)).coeff(1), a * a);
  EXPECT_TRUE(rho_diagram_check(h, phi, 2));
}

TEST(RhoDiagram, RandomAssignments) {
  Sampler rng(36);
  for (unsigned p : {2u, 3u}) {
    const auto target = sample_algebra(p, 3);
    for (int k = 0; k <= 2; ++k) {
      const auto h = k == 0 ? HopfAlgebra::dual(p, 3, 0) : HopfAlgebra::angle(p, k, 3, 0);
      for (int s = 0; s < 10; ++s) EXPECT_TRUE(rho_diagram_check(h, rng.assignment(h, target), 3)) << h.name();
    }
  }
}

TEST(Cocommutativity, Witness) {
  const auto h = HopfAlgebra::dual(3, 2, 0);
  const auto x1 = gen(h, "x1"), t0 = gen(h, "t0");
  const Tensor want = pure(x1, t0) - pure(t0, x1);
  bool found = false;
  for (const auto& [name, defect] : cocommutativity_defect(h, 5)) {
    if (name != "t1") continue;
    found = true;
    EXPECT_EQ(defect, want);
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(cocommutativity_check(h, 5).ok);
  EXPECT_TRUE(cocommutativity_check(HopfAlgebra::mod_I(3, 0, 3, 0), 200).ok);
  EXPECT_TRUE(cocommutativity_check(HopfAlgebra::ground(2), 10).ok);
}

TEST(Primitivity, Presets) {
  for (unsigned p : {2u, 3u}) {
    for (int k = 0; k <= 2; ++k) {
      const auto q = HopfAlgebra::mod_I(p, k, 4, 0);
      EXPECT_TRUE(primitivity_check(q).ok) << q.name();
      EXPECT_TRUE(monogenic_check(q).ok) << q.name();
    }
    EXPECT_FALSE(primitivity_check(HopfAlgebra::dual(p, 3, 0)).ok);
    EXPECT_TRUE(primitivity_check(HopfAlgebra::ground(p)).ok);
  }
}

TEST(HopfIdeal, Examples) {
  const auto h = HopfAlgebra::dual(2, 4, 15);
  std::vector<Element> squares;
  for (int i = 1; i <= 4; ++i) squares.push_back(power(gen(h, ("z" + std::to_string(i)).c_str()), 2));
  EXPECT_TRUE(check_hopf_ideal(h, squares, 15).ok);
  EXPECT_FALSE(check_hopf_ideal(h, {gen(h, "z2")}, 15).ok);
  EXPECT_TRUE(check_hopf_ideal(h, {}, 15).ok);
  EXPECT_THROW(check_hopf_ideal(h, {gen(h, "z1") + gen(h, "z1") * gen(h, "z1")}, 15), std::invalid_argument);
}

TEST(QuotientMaps, CommuteWithCoproduct) {
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 3, 0);
    EXPECT_TRUE(quotient_map_check(h, HopfAlgebra::quotient(p, 2, 0), 200).ok);
    EXPECT_TRUE(quotient_map_check(h, HopfAlgebra::mod_J(p, 1, 3, 0), 200).ok);
  }
}

TEST(Presets, FromName) {
  EXPECT_EQ(HopfAlgebra::from_name("A(n)", 2, 0, 0, 2, 0).name(), "A(2)");
  EXPECT_EQ(HopfAlgebra::from_name("A_mod_I(k)", 3, 3, 0, 0, 1).name(), "A_mod_I(1)");
  EXPECT_THROW(HopfAlgebra::from_name("A_nope", 2, 3, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(HopfAlgebra::quotient_ev(2, 2, 0), std::invalid_argument);
}

namespace {

// A_dual with t0 dropped and x_i^p = 0 for i < n (z_i^2 = 0 for p = 2).
PresentationPtr killed_below(const HopfAlgebra& h, int n) {
  const unsigned p = h.prime();
  const std::string x = p == 2 ? "z" : "x";
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < h.algebra()->size(); ++i) {
    Generator g = h.algebra()->generator(i);
    if (g.name == "t0") continue;
    for (int j = 1; j < n; ++j) {
      if (g.name == x + std::to_string(j)) g.cap = p;
    }
    gens.push_back(g);
  }
  return make_algebra(p, gens);
}

Tensor defect_of(const HopfAlgebra& h, const std::string& name) {
  for (auto& [n, d] : cocommutativity_defect(h, 1000)) {
    if (n == name) return d;
  }
  throw std::logic_error("no generator " + name);
}

}  // namespace

TEST(Cocommutativity, KillingChainIsForced) {
  for (unsigned p : {2u, 3u}) {
    const auto h = HopfAlgebra::dual(p, 4, 0);
    const std::string x = p == 2 ? "z" : "x";
    if (p != 2) {
      const Tensor d = defect_of(h, "t1");
      EXPECT_FALSE(d.is_zero());
      EXPECT_TRUE(transport(d, killed_below(h, 1)).is_zero());
    }
    for (int n = 1; n <= 3; ++n) {
      const auto q = killed_below(h, n);
      const Element xn = power(Element::generator(q, x + std::to_string(n)), p);
      const Element x1 = Element::generator(q, x + "1");
      const Tensor d = transport(defect_of(h, x + std::to_string(n + 1)), q);
      EXPECT_EQ(d, pure(xn, x1) - pure(x1, xn)) << "p=" << p << " n=" << n;
      EXPECT_FALSE(d.is_zero());
    }
    const auto all = killed_below(h, 5);
    for (auto& [name, d] : cocommutativity_defect(h, 1000)) {
      if (name == "t0") continue;
      EXPECT_TRUE(transport(d, all).is_zero()) << "p=" << p << " " << name;
    }
  }
}
