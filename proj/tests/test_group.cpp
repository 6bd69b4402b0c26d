#include <gtest/gtest.h>

#include "steenrod/group.hpp"
#include "steenrod/random.hpp"

using namespace steenrod;

namespace {

using Poly = std::vector<Element>;  // coefficient of X^j at position j

Poly multiply(const Poly& f, const Poly& g, std::size_t top) {
  Poly out(top + 1, Element::zero(f.front().algebra_ptr()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size() && i + j <= top; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

// b(a(X)) by literal substitution, every power expanded by multiplication.
Poly substitute(const GroupElement& a, const GroupElement& b) {
  const std::size_t p = a.prime();
  std::size_t top = 1;
  for (int i = 0; i < a.truncation(); ++i) top *= p;
  const auto& alg = a.algebra_ptr();
  Poly ax(top + 1, Element::zero(alg));
  for (int i = 0, e = 1; i <= a.truncation(); ++i, e *= static_cast<int>(p)) ax[static_cast<std::size_t>(e)] = a.coeff(i);
  Poly out(top + 1, Element::zero(alg));
  Poly power = ax;
  for (int j = 0; j <= b.truncation(); ++j) {
    for (std::size_t t = 0; t <= top; ++t) out[t] += b.coeff(j) * power[t];
    Poly next = power;
    for (std::size_t r = 1; r < p; ++r) next = multiply(next, power, top);
    power = next;
  }
  return out;
}

PresentationPtr quartic() { return make_algebra(2, {{"a", 1, 4}}); }

GroupElement series(const PresentationPtr&, std::vector<Element> coeffs) { return GroupElement(std::move(coeffs)); }

}  // namespace

TEST(Identity, Shapes) {
  const auto two = steenrod_dual(2, 3);
  const auto id2 = GroupElement::identity(two, 3);
  EXPECT_TRUE(id2.is_identity());
  EXPECT_EQ(id2.truncation(), 3);
  const auto three = adjoin_epsilon(steenrod_dual(3, 2));
  const auto id3 = GroupElement::identity(three, 2);
  EXPECT_EQ(id3.coeff(0), Element::one(three));
  EXPECT_TRUE(id3.coeff(1).is_zero());
}

TEST(Compose, HandExpansion) {
  const auto A = quartic();
  const auto a = Element::generator(A, "a"), one = Element::one(A), zero = Element::zero(A);
  const auto x = series(A, {one, a, zero});
  const auto y = compose(x, x);
  EXPECT_EQ(y.coeff(0), one);
  EXPECT_TRUE(y.coeff(1).is_zero());
  EXPECT_EQ(y.coeff(2), a * a * a);
}

TEST(Compose, MatchesSubstitution) {
  Sampler rng(21);
  const std::vector<std::pair<unsigned, int>> grid{{2, 3}, {3, 2}, {5, 1}};
  for (const auto& [p, k] : grid) {
    const auto A = sample_algebra(p, k);
    for (int s = 0; s < 25; ++s) {
      const auto x = rng.group_element(A, k), y = rng.group_element(A, k);
      const auto z = compose(x, y);
      const Poly want = substitute(x, y);
      std::size_t e = 1;
      int i = 0;
      for (std::size_t t = 0; t < want.size(); ++t) {
        if (t == e) {
          EXPECT_EQ(want[t], z.coeff(i++));
          e *= p;
        } else {
          EXPECT_TRUE(want[t].is_zero()) << "p=" << p << " X^" << t;
        }
      }
    }
  }
}

TEST(Compose, LeadingPatternWhenLowCoefficientsVanish) {
  Sampler rng(4);
  const auto A = sample_algebra(3, 3);
  for (int s = 0; s < 40; ++s) {
    auto ac = rng.group_element(A, 3).coeffs();
    ac[1] = Element::zero(A);
    const GroupElement x(ac);
    const auto y = rng.group_element(A, 3);
    const auto z = compose(x, y);
    EXPECT_EQ(z.coeff(0), x.coeff(0) * y.coeff(0));
    EXPECT_EQ(z.coeff(1), y.coeff(1));
    EXPECT_EQ(z.coeff(2), x.coeff(2) * y.coeff(0) + y.coeff(2));
  }
}

TEST(Invert, HandExpansion) {
  const auto A = quartic();
  const auto a = Element::generator(A, "a"), one = Element::one(A), zero = Element::zero(A);
  const auto x = series(A, {one, a, zero});
  const auto want = series(A, {one, a, a * a * a});
  EXPECT_EQ(invert_recursive(x), want);
  EXPECT_EQ(invert_closed(x), want);
  EXPECT_TRUE(invert_closed(GroupElement::identity(A, 2)).is_identity());
}

TEST(Invert, FirstCoefficient) {
  Sampler rng(8);
  const auto A = sample_algebra(5, 2);
  for (int s = 0; s < 30; ++s) {
    const auto x = rng.group_element(A, 2);
    const auto y = invert(x);
    EXPECT_EQ(y.coeff(1), -(invert(GroupElement::unchecked({x.coeff(0)}, x.flavor())).coeff(0) * x.coeff(1)));
  }
}

TEST(Invert, SecondCoefficientOfClosedForm) {
  Sampler rng(10);
  const auto A = sample_algebra(3, 2);
  for (int s = 0; s < 30; ++s) {
    const auto x = rng.group_element(A, 2);
    const Element a0inv = invert(GroupElement::unchecked({x.coeff(0)}, x.flavor())).coeff(0);
    const Element want = a0inv * (power(x.coeff(1), 4) - x.coeff(2));
    EXPECT_EQ(invert_closed(x).coeff(2), want);
  }
}

TEST(Invert, SplitOnScalarSeries) {
  const auto A = adjoin_epsilon(steenrod_dual(3, 1));
  const auto c = Element::generator(A, "t0"), eps = Element::generator(A, kEpsilonName);
  const auto one = Element::one(A), zero = Element::zero(A);
  const auto x = series(A, {one + c * eps, zero});
  EXPECT_EQ(invert_split(x), series(A, {one - c * eps, zero}));
  EXPECT_THROW(invert_split(GroupElement::identity(steenrod_dual(2, 1), 1)), std::invalid_argument);
}

TEST(Invert, MethodsAgree) {
  Sampler rng(12);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int k = 1; k <= 5; ++k) {
      const auto A = sample_algebra(p, k);
      for (int s = 0; s < 20; ++s) {
        const auto x = rng.group_element(A, k);
        const auto r = invert_recursive(x);
        EXPECT_EQ(invert_closed(x), r);
        if (p != 2) EXPECT_EQ(invert_split(x), r);
        EXPECT_TRUE(compose(x, r).is_identity());
        EXPECT_TRUE(compose(r, x).is_identity());
      }
    }
  }
}

TEST(Commutator, WithIdentity) {
  Sampler rng(14);
  const auto A = sample_algebra(3, 3);
  const auto x = rng.group_element(A, 3);
  EXPECT_TRUE(commutator(x, GroupElement::identity(A, 3)).is_identity());
}

TEST(Commutator, MatchesDefinition) {
  Sampler rng(15);
  const auto A = sample_algebra(3, 3);
  for (int s = 0; s < 20; ++s) {
    const auto x = rng.group_element(A, 3), y = rng.group_element(A, 3);
    EXPECT_EQ(commutator(x, y), compose(compose(invert(x), invert(y)), compose(x, y)));
  }
}

TEST(Commutator, OddElementsCommute) {
  const auto A = adjoin_epsilon(steenrod_dual(3, 2));
  Sampler rng(16);
  for (int s = 0; s < 30; ++s) {
    std::vector<Element> xc, yc;
    for (int i = 0; i <= 2; ++i) {
      const Degree d = i == 0 ? 1 : 2 * (static_cast<Degree>(i == 1 ? 3 : 9) - 1) + 1;
      const auto eps = Element::generator(A, kEpsilonName);
      xc.push_back((i == 0 ? Element::one(A) : Element::zero(A)) + rng.element(A, d, true) * eps);
      yc.push_back((i == 0 ? Element::one(A) : Element::zero(A)) + rng.element(A, d, true) * eps);
    }
    const GroupElement x(xc), y(yc);
    ASSERT_TRUE(in_G_od(x) && in_G_od(y));
    EXPECT_TRUE(commutator(x, y).is_identity());
    EXPECT_TRUE(group_power(x, 3).is_identity());
  }
}

TEST(CommutatorLeading, SmallExample) {
  const auto A = make_algebra(2, {{"a", 1, 2}, {"b", 3, 2}});
  const auto a = Element::generator(A, "a"), b = Element::generator(A, "b");
  const auto one = Element::one(A), zero = Element::zero(A);
  const auto x = series(A, {one, a, zero}), y = series(A, {one, zero, b});
  const auto got = commutator(x, y);
  const auto pred = commutator_leading(x, y, CommutatorCase::kBothGeneric, 0);
  EXPECT_EQ(pred.first_index, 1);
  EXPECT_EQ(got.coeff(1), pred.first);
  EXPECT_EQ(got.coeff(2), pred.second);
}

TEST(CommutatorLeading, CaseOneFirstCoefficient) {
  Sampler rng(17);
  const auto A = sample_algebra(3, 3);
  for (int s = 0; s < 30; ++s) {
    const auto x = rng.group_element(A, 3), y = rng.group_element(A, 3);
    const auto pred = commutator_leading(x, y, CommutatorCase::kBothGeneric, 0);
    const auto one = Element::one(A);
    EXPECT_EQ(pred.first, x.coeff(1) * (y.coeff(0) - one) + (one - x.coeff(0)) * y.coeff(1));
    EXPECT_EQ(commutator(x, y).coeff(1), pred.first);
  }
}

TEST(CommutatorLeading, CaseThreeVanishesForTwo) {
  Sampler rng(18);
  const auto A = sample_algebra(2, 4);
  for (int s = 0; s < 30; ++s) {
    auto ac = rng.group_element(A, 4).coeffs(), bc = rng.group_element(A, 4).coeffs();
    ac[1] = ac[2] = bc[1] = Element::zero(A);
    const auto pred = commutator_leading(GroupElement(ac), GroupElement(bc), CommutatorCase::kBothDeep, 2);
    EXPECT_TRUE(pred.first.is_zero());
    EXPECT_TRUE(pred.second.is_zero());
  }
}

TEST(CommutatorLeading, RejectsViolatedHypotheses) {
  const auto A = quartic();
  const auto a = Element::generator(A, "a"), one = Element::one(A), zero = Element::zero(A);
  const auto x = series(A, {one, a, zero, zero});
  EXPECT_THROW(commutator_leading(x, x, CommutatorCase::kLeftDeep, 1), std::invalid_argument);
  const auto y = series(A, {one, zero, zero, zero});
  EXPECT_THROW(commutator_leading(y, x, CommutatorCase::kBothDeep, 1), std::invalid_argument);
}

TEST(Project, TruncatesAndIsHomomorphism) {
  Sampler rng(19);
  const auto A = sample_algebra(3, 3);
  for (int s = 0; s < 20; ++s) {
    const auto x = rng.group_element(A, 3), y = rng.group_element(A, 3);
    EXPECT_EQ(project(x, 3), x);
    const auto px = project(x, 1);
    EXPECT_EQ(px.truncation(), 1);
    EXPECT_EQ(px.coeff(1), x.coeff(1));
    EXPECT_EQ(project(compose(x, y), 2), compose(project(x, 2), project(y, 2)));
  }
  EXPECT_THROW(project(GroupElement::identity(A, 1), 2), std::invalid_argument);
}

TEST(HalfQuotient, DropsTopEpsilonPart) {
  Sampler rng(20);
  const auto A = sample_algebra(3, 2);
  for (int s = 0; s < 20; ++s) {
    const auto x = rng.group_element(A, 2);
    const auto q = half_quotient(x);
    EXPECT_EQ(q.coeff(2), eps_reduce(x.coeff(2)));
    EXPECT_EQ(q.coeff(1), x.coeff(1));
    EXPECT_EQ(half_quotient(q), q);
  }
  const auto B = sample_algebra(2, 2);
  const auto y = rng.group_element(B, 2);
  EXPECT_EQ(half_quotient(y), y);
}

TEST(StarProduct, GroupLaws) {
  Sampler rng(22);
  const auto A = sample_algebra(3, 2);
  auto draw = [&] { return half_quotient(rng.group_element(A, 2)); };
  for (int s = 0; s < 20; ++s) {
    const auto x = draw(), y = draw(), z = draw();
    EXPECT_EQ(star_product(GroupElement::identity(A, 2), x), x);
    EXPECT_EQ(star_product(star_product(x, y), z), star_product(x, star_product(y, z)));
    EXPECT_EQ(star_inverse(x), half_quotient(invert(x)));
    EXPECT_TRUE(star_product(x, star_inverse(x)).is_identity());
  }
}

TEST(Filtration, Examples) {
  const auto A = adjoin_epsilon(steenrod_dual(3, 2));
  EXPECT_EQ(filtration_level(GroupElement::identity(A, 2)), FiltrationLevel::top());
  const auto t2 = Element::generator(A, "t2"), t0 = Element::generator(A, "t0");
  const auto eps = Element::generator(A, kEpsilonName), one = Element::one(A), zero = Element::zero(A);
  const auto half = series(A, {one, zero, t2 * eps});
  EXPECT_EQ(filtration_level(half), FiltrationLevel::twice(3));
  EXPECT_DOUBLE_EQ(filtration_level(half).value(), 1.5);
  EXPECT_EQ(filtration_level(series(A, {one + t0 * eps, zero, zero})), FiltrationLevel::bottom());
  const auto B = steenrod_dual(2, 2);
  const auto z2 = Element::generator(B, "z2");
  const auto two = GroupElement({Element::one(B), Element::zero(B), z2});
  EXPECT_EQ(filtration_level(two), FiltrationLevel::twice(2));
}

TEST(Gpn, Membership) {
  const auto A = steenrod_quotient(2, 2);
  const auto z1 = Element::generator(A, "z1");
  EXPECT_TRUE(in_Gpn(GroupElement::identity(A, 3), 2));
  EXPECT_TRUE(in_Gpn(GroupElement({Element::one(A), z1, Element::zero(A)}), 2));
  const auto B = steenrod_dual(2, 3);
  const auto z3 = Element::generator(B, "z3");
  EXPECT_FALSE(in_Gpn(GroupElement({Element::one(B), Element::zero(B), Element::zero(B), z3}), 2));
}

TEST(PiEv, HomomorphismWithOddKernel) {
  Sampler rng(23);
  const auto A = sample_algebra(3, 3);
  for (int s = 0; s < 30; ++s) {
    const auto x = rng.group_element(A, 3), y = rng.group_element(A, 3);
    EXPECT_EQ(pi_ev(compose(x, y)), compose(pi_ev(x), pi_ev(y)));
    EXPECT_TRUE(in_G_ev(pi_ev(x)));
    EXPECT_EQ(pi_ev(pi_ev(x)), pi_ev(x));
    const auto kernel_part = compose(x, invert(pi_ev(x)));
    EXPECT_TRUE(in_G_od(kernel_part));
    EXPECT_TRUE(pi_ev(kernel_part).is_identity());
  }
}

TEST(Rho, HomomorphismAndKernel) {
  Sampler rng(24);
  for (unsigned p : {2u, 3u}) {
    const auto A = sample_algebra(p, 3);
    EXPECT_TRUE(rho(GroupElement::identity(A, 3)).is_identity());
    for (int s = 0; s < 20; ++s) {
      const auto x = rng.group_element(A, 3), y = rng.group_element(A, 3);
      EXPECT_EQ(rho(compose(x, y)), compose(rho(x), rho(y)));
    }
  }
  const auto B = make_algebra(2, {{"z1", 1, 2}});
  const GroupElement x({Element::one(B), Element::generator(B, "z1")});
  EXPECT_TRUE(in_abelian_kernel(x));
  EXPECT_TRUE(rho(x).is_identity());
  EXPECT_TRUE(in_abelian_kernel(GroupElement::identity(B, 1)));
}

TEST(Rho, KernelIsAbelian) {
  Sampler rng(25);
  const auto A = adjoin_epsilon(steenrod_quotient(3, 1));
  int seen = 0;
  for (int s = 0; s < 200 && seen < 20; ++s) {
    const auto x = rng.group_element(A, 2), y = rng.group_element(A, 2);
    if (!in_abelian_kernel(x) || !in_abelian_kernel(y)) continue;
    ++seen;
    EXPECT_TRUE(commutator(x, y).is_identity());
  }
  EXPECT_GT(seen, 0);
}
