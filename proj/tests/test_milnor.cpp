#include <gtest/gtest.h>

#include "steenrod/kernels.hpp"
#include "steenrod/milnor.hpp"

using namespace steenrod;

TEST(Seq, TrailingZerosAndOrder) {
  EXPECT_EQ(Seq({1, 2, 0, 0}), Seq({1, 2}));
  EXPECT_EQ(Seq({1, 2})[2], 2u);
  EXPECT_EQ(Seq({1, 2})[5], 0u);
  EXPECT_TRUE(seq_leq(Seq({1, 2}), Seq({2, 2})));
  EXPECT_FALSE(seq_leq(Seq({3}), Seq({2, 5})));
  EXPECT_TRUE(seq_leq(Seq({4, 0, 1}), Seq({4, 0, 1})));
  EXPECT_EQ(Seq({1}) + Seq({0, 3}), Seq({1, 3}));
  EXPECT_THROW(SeqB({2}), std::invalid_argument);
  EXPECT_EQ(SeqB::unit(1), SeqB({0, 1}));
  EXPECT_TRUE(seqb_leq(SeqB({1}), SeqB({1, 1})));
}

TEST(MonomialOf, Examples) {
  const auto two = HopfAlgebra::dual(2, 3, 0);
  EXPECT_EQ(monomial_of(SeqB(), Seq(), two), Element::one(two.algebra()));
  const auto z1 = Element::generator(two.algebra(), "z1"), z2 = Element::generator(two.algebra(), "z2");
  EXPECT_EQ(monomial_of(SeqB(), Seq({2, 1}), two), z1 * z1 * z2);
  const auto three = HopfAlgebra::dual(3, 2, 0);
  const auto t1 = Element::generator(three.algebra(), "t1"), x1 = Element::generator(three.algebra(), "x1");
  EXPECT_EQ(monomial_of(SeqB::unit(1), Seq({1}), three), t1 * x1);
  const auto t0 = Element::generator(three.algebra(), "t0");
  EXPECT_EQ(monomial_of(SeqB({1, 1}), Seq(), three), t0 * t1);
  EXPECT_THROW(monomial_of(SeqB({1}), Seq(), two), std::invalid_argument);
}

TEST(JBasis, Examples) {
  EXPECT_TRUE(in_J_basis(SeqB(), Seq({2}), 0, 2));
  EXPECT_FALSE(in_J_basis(SeqB(), Seq({3, 1}), 1, 2));
  EXPECT_TRUE(in_J_basis(SeqB({1}), Seq(), 0, 3));
  EXPECT_FALSE(in_J_basis(SeqB({1}), Seq(), 1, 3));
  EXPECT_TRUE(in_J_basis(SeqB(), Seq({0, 9}), 1, 3));
}

TEST(DualSpan, Examples) {
  EXPECT_TRUE(in_dual_span(DualSymbol::sq(Seq({1, 1})), 0));
  EXPECT_FALSE(in_dual_span(DualSymbol::qp(3, SeqB({1}), Seq()), 0));
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(in_dual_span(DualSymbol::sq(Seq()), k));
  EXPECT_EQ(dual(2, SeqB(), Seq({2, 1})), DualSymbol::sq(Seq({2, 1})));
}

TEST(Kronecker, DualBasis) {
  const auto sq = DualSymbol::sq(Seq({2, 1}));
  EXPECT_EQ(kronecker_pair(sq, SeqB(), Seq({2, 1})), 1u);
  EXPECT_EQ(kronecker_pair(sq, SeqB(), Seq({1, 2})), 0u);
  const auto qp = DualSymbol::qp(3, SeqB({0, 1}), Seq({1}));
  EXPECT_EQ(kronecker_pair(qp, SeqB({0, 1}), Seq({1})), 1u);
  const auto h = HopfAlgebra::dual(3, 2, 0);
  const auto x = monomial_of(SeqB({0, 1}), Seq({1}), h).scaled(2) + monomial_of(SeqB(), Seq({2}), h);
  EXPECT_EQ(kronecker_pair(qp, x, h), 2u);
}

TEST(Complementarity, ExhaustiveSmallIndex) {
  for (unsigned p : {2u, 3u}) {
    for (int k = 0; k <= 2; ++k) {
      const auto t = milnor_threshold(p, k);
      for (std::uint32_t r1 = 0; r1 < milnor_threshold(p, k + 1); ++r1) {
        for (std::uint32_t r2 = 0; r2 < milnor_threshold(p, k + 1); ++r2) {
          for (std::uint32_t e0 = 0; e0 <= (p == 2 ? 0u : 1u); ++e0) {
            const SeqB E({e0});
            const Seq R({r1, r2});
            // Independent reading: zeta(R) or tau(E)xi(R) is in J exactly when
            // some exponent reaches p^{k+1}, or tau_0 divides it with k = 0.
            const bool want_j = r1 >= t || r2 >= t || (p != 2 && k == 0 && e0 == 1);
            EXPECT_EQ(in_J_basis(E, R, k, p), want_j);
            EXPECT_NE(in_J_basis(E, R, k, p), in_dual_span(dual(p, E, R), k));
          }
        }
      }
    }
  }
}

TEST(Complementarity, SweepKernels) {
  for (unsigned p : {2u, 3u}) {
    for (int k = 0; k <= 1; ++k) {
      const auto serial = kernels::complementarity_sweep_serial(p, k, 3);
      EXPECT_TRUE(serial.ok()) << serial.first_failure;
      EXPECT_EQ(kernels::complementarity_sweep_parallel(p, k, 3), serial);
    }
  }
}
