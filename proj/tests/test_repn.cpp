#include <gtest/gtest.h>

#include <set>

#include "klein5/repn.hpp"

using namespace klein5;

namespace {

// Residue map recomputed from coordinates: 1 ↦ 1, ε ↦ 2, i ↦ r, iε ↦ 2r.
int residue_oracle(const OrderElement& x, int r) {
  long acc = 0;
  const long imgs[4] = {1, 2, r, 2L * r};
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& c = x.coord(k);
    mpz_class num = c.num() % 5;
    mpz_class den = c.den() % 5;
    if (num < 0) num += 5;
    long inv = 1;
    for (long t = 1; t < 5; ++t) {
      if ((den.get_si() * t) % 5 == 1) inv = t;
    }
    acc += num.get_si() * inv * imgs[k];
  }
  return static_cast<int>(((acc % 5) + 5) % 5);
}

}  // namespace

TEST(Repn, VarpiCoordinates) {
  const OrderElement w = varpi();
  EXPECT_EQ(w, order_element(Rational(-1), Rational(0), Rational(1), Rational(1)));
  EXPECT_EQ(residue_hom(w), 0);
  EXPECT_EQ(residue_hom(varpi(Branch::minus_i), Branch::minus_i), 0);
}

TEST(Repn, ResidueIsRingHom) {
  // additive and multiplicative on a sample, and kills ε² + ε − 1
  const std::vector<OrderElement> xs{eps(), imag(), varpi(), order_element(Rational(1, 2), Rational(3), Rational(-1), Rational(2)),
                                     order_element(Rational(7), Rational(-2, 3), Rational(1, 4), Rational(0))};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      EXPECT_EQ(residue_hom(x * y), (residue_hom(x) * residue_hom(y)) % 5);
      EXPECT_EQ(residue_hom(x + y), (residue_hom(x) + residue_hom(y)) % 5);
    }
    EXPECT_EQ(residue_hom(x), residue_oracle(x, 2));
    EXPECT_EQ(residue_hom(x, Branch::minus_i), residue_oracle(x, 3));
  }
  EXPECT_EQ(residue_hom(eps() * eps() + eps() - order_element(Rational(1), Rational(0), Rational(0), Rational(0))), 0);
}

TEST(Repn, VarpiIdentities) {
  const auto r = check_varpi_identities();
  EXPECT_TRUE(r.two_minus_eps);
  EXPECT_TRUE(r.two_minus_omega);
  EXPECT_TRUE(r.sqrt5);
  EXPECT_TRUE(r.residues_vanish);
  EXPECT_TRUE(check_varpi_identities(Branch::minus_i).pass());
}

TEST(Repn, VarpiIdentityMutation) { EXPECT_FALSE(check_varpi_identities(Branch::i, Rational(1)).two_minus_eps); }

TEST(Repn, GeneratorsReduce) {
  const auto g = pi_generators();
  EXPECT_EQ(rep_det(g.S), order_element(Rational(1), Rational(0), Rational(0), Rational(0)));
  EXPECT_EQ(reduce_matrix(g.S), (F5Matrix{1, 1, 0, 1}));
  EXPECT_EQ(reduce_matrix(g.T), (F5Matrix{0, 4, 1, 0}));
  EXPECT_EQ(reduce_matrix(pi_U(2, 3)), (F5Matrix{2, 0, 0, 3}));
  EXPECT_EQ(reduce_matrix(pi_U(4, 1)), (F5Matrix{4, 0, 0, 1}));
  EXPECT_THROW(pi_U(2, 1), std::invalid_argument);
}

TEST(Repn, GeneratorOrders) {
  const auto g = pi_generators();
  const RepMatrix I = rep_identity();
  EXPECT_TRUE(rep_equal(rep_pow(g.S, 5), I));
  EXPECT_FALSE(rep_equal(g.S, I));
  EXPECT_TRUE(rep_equal(rep_pow(g.T, 4), I));
  EXPECT_FALSE(rep_equal(rep_pow(g.T, 2), I));
  EXPECT_TRUE(rep_equal(rep_pow(pi_U(2, 3), 4), I));
}

TEST(Repn, GroupEnumeration) {
  const auto& grp = enumerate_group();
  EXPECT_EQ(grp.elements.size(), 240u);
  std::set<F5Matrix> uniq(grp.elements.begin(), grp.elements.end());
  EXPECT_EQ(uniq.size(), 240u);
  for (const auto& m : grp.elements) {
    const int d = f5_det(m);
    EXPECT_TRUE(d == 1 || d == 4) << to_string(m);
  }
  // brute force: every matrix with square determinant is reached
  std::size_t count = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          const F5Matrix m{a, b, c, d};
          if (f5_det(m) == 1 || f5_det(m) == 4) {
            ++count;
            EXPECT_NO_THROW(group_index(m));
          }
        }
  EXPECT_EQ(count, 240u);
  EXPECT_THROW(group_index(F5Matrix{2, 0, 0, 1}), std::out_of_range);
}

TEST(Repn, HomomorphismSampled) {
  const auto r = check_homomorphism(200, 11, false);
  EXPECT_EQ(r.pairs, 200u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Repn, HomomorphismExhaustive) {
  const auto r = check_homomorphism(0, 0, true);
  EXPECT_EQ(r.pairs, 240u * 240u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Repn, Relations) {
  for (Branch b : {Branch::i, Branch::minus_i}) {
    const auto r = check_relations(b);
    EXPECT_TRUE(r.orders);
    EXPECT_TRUE(r.relation1);
    EXPECT_TRUE(r.relation2);
    EXPECT_TRUE(r.relation3);
    EXPECT_TRUE(r.relation2_fails_off_group);
  }
}

TEST(Repn, RelationTwoFailsForNonSquare) {
  const auto g = pi_generators();
  const RepMatrix U = pi_U_unchecked(2, 1);
  EXPECT_FALSE(rep_equal(rep_mul(rep_mul(U, g.S), rep_inverse(U)), rep_pow(g.S, 2)));
}

TEST(Repn, CongruenceAndFaithfulness) {
  const auto r = check_congruence();
  EXPECT_EQ(r.elements, 240u);
  EXPECT_EQ(r.distinct_images, 240u);
  EXPECT_TRUE(r.reduces_to_g);
  EXPECT_FALSE(r.literal_identity);
  EXPECT_TRUE(r.dyadic);
  EXPECT_TRUE(r.det_compatible);
  EXPECT_TRUE(r.teichmuller);
  EXPECT_TRUE(r.pass());
}

TEST(Repn, LiftMatchesWordProduct) {
  const F5Matrix g{1, 1, 1, 2};
  ASSERT_EQ(f5_det(g), 1);
  const RepMatrix m = lift_pi(g);
  EXPECT_EQ(reduce_matrix(m), g);
}
