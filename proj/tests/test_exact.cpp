#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "klein5/algebra.hpp"
#include "klein5/poly.hpp"
#include "klein5/ratfunc.hpp"
#include "klein5/resultant.hpp"

using namespace klein5;

namespace {

using PQ = Poly<Rational>;

Rational rnd_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

PQ rnd_poly(std::mt19937_64& rng, int deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rnd_rational(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return PQ(c);
}

// Leibniz expansion; only used on small matrices as an oracle.
template <class D>
D leibniz_det(const std::vector<std::vector<D>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  D total = zero_like(m[0][0]);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    D term = one_like(m[0][0]);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total = (inversions % 2) ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gaussian elimination over Q, a second oracle for larger sizes.
Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

unsigned long long isqrt_oracle(unsigned long long n) {
  unsigned long long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

AlgQ rnd_element(std::mt19937_64& rng, const AlgebraPtr<Rational>& alg) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < alg->dim(); ++k) c.push_back(rnd_rational(rng));
  return AlgQ::from_rationals(alg, c);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("16/5"), Rational(16, 5));
  EXPECT_EQ(Rational::parse("-16").to_string(), "-16");
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse(" -25/4 ").to_string(), "-25/4");
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, CanonicalForm) {
  const Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, SqrtExact) {
  EXPECT_EQ(isqrt_oracle(1024000000ULL), 32000ULL);
  EXPECT_EQ(isqrt_oracle(589824ULL), 768ULL);
  EXPECT_EQ(sqrt_exact(Rational(1024000000)), Rational(32000));
  EXPECT_EQ(sqrt_exact(Rational(589824)), Rational(768));
  EXPECT_FALSE(sqrt_exact(Rational(2)).has_value());
  EXPECT_FALSE(sqrt_exact(Rational(-4)).has_value());
  EXPECT_EQ(sqrt_exact(Rational(9, 16)), Rational(3, 4));
  EXPECT_EQ(root_exact(Rational(-32, 243), 5), Rational(-2, 3));
}

TEST(Rational, ValuationAndReduction) {
  EXPECT_EQ(valuation(Rational(3, 5), 5), -1);
  EXPECT_EQ(valuation(Rational(50), 5), 2);
  EXPECT_THROW(valuation(Rational(0), 5), std::domain_error);
  EXPECT_EQ(reduce_mod(Rational(4, 9), 5), 1UL);
  EXPECT_EQ(reduce_mod(Rational(-1), 5), 4UL);
  EXPECT_THROW(reduce_mod(Rational(1, 5), 5), std::domain_error);
}

TEST(FieldTower, Dimensions) {
  EXPECT_EQ(field_tower<Rational>(FieldName::Q)->dim(), 1U);
  EXPECT_EQ(field_tower<Rational>(FieldName::Qsqrt5)->dim(), 2U);
  EXPECT_EQ(field_tower<Rational>(FieldName::Qzeta5)->dim(), 4U);
  EXPECT_EQ(field_tower<Rational>(FieldName::QepsI)->dim(), 4U);
  EXPECT_EQ(field_tower<Rational>(FieldName::Qsqrt5sqrtm2)->dim(), 4U);
  EXPECT_EQ(field_tower<Rational>(FieldName::F5)->characteristic(), 5UL);
  EXPECT_EQ(field_tower<RatFuncQ>(FieldName::Qsqrt5, {"t"})->label(), "Qsqrt5(t)");
  EXPECT_THROW(field_name_from_string("Qi"), std::invalid_argument);
  EXPECT_THROW(field_tower<Rational>(FieldName::Q, {"t"}), std::invalid_argument);
}

TEST(FieldTower, DefiningRelations) {
  const auto s5 = field_tower<Rational>(FieldName::Qsqrt5);
  const auto s = AlgQ::gen(s5, "sqrt5");
  EXPECT_EQ(s * s, AlgQ::from_rational(s5, Rational(5)));

  const auto z5 = field_tower<Rational>(FieldName::Qzeta5);
  const auto z = AlgQ::gen(z5, "z");
  const auto one = AlgQ::from_rational(z5, Rational(1));
  EXPECT_EQ(z.pow(4), -(one + z + z * z + z.pow(3)));
  EXPECT_EQ(z.pow(5), one);
  EXPECT_EQ(sqrt5_in(z5) * sqrt5_in(z5), AlgQ::from_rational(z5, Rational(5)));

  const auto q4 = field_tower<Rational>(FieldName::QepsI);
  const auto i = AlgQ::gen(q4, "i");
  EXPECT_EQ(i * i, AlgQ::from_rational(q4, Rational(-1)));
  EXPECT_EQ(sqrt5_in(q4) * sqrt5_in(q4), AlgQ::from_rational(q4, Rational(5)));

  const auto q52 = field_tower<Rational>(FieldName::Qsqrt5sqrtm2);
  const auto r = AlgQ::gen(q52, "sqrtm2");
  EXPECT_EQ(r * r, AlgQ::from_rational(q52, Rational(-2)));
}

TEST(FieldTower, EpsilonArithmetic) {
  // oracle: ε = (√5 − 1)/2 inside Q(√5) satisfies ε² + ε − 1 = 0
  const auto s5 = field_tower<Rational>(FieldName::Qsqrt5);
  const auto eps_s = AlgQ::from_rationals(s5, {Rational(-1, 2), Rational(1, 2)});
  EXPECT_TRUE((eps_s * eps_s + eps_s - AlgQ::from_rational(s5, Rational(1))).is_zero());

  const auto q4 = field_tower<Rational>(FieldName::QepsI);
  const auto e = AlgQ::gen(q4, "e");
  const auto one = AlgQ::from_rational(q4, Rational(1));
  EXPECT_EQ(e * e, one - e);
  EXPECT_EQ(e.inverse(), e + one);
  EXPECT_EQ(embed_sqrt5(eps_s, q4), e);

  const auto z5 = field_tower<Rational>(FieldName::Qzeta5);
  const auto z = AlgQ::gen(z5, "z");
  EXPECT_EQ(embed_sqrt5(eps_s, z5), z + z.pow(4));
}

TEST(FieldTower, RandomInversesAndAxioms) {
  std::mt19937_64 rng(11);
  for (auto name : {FieldName::Q, FieldName::Qsqrt5, FieldName::Qzeta5, FieldName::QepsI, FieldName::Qsqrt5sqrtm2}) {
    const auto alg = field_tower<Rational>(name);
    const auto one = AlgQ::from_rational(alg, Rational(1));
    int tried = 0;
    while (tried < 100) {
      const auto x = rnd_element(rng, alg);
      if (x.is_zero()) continue;
      ++tried;
      EXPECT_EQ(x.inverse() * x, one) << alg->label() << " " << x.to_string();
      EXPECT_EQ(one * x, x);
      const auto y = rnd_element(rng, alg);
      const auto w = rnd_element(rng, alg);
      EXPECT_EQ((x * y) * w, x * (y * w));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x * (y + w), x * y + x * w);
    }
  }
}

TEST(FieldTower, ConjugationsAreInvolutiveAutomorphisms) {
  std::mt19937_64 rng(5);
  for (auto name : {FieldName::Qsqrt5, FieldName::Qzeta5, FieldName::QepsI, FieldName::Qsqrt5sqrtm2}) {
    const auto alg = field_tower<Rational>(name);
    EXPECT_EQ(sqrt5_conjugate(sqrt5_in(alg)), -sqrt5_in(alg)) << alg->label();
    for (int k = 0; k < 20; ++k) {
      const auto x = rnd_element(rng, alg);
      const auto y = rnd_element(rng, alg);
      EXPECT_EQ(sqrt5_conjugate(x * y), sqrt5_conjugate(x) * sqrt5_conjugate(y));
      // on Q(ζ₅) the lift z ↦ z² has order 4 and squares to complex conjugation
      if (name == FieldName::Qzeta5) {
        EXPECT_EQ(sqrt5_conjugate(sqrt5_conjugate(x)), complex_conjugate(x));
      } else {
        EXPECT_EQ(sqrt5_conjugate(sqrt5_conjugate(x)), x);
      }
      if (alg->complex_conj()) {
        EXPECT_EQ(complex_conjugate(x * y), complex_conjugate(x) * complex_conjugate(y));
        EXPECT_EQ(complex_conjugate(complex_conjugate(x)), x);
      }
    }
  }
  EXPECT_THROW(sqrt5_conjugate(AlgQ::from_rational(field_tower<Rational>(FieldName::Q), Rational(1))),
               std::domain_error);
}

TEST(FieldTower, PrimeFieldAndErrors) {
  const auto f5 = field_tower<Rational>(FieldName::F5);
  const auto three = AlgQ::from_rational(f5, Rational(3));
  const auto two = AlgQ::from_rational(f5, Rational(2));
  EXPECT_EQ(three * two, AlgQ::from_rational(f5, Rational(1)));
  EXPECT_EQ(three.inverse(), two);
  EXPECT_EQ(AlgQ::from_rational(f5, Rational(1, 2)), three);
  EXPECT_THROW(AlgQ::zero(f5).inverse(), std::domain_error);

  const auto q4 = field_tower<Rational>(FieldName::QepsI);
  EXPECT_THROW(AlgQ::zero(q4).inverse(), std::domain_error);
  // zero divisor in Q[s]/(s² − 4)
  const auto split = quadratic_algebra(Rational(4), "Q[s]/(s^2-4)", "s", false);
  const auto zd = AlgQ::gen(split, "s") - AlgQ::from_rational(split, Rational(2));
  EXPECT_THROW(zd.inverse(), std::domain_error);
  EXPECT_THROW(require_field(zd), std::domain_error);
}

TEST(FieldTower, ParametricScalars) {
  const auto alg = field_tower<RatFuncQ>(FieldName::Qsqrt5, {"t"});
  const auto t = AlgQt::scalar(alg, RatFuncQ::variable(Rational(0)));
  const auto s = AlgQt::gen(alg, "sqrt5");
  const auto x = t + s * t * t;
  EXPECT_EQ(x.inverse() * x, AlgQt::from_rational(alg, Rational(1)));
}

TEST(Poly, GcdExamples) {
  const PQ a{Rational(-1), Rational(0), Rational(1)};
  const PQ b{Rational(-1), Rational(1)};
  EXPECT_EQ(gcd(a, b), b);
  const PQ p{Rational(4), Rational(2)};
  EXPECT_EQ(gcd(p, PQ::zero(Rational(0))), p.monic());
  EXPECT_EQ(gcd(PQ::zero(Rational(0)), p), p.monic());
}

TEST(Poly, DivisionProperty) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const PQ a = rnd_poly(rng, 7);
    const PQ b = rnd_poly(rng, 3);
    const auto dm = divmod(a, b);
    EXPECT_EQ(dm.quot * b + dm.rem, a);
    EXPECT_LT(dm.rem.degree(), b.degree());
    const PQ g = gcd(a * b, b * b);
    EXPECT_TRUE(divmod(a * b, g).rem.is_zero());
    EXPECT_TRUE(divmod(b * b, g).rem.is_zero());
    EXPECT_EQ(exact_quotient(a * b, b), a);
  }
  EXPECT_THROW(exact_quotient(PQ{Rational(1), Rational(0), Rational(1)}, PQ{Rational(1), Rational(1)}),
               std::domain_error);
}

TEST(Poly, MonicSquareRoot) {
  std::mt19937_64 rng(8);
  const PQ g = rnd_poly(rng, 6).monic();
  EXPECT_EQ(monic_square_root(g * g), g);
  EXPECT_FALSE(monic_square_root(g * g + PQ{Rational(1)}).has_value());
}

TEST(RatFunc, ComposeExamples) {
  const Rational zero(0);
  const RatFuncQ z = RatFuncQ::variable(zero);
  const RatFuncQ minus_inv(PQ{Rational(-1)}, PQ{Rational(0), Rational(1)});
  EXPECT_EQ(compose(z, minus_inv), minus_inv);
  EXPECT_EQ(compose(minus_inv, minus_inv), z);

  const auto z5 = field_tower<Rational>(FieldName::Qzeta5);
  using PZ = Poly<AlgQ>;
  const auto zeta = AlgQ::gen(z5, "z");
  const RatFunc<AlgQ> f(PZ::monomial(AlgQ::from_rational(z5, Rational(1)), 5));
  const RatFunc<AlgQ> rot(PZ::monomial(zeta, 1));
  EXPECT_EQ(compose(f, rot), f);

  // μ(ζ z) = μ(z)
  const PQ mu_num = PQ::monomial(Rational(-125), 5);
  PQ mu_den = PQ::monomial(Rational(1), 10) + PQ::monomial(Rational(11), 5) - PQ{Rational(1)};
  const RatFunc<AlgQ> mu(lift_poly(mu_num, z5), lift_poly(mu_den, z5));
  EXPECT_EQ(compose(mu, rot), mu);
  EXPECT_FALSE(compose(mu, RatFunc<AlgQ>(PZ::monomial(AlgQ::from_rational(z5, Rational(2)), 1))) == mu);
}

TEST(RatFunc, NormalizationIdempotent) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const PQ c = rnd_poly(rng, 2);
    const RatFuncQ f(rnd_poly(rng, 4) * c, rnd_poly(rng, 3) * c);
    EXPECT_TRUE(f.is_normalized());
    const RatFuncQ g = f.normalized();
    EXPECT_EQ(g.num(), f.num());
    EXPECT_EQ(g.den(), f.den());
    EXPECT_EQ(gcd(f.num(), f.den()).degree(), 0);
    EXPECT_EQ(f.den().lead(), Rational(1));
  }
  EXPECT_THROW(RatFuncQ(PQ{Rational(1)}, PQ::zero(Rational(0))), std::domain_error);
}

TEST(RatFunc, FieldOperations) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const RatFuncQ f(rnd_poly(rng, 3), rnd_poly(rng, 2));
    const RatFuncQ g(rnd_poly(rng, 2), rnd_poly(rng, 3));
    const Rational x = rnd_rational(rng);
    const RatFuncQ h = (f + g) * g - f / g;
    try {
      const Rational expect = (f.eval(x) + g.eval(x)) * g.eval(x) - f.eval(x) / g.eval(x);
      EXPECT_EQ(h.eval(x), expect);
    } catch (const std::domain_error&) {
      // random point hit a pole
    }
    EXPECT_EQ(f.pow(-2) * f.pow(2), RatFuncQ::constant(Rational(1)));
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(PQ{Rational(1), Rational(0), Rational(1)}, PQ{Rational(-2), Rational(1)}), Rational(5));
  const Rational a(3), b(-7, 2);
  EXPECT_EQ(resultant(PQ{-a, Rational(1)}, PQ{-b, Rational(1)}), a - b);
  const PQ p{Rational(-2), Rational(0), Rational(0), Rational(1)};
  const PQ q{Rational(-3), Rational(0), Rational(1)};
  const Rational oracle = leibniz_det(sylvester_matrix(p, q));
  EXPECT_EQ(oracle, Rational(-23));
  EXPECT_EQ(resultant(p, q), oracle);
  EXPECT_THROW(resultant(PQ::zero(Rational(0)), PQ::zero(Rational(0))), std::domain_error);
  EXPECT_EQ(resultant(p, PQ::zero(Rational(0))), Rational(0));
  EXPECT_EQ(resultant(p, PQ{Rational(3)}), Rational(27));
}

TEST(Resultant, MatchesSylvesterAndSwapRule) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const int da = 1 + static_cast<int>(rng() % 6);
    const int db = 1 + static_cast<int>(rng() % 6);
    const PQ a = rnd_poly(rng, da);
    const PQ b = rnd_poly(rng, db);
    const Rational r = resultant(a, b);
    EXPECT_EQ(r, gauss_det(sylvester_matrix(a, b)));
    const Rational swapped = resultant(b, a);
    EXPECT_EQ(swapped, (da * db) % 2 ? -r : r);
    // common factor forces zero
    EXPECT_EQ(resultant(a * b, b * PQ{Rational(1), Rational(1)}), Rational(0));
  }
}

TEST(Resultant, SplitProductFormula) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10; ++k) {
    std::vector<Rational> roots;
    PQ q = PQ{Rational(1)};
    for (int i = 0; i < 4; ++i) {
      roots.push_back(rnd_rational(rng));
      q = q * PQ{-roots.back(), Rational(1)};
    }
    const Rational lc(3);
    q = q * lc;
    const PQ p = rnd_poly(rng, 5);
    Rational prod = lc.pow(p.degree());
    for (const auto& r : roots) prod *= p.eval(r);
    // Res(p, q) = (−1)^{deg p deg q} lc(q)^{deg p} ∏ p(roots of q)
    const Rational expect = (p.degree() * q.degree()) % 2 ? -prod : prod;
    EXPECT_EQ(resultant(p, q), expect);
  }
}

TEST(Resultant, OverPolynomialRing) {
  // Res_x(x² − S, x − 2) as a polynomial in S equals the specialization at every S
  using PP = Poly<PQ>;
  const PQ S = PQ::variable(Rational(0));
  const PQ one{Rational(1)};
  const PP a(std::vector<PQ>{-S, PQ::zero(Rational(0)), one}, PQ::zero(Rational(0)));
  const PP b(std::vector<PQ>{S * S - PQ{Rational(2)}, S + one}, PQ::zero(Rational(0)));
  const PQ r = resultant(a, b);
  for (int s = -3; s <= 3; ++s) {
    const Rational sv(s);
    const PQ as{-sv, Rational(0), Rational(1)};
    const PQ bs{sv * sv - Rational(2), sv + Rational(1)};
    if ((sv + Rational(1)).is_zero()) continue;
    EXPECT_EQ(r.eval(sv), resultant(as, bs)) << s;
  }
}
