#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klein5/algebra.hpp"
#include "klein5/rational.hpp"

namespace klein5 {

/// x⁵ + A x² + B x + C over Q.
struct Quintic {
  Rational A;
  Rational B;
  Rational C;

  friend bool operator==(const Quintic&, const Quintic&) = default;
};

std::string to_string(const Quintic& q);

template <class D>
struct InvariantsT {
  D delta;
  D gamma4;
  D gamma6;
  D disc;
};
using QuinticInvariants = InvariantsT<Rational>;

/// δ, γ₄, γ₆ and Disc of x⁵ + A x² + B x + C over any commutative Q-algebra D:
///   5⁴ δ = A⁴ − 5B³ + 25ABC
///   12² 5⁵ γ₄ = 128A⁴B² − 192A⁵C − 600AB³C + 1000A²BC² − 144B⁵ + 3125C⁴
///   12³ 5¹⁰ γ₆ = 1728A¹⁰ + 10400A⁶B³ + 405000A²B⁶ − 180000A⁷BC − 1170000A³B⁴C
///                + 1725000A⁴B²C² − 1800000A⁵C³ + 2812500AB³C³ − 4687500A²BC⁴
///                − 2025000B⁵C² − 9765625C⁶
///   Disc = −27A⁴B² + 108A⁵C − 1600AB³C + 2250A²BC² + 256B⁵ + 3125C⁴
template <class D>
InvariantsT<D> invariants_of(const D& A, const D& B, const D& C) {
  auto k = [&](long v) { return lift_like(A, Rational(v)); };
  auto kq = [&](const Rational& v) { return lift_like(A, v); };
  const D A2 = A * A, A3 = A2 * A, A4 = A3 * A, A5 = A4 * A, A6 = A5 * A, A7 = A6 * A, A10 = A5 * A5;
  const D B2 = B * B, B3 = B2 * B, B4 = B3 * B, B5 = B4 * B, B6 = B5 * B;
  const D C2 = C * C, C3 = C2 * C, C4 = C3 * C, C6 = C3 * C3;
  InvariantsT<D> r{zero_like(A), zero_like(A), zero_like(A), zero_like(A)};
  r.delta = (A4 - k(5) * B3 + k(25) * A * B * C) * kq(Rational(1, 625));
  r.gamma4 = (k(128) * A4 * B2 - k(192) * A5 * C - k(600) * A * B3 * C + k(1000) * A2 * B * C2 - k(144) * B5 +
              k(3125) * C4) *
             kq(Rational(1, 144 * 3125));
  const D g6 = k(1728) * A10 + k(10400) * A6 * B3 + k(405000) * A2 * B6 - k(180000) * A7 * B * C -
               k(1170000) * A3 * B4 * C + k(1725000) * A4 * B2 * C2 - k(1800000) * A5 * C3 +
               k(2812500) * A * B3 * C3 - k(4687500) * A2 * B * C4 - k(2025000) * B5 * C2 - k(9765625) * C6;
  r.gamma6 = g6 * kq(Rational(mpz_class(1), mpz_class(1728) * mpz_class(9765625)));
  r.disc = k(-27) * A4 * B2 + k(108) * A5 * C - k(1600) * A * B3 * C + k(2250) * A2 * B * C2 + k(256) * B5 +
           k(3125) * C4;
  return r;
}

QuinticInvariants invariants(const Quintic& q);

/// Coefficients (a, b, c) of the j-equation a j² + b j + c = 0:
/// δ⁵ j² − 1728(γ₄³ − γ₆² + δ⁵) j + 1728² γ₄³.
template <class D>
std::vector<D> j_equation_coeffs(const InvariantsT<D>& inv) {
  const D& like = inv.delta;
  const D d5 = inv.delta * inv.delta * inv.delta * inv.delta * inv.delta;
  const D g43 = inv.gamma4 * inv.gamma4 * inv.gamma4;
  const D k1728 = lift_like(like, Rational(1728));
  return {k1728 * k1728 * g43, -(k1728 * (g43 - inv.gamma6 * inv.gamma6 + d5)), d5};
}

/// Value of the j-equation of q at j (j may live in any algebra whose scalars contain Q).
template <class T>
T j_equation_value(const QuinticInvariants& inv, const T& j) {
  const auto c = j_equation_coeffs(inv);
  return j * j * lift_like(j, c[2]) + j * lift_like(j, c[1]) + lift_like(j, c[0]);
}

/// The two roots of the j-equation, written in Q[s]/(s² − radicand) with radicand = 5·Disc.
struct JCandidates {
  Rational radicand;         // 5·Disc(q)
  Rational quad_disc;        // discriminant of the j-equation
  std::optional<Rational> cofactor;  // quad_disc / (5·Disc), when Disc ≠ 0
  bool square_class_ok = false;      // cofactor is a nonzero rational square (or both vanish)
  Rational center;           // roots are center ± half_width·s
  Rational half_width;
  AlgebraPtr<Rational> field;  // Q[s]/(s² − radicand), or Q[s]/(s² − quad_disc) when the check fails
  std::vector<AlgQ> roots;
  std::optional<std::pair<Rational, Rational>> rational_roots;  // when the radicand is a rational square
};

/// Throws std::domain_error when δ = 0.
JCandidates j_candidates(const Quintic& q);

/// [P₁P₂]²/5³⁶, the closed form of (j-equation discriminant)/(5·Disc) found by elimination.
Rational j_discriminant_cofactor(const Quintic& q);

enum class ResolventConvention {
  displayed,   // x_ν and A, B, C exactly as printed
  consistent,  // n-term of x_ν scaled by 12 and the n⁴ term of B with the opposite sign
};

std::string to_string(ResolventConvention c);

/// Numerators and denominators of A, B, C at j = Jn/Jd, as polynomials in Jn, Jd:
///   K = 1728 Jd − Jn
///   A = −20 Jd[(2m³+3m²n) K + 432(6mn²+n³) Jd] / (Jn K)
///   B = −5 Jd[m⁴K² − 864(3m²n²+2mn³) Jd K ± 559872 n⁴ Jd²] / (Jn K²)
///   C = −Jd[m⁵K² − 1440 m³n² Jd K + 62208(15mn⁴+4n⁵) Jd²] / (Jn K²)
/// with + for the displayed convention and − for the consistent one.
template <class D>
struct ResolventFractions {
  D A_num, A_den, B_num, B_den, C_num, C_den;
};

template <class D>
ResolventFractions<D> resolvent_fractions(const Rational& m, const Rational& n, const D& Jn, const D& Jd,
                                          ResolventConvention conv) {
  auto k = [&](const Rational& v) { return lift_like(Jn, v); };
  const D K = k(Rational(1728)) * Jd - Jn;
  const D K2 = K * K;
  const D Jd2 = Jd * Jd;
  const Rational m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
  const Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  const Rational b_sign = conv == ResolventConvention::displayed ? Rational(1) : Rational(-1);
  ResolventFractions<D> f{zero_like(Jn), zero_like(Jn), zero_like(Jn), zero_like(Jn), zero_like(Jn), zero_like(Jn)};
  f.A_num = k(Rational(-20)) * Jd *
            (K * k(2 * m3 + 3 * m2 * n) + Jd * k(Rational(432) * (6 * m * n2 + n3)));
  f.A_den = Jn * K;
  f.B_num = k(Rational(-5)) * Jd *
            (K2 * k(m4) - Jd * K * k(Rational(864) * (3 * m2 * n2 + 2 * m * n3)) +
             Jd2 * k(b_sign * Rational(559872) * n4));
  f.B_den = Jn * K2;
  f.C_num = -Jd * (K2 * k(m5) - Jd * K * k(Rational(1440) * m3 * n2) + Jd2 * k(Rational(62208) * (15 * m * n4 + 4 * n5)));
  f.C_den = Jn * K2;
  return f;
}

/// (A, B, C)_{m,n,j}. Throws std::domain_error for j ∈ {0, 1728}.
Quintic resolvent_coeffs(const Rational& m, const Rational& n, const Rational& j,
                         ResolventConvention conv = ResolventConvention::displayed);

/// q_t = x⁵ + 5((9−5t²)/(5t²)) x + 4((9−5t²)/(5t²)). Throws std::domain_error for t = 0.
Quintic family_quintic(const Rational& t);

/// Coefficients (B, C) of q_t over any field D containing t.
template <class D>
std::pair<D, D> family_coeffs(const D& t) {
  const D t2 = t * t;
  const D s = (lift_like(t, Rational(9)) - lift_like(t, Rational(5)) * t2) * inverse(lift_like(t, Rational(5)) * t2);
  return {lift_like(t, Rational(5)) * s, lift_like(t, Rational(4)) * s};
}

/// Disc(q_t)·t¹⁰ = scalar·(9 − 5t²)⁴ in Q(t); scalar = 2⁸·3² is the identity, anything else a
/// mutation.
bool verify_family_disc_identity(const Rational& scalar = Rational(2304));

/// 75C²/√(256B⁵ + 3125C⁴) with the positive root, when the radicand is a positive rational square.
/// Throws std::invalid_argument("C must be nonzero for t") when C = 0.
std::optional<Rational> trinomial_t(const Rational& B, const Rational& C);

/// Primitive integer trinomial a5 x⁵ + a1 x + a0.
struct IntTrinomial {
  mpz_class a5;
  mpz_class a1;
  mpz_class a0;

  friend bool operator==(const IntTrinomial&, const IntTrinomial&) = default;
};

std::string to_string(const IntTrinomial& t);

/// c5 x⁵ + B x + C with denominators cleared, content 1, a5 > 0, then x ↦ −x if a0 < 0.
IntTrinomial canonical_trinomial(const Rational& c5, const Rational& B, const Rational& C);

/// A trinomial c5 x⁵ + B x + C with rational coefficients.
struct Trinomial {
  Rational c5;
  Rational B;
  Rational C;
};

/// Rational c with q2(x) ∝ q1(c x), when one exists. Requires C ≠ 0 in both.
std::optional<Rational> scaling_factor(const Trinomial& q1, const Trinomial& q2);
bool scaling_equivalent(const Trinomial& q1, const Trinomial& q2);

/// B = 20(v²+v−1)(v²−v−1)w⁴/(v²+1)², C = 16(v²+v−1)(2v²+3v−2)w⁵/(v²+1)².
std::pair<Rational, Rational> solvable_family(const Rational& v, const Rational& w);

/// w = (v²−v−1)/(2v²+3v−2), t = 3(v²+1)(2v²+3v−2)²/(5(2v³+2v²−v+1)(v³+v²+2v−2)).
/// Throws std::domain_error when a denominator vanishes at v.
std::pair<Rational, Rational> solvability_obstruction(const Rational& v);

/// Right-hand side 15(x²+1)(2x³+2x²−x+1)(x³+x²+2x−2) of the obstruction curve.
Rational obstruction_rhs(const Rational& x);

struct RationalPoint {
  Rational x;
  Rational y;  // the nonnegative square root
};

struct HyperellipticSearch {
  long height = 0;
  std::uint64_t tested = 0;  // coprime pairs (p, q) examined
  bool point_at_infinity = false;  // leading coefficient 30 is a square?
  std::vector<RationalPoint> points;
};

/// All x = p/q with gcd(p, q) = 1, q > 0, max(|p|, q) ≤ height where the right-hand side is a
/// rational square. Evidence only. Throws std::invalid_argument for height < 1.
HyperellipticSearch hyperelliptic_search(long height);

/// One row of the table of A5 quintics unramified outside {2, 5, ∞}.
struct TableRow {
  std::vector<long> original;  // x⁵ + ... coefficients, degree 5 down to 0
  Trinomial principal;
  std::vector<Rational> listed_t;
};

const std::vector<TableRow>& table_rows();

struct TableCheck {
  std::string original;
  std::string principal;
  std::vector<Rational> listed;
  std::optional<Rational> t_principal;
  std::optional<Rational> t_original;  // only when the original quintic is a trinomial
  bool match = false;
};

/// Recomputes t for every row: from the monic principal quintic, and from the original when it
/// is itself a trinomial. A row matches when every listed value is recovered and nothing else is.
std::vector<TableCheck> reproduce_table();

}  // namespace klein5
