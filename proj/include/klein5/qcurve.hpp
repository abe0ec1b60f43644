#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "klein5/algebra.hpp"
#include "klein5/modp.hpp"
#include "klein5/poly.hpp"
#include "klein5/quintic.hpp"
#include "klein5/rational.hpp"

namespace klein5 {

/// y² = x³ + a2 x² + a4 x + a6 over a field K.
template <class K>
struct EllipticCurve {
  K a2;
  K a4;
  K a6;

  friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;
};

template <class K>
struct CurveInvariants {
  K c4;
  K disc;
};

template <class K>
CurveInvariants<K> curve_invariants(const EllipticCurve<K>& e) {
  auto k = [&](long v) { return lift_like(e.a2, Rational(v)); };
  const K b2 = k(4) * e.a2;
  const K b4 = k(2) * e.a4;
  const K b6 = k(4) * e.a6;
  const K b8 = k(4) * e.a2 * e.a6 - e.a4 * e.a4;
  const K c4 = b2 * b2 - k(24) * b4;
  const K disc = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
  return {c4, disc};
}

/// c₄³/Δ. Throws std::domain_error for a singular model.
template <class K>
K j_invariant(const EllipticCurve<K>& e) {
  const auto inv = curve_invariants(e);
  if (is_zero(inv.disc)) throw std::domain_error("singular curve");
  return inv.c4 * inv.c4 * inv.c4 * inverse(inv.disc);
}

/// x ↦ u²x, y ↦ u³y: the model with coefficients a2/u², a4/u⁴, a6/u⁶.
template <class K>
EllipticCurve<K> rescale(const EllipticCurve<K>& e, const K& u) {
  const K u2 = u * u;
  const K u4 = u2 * u2;
  return {e.a2 * inverse(u2), e.a4 * inverse(u4), e.a6 * inverse(u4 * u2)};
}

/// √5 ↦ −√5 on every coefficient. Throws when the algebra has no such conjugation.
template <class S>
EllipticCurve<AlgElement<S>> conjugate(const EllipticCurve<AlgElement<S>>& e) {
  return {sqrt5_conjugate(e.a2), sqrt5_conjugate(e.a4), sqrt5_conjugate(e.a6)};
}

using CurveQ = EllipticCurve<Rational>;
using CurveSqrt5 = EllipticCurve<AlgQ>;   // over Q(√5)
using CurveSqrt5t = EllipticCurve<AlgQt>; // over Q(√5)(t)

/// E_t: y² = x³ + 2x² + r x with r = (3 + √5 t)/(2√5 t). Throws std::domain_error for t = 0.
CurveSqrt5 curve_from_t(const Rational& t);
/// E_t over Q(√5)(t) with t transcendental.
CurveSqrt5t curve_from_t_symbolic();
/// r = (3 + √5 t)/(2√5 t) in the given algebra (which must contain √5 and t).
template <class S>
AlgElement<S> isogeny_r(const AlgElement<S>& sqrt5, const AlgElement<S>& t) {
  const auto three = lift_like(sqrt5, Rational(3));
  return (three + sqrt5 * t) * inverse(lift_like(sqrt5, Rational(2)) * sqrt5 * t);
}

/// y² = x³ + 3j/(1728−j) x + 2j/(1728−j). Throws std::domain_error for j ∈ {0, 1728}.
CurveQ curve_from_j(const Rational& j);

/// j(E_t) is a root of the j-equation of the quintic with coefficients (A, B, C), in Q(√5).
bool j_solves_j_equation(const Rational& t, const Rational& A, const Rational& B, const Rational& C);
/// The same for q_t itself.
bool j_solves_j_equation(const Rational& t);

/// The model y² = x³ + (5−√5)x² + √5 x attached to the first table row.
CurveSqrt5 table_row_curve();

/// With y² = f(x) = x³ + 2x² + r x substituted, checks that
///   X = y²/((√−2)² x²),  Y² = y²(r − x²)²/((√−2)⁶ x⁴)
/// satisfy Y² = X³ + 2X² + r′X identically in x, by cross-multiplication of polynomials in x.
/// Holds for r′ = r^σ on E_t.
template <class K>
bool isogeny_codomain_holds(const K& r, const K& r_target) {
  const K zero = zero_like(r);
  const K one = one_like(r);
  auto k = [&](long v) { return lift_like(r, Rational(v)); };
  using P = Poly<K>;
  const P x = P::variable(zero);
  const P f({zero, r, k(2), one}, zero);
  // X = Xn/Xd, Y² = Yn/Yd
  const P Xn = f;
  const P Xd = x * x * k(-2);
  const P r_minus = P::constant(r) - x * x;
  const P Yn = f * r_minus * r_minus;
  const P Yd = x * x * x * x * k(-8);
  // Yn/Yd = (Xn³ + 2Xn²Xd + r′XnXd²)/Xd³
  const P rhs = Xn * Xn * Xn + Xn * Xn * Xd * k(2) + Xn * Xd * Xd * r_target;
  return Yn * (Xd * Xd * Xd) == rhs * Yd;
}

/// Codomain identity for E_t with t transcendental; `r_shift` is added to r before the check
/// (a nonzero shift is the mutation test).
bool verify_isogeny_codomain(const Rational& r_shift = Rational(0));
/// The same identity specialized at a rational t.
bool verify_isogeny_codomain_at(const Rational& t);

/// Affine point or the point at infinity over Z/p.
struct PointModP {
  bool infinity = true;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const PointModP&, const PointModP&) = default;
};

/// y² = x³ + a2 x² + a4 x + a6 over Z/p with the chord-tangent group law.
class CurveModP {
 public:
  CurveModP(const PrimeField& f, std::uint64_t a2, std::uint64_t a4, std::uint64_t a6);

  const PrimeField& field() const { return f_; }
  std::uint64_t a2() const { return a2_; }
  std::uint64_t a4() const { return a4_; }
  std::uint64_t a6() const { return a6_; }
  std::uint64_t rhs(std::uint64_t x) const;
  bool on_curve(const PointModP& P) const;
  bool singular() const;
  PointModP neg(const PointModP& P) const;
  PointModP add(const PointModP& P, const PointModP& Q) const;
  PointModP mul(long long n, const PointModP& P) const;
  /// Uniformly chosen x until y² = rhs(x) is solvable; gives up after 64·p tries.
  PointModP random_point(std::mt19937_64& rng) const;

 private:
  PrimeField f_;
  std::uint64_t a2_, a4_, a6_;
};

/// Primes p > 5 with 5 and −2 both squares mod p (p ≡ ±1 mod 5, p ≡ 1, 3 mod 8), ascending.
std::vector<std::uint64_t> admissible_primes(std::size_t count, std::uint64_t start = 7);

struct IsogenyCompositionCheck {
  std::uint64_t p = 0;
  std::uint64_t sqrt5 = 0;   // the branch of √5 mod p
  std::uint64_t sqrtm2 = 0;  // the branch of √−2 mod p
  int trials = 0;
  int passed = 0;
  bool vacuous = false;  // trials = 0
  bool pass() const { return passed == trials; }
};

/// φ^σ(φ(P)) = [−2]P on `trials` random points of E_t mod p.
/// `drop_factor` removes (r − x²) from the Y map (mutation test).
/// Throws std::domain_error when p is not admissible or E_t is singular mod p.
IsogenyCompositionCheck check_isogeny_composition(std::uint64_t p, int trials, std::uint64_t seed,
                                                  const Rational& t = Rational(1), bool drop_factor = false);
bool verify_isogeny_composition(std::uint64_t p, int trials, std::uint64_t seed = 7, const Rational& t = Rational(1));

/// ψ₅ for y² = x³ + bx + c from the division-polynomial recurrence (ψ₅ = ψ₄ψ₂³ − ψ₁ψ₃³ with y² = f).
template <class K>
Poly<K> division_poly5(const K& b, const K& c) {
  const K zero = zero_like(b);
  const K one = one_like(b);
  auto k = [&](long v) { return lift_like(b, Rational(v)); };
  using P = Poly<K>;
  const P f({c, b, zero, one}, zero);
  const P psi3({-(b * b), k(12) * c, k(6) * b, zero, k(3)}, zero);
  // ψ₄ = 4y·F4
  const P F4({-(k(8) * c * c) - b * b * b, -(k(4) * b * c), -(k(5) * b * b), k(20) * c, k(5) * b, zero, one}, zero);
  // ψ₄ψ₂³ = 4y F4 · 8y³ = 32 f² F4
  return f * f * F4 * k(32) - psi3 * psi3 * psi3;
}

Poly<Rational> division_poly5(const CurveQ& e);

struct SexticResolvent {
  Poly<Rational> R;  // Res_x(ψ₅(x), S·4f − 4x f − (x⁴ − 2bx² − 8cx + b²)), degree 12 in S
  Rational scalar;   // R = scalar · g²
  Poly<Rational> g;  // monic, degree 6
};

/// Requires a2 = 0 and a nonsingular model. Throws std::domain_error when R is not scalar·(square).
SexticResolvent x5sum_resolvent(const CurveQ& e);

/// q′(μ) = (μ² + 10μ + 5)³ − jμ.
Poly<Rational> q_prime(const Rational& j);

struct KleinLinkOptions {
  Rational transform_constant = Rational(31104);
  bool negate_x = false;  // use x = −(x_P + x_{2P}) in the inverse transform
};

struct KleinLinkCheck {
  Rational j;
  SexticResolvent sextic;
  Poly<Rational> forward_numerator;  // (μ²+4μ−1)⁶ g(−2(μ²+10μ+5)/(μ²+4μ−1))
  bool forward_ok = false;           // q′ divides it
  Poly<Rational> forward_cofactor;
  Poly<Rational> inverse_numerator;  // V⁶ q′(U/V) with μ = U/V the inverse transform
  bool inverse_ok = false;           // vanishes modulo g
  bool pass() const { return forward_ok && inverse_ok; }
};

/// Forward: every root μ of q′ gives a root −2(μ²+10μ+5)/(μ²+4μ−1) of g.
/// Inverse: μ = c x³/((x−2)⁵ j − 1728 x³(x² − 10x + 34)) sends roots of g to roots of q′.
/// Throws std::domain_error for j ∈ {0, 1728} or when a transform denominator shares a root
/// with q′ or g.
KleinLinkCheck check_klein_link(const Rational& j, const KleinLinkOptions& opts = {});
bool verify_klein_link(const Rational& j, const KleinLinkOptions& opts = {});

}  // namespace klein5
