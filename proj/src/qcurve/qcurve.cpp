#include "klein5/qcurve.hpp"

#include <stdexcept>

#include "klein5/resultant.hpp"

namespace klein5 {

namespace {

using PolyQ = Poly<Rational>;

const AlgebraPtr<Rational>& qsqrt5() {
  static const AlgebraPtr<Rational> alg = field_tower<Rational>(FieldName::Qsqrt5);
  return alg;
}

const AlgebraPtr<RatFuncQ>& qsqrt5_t() {
  static const AlgebraPtr<RatFuncQ> alg = field_tower<RatFuncQ>(FieldName::Qsqrt5, {"t"});
  return alg;
}

PolyQ x_var() { return PolyQ::variable(Rational(0)); }

}  // namespace

CurveSqrt5 curve_from_t(const Rational& t) {
  if (t.is_zero()) throw std::domain_error("t must be nonzero");
  const AlgQ s = AlgQ::gen(qsqrt5(), "sqrt5");
  const AlgQ r = isogeny_r(s, AlgQ::from_rational(qsqrt5(), t));
  return {AlgQ::from_rational(qsqrt5(), Rational(2)), r, AlgQ::zero(qsqrt5())};
}

CurveSqrt5t curve_from_t_symbolic() {
  const auto& alg = qsqrt5_t();
  const AlgQt s = AlgQt::gen(alg, "sqrt5");
  const AlgQt t = AlgQt::scalar(alg, RatFuncQ::variable(Rational(0)));
  return {AlgQt::from_rational(alg, Rational(2)), isogeny_r(s, t), AlgQt::zero(alg)};
}

CurveQ curve_from_j(const Rational& j) {
  if (j.is_zero() || j == Rational(1728)) throw std::domain_error("j must avoid 0 and 1728");
  const Rational k = j / (Rational(1728) - j);
  return {Rational(0), Rational(3) * k, Rational(2) * k};
}

CurveSqrt5 table_row_curve() {
  const AlgQ s = AlgQ::gen(qsqrt5(), "sqrt5");
  return {AlgQ::from_rational(qsqrt5(), Rational(5)) - s, s, AlgQ::zero(qsqrt5())};
}

bool verify_isogeny_codomain(const Rational& r_shift) {
  const CurveSqrt5t e = curve_from_t_symbolic();
  const AlgQt r = e.a4 + AlgQt::from_rational(e.a4.algebra(), r_shift);
  return isogeny_codomain_holds(r, sqrt5_conjugate(r));
}

bool verify_isogeny_codomain_at(const Rational& t) {
  const CurveSqrt5 e = curve_from_t(t);
  return isogeny_codomain_holds(e.a4, sqrt5_conjugate(e.a4));
}

CurveModP::CurveModP(const PrimeField& f, std::uint64_t a2, std::uint64_t a4, std::uint64_t a6)
    : f_(f), a2_(a2 % f.p()), a4_(a4 % f.p()), a6_(a6 % f.p()) {}

std::uint64_t CurveModP::rhs(std::uint64_t x) const { return f_.eval({a6_, a4_, a2_, 1}, x); }

bool CurveModP::on_curve(const PointModP& P) const {
  return P.infinity || f_.mul(P.y, P.y) == rhs(P.x);
}

bool CurveModP::singular() const {
  // Δ via the c₄³/Δ invariants, reduced mod p
  const auto& f = f_;
  const std::uint64_t b2 = f.mul(4, a2_), b4 = f.mul(2, a4_), b6 = f.mul(4, a6_);
  const std::uint64_t b8 = f.sub(f.mul(f.mul(4, a2_), a6_), f.mul(a4_, a4_));
  std::uint64_t d = f.neg(f.mul(f.mul(b2, b2), b8));
  d = f.sub(d, f.mul(8, f.mul(b4, f.mul(b4, b4))));
  d = f.sub(d, f.mul(27, f.mul(b6, b6)));
  d = f.add(d, f.mul(9, f.mul(b2, f.mul(b4, b6))));
  return d == 0;
}

PointModP CurveModP::neg(const PointModP& P) const {
  if (P.infinity) return P;
  return {false, P.x, f_.neg(P.y)};
}

PointModP CurveModP::add(const PointModP& P, const PointModP& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  std::uint64_t lam;
  if (P.x == Q.x) {
    if (f_.add(P.y, Q.y) == 0) return {};
    const std::uint64_t num = f_.add(f_.add(f_.mul(3, f_.mul(P.x, P.x)), f_.mul(f_.mul(2, a2_), P.x)), a4_);
    lam = f_.div(num, f_.mul(2, P.y));
  } else {
    lam = f_.div(f_.sub(Q.y, P.y), f_.sub(Q.x, P.x));
  }
  const std::uint64_t x3 = f_.sub(f_.sub(f_.sub(f_.mul(lam, lam), a2_), P.x), Q.x);
  const std::uint64_t y3 = f_.sub(f_.mul(lam, f_.sub(P.x, x3)), P.y);
  return {false, x3, y3};
}

PointModP CurveModP::mul(long long n, const PointModP& P) const {
  PointModP base = n < 0 ? neg(P) : P;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  PointModP acc{};
  while (e) {
    if (e & 1) acc = add(acc, base);
    base = add(base, base);
    e >>= 1;
  }
  return acc;
}

PointModP CurveModP::random_point(std::mt19937_64& rng) const {
  const std::uint64_t tries = 64 * f_.p();
  for (std::uint64_t i = 0; i < tries; ++i) {
    const std::uint64_t x = f_.uniform(rng);
    const auto y = f_.sqrt(rhs(x));
    if (!y) continue;
    const bool flip = (rng() & 1) != 0;
    return {false, x, flip ? f_.neg(*y) : *y};
  }
  throw std::domain_error("point sampling failed");
}

std::vector<std::uint64_t> admissible_primes(std::size_t count, std::uint64_t start) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(start, 7); out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    const bool five_ok = p % 5 == 1 || p % 5 == 4;
    const bool m2_ok = p % 8 == 1 || p % 8 == 3;
    if (five_ok && m2_ok) out.push_back(p);
  }
  return out;
}

IsogenyCompositionCheck check_isogeny_composition(std::uint64_t p, int trials, std::uint64_t seed, const Rational& t,
                                                  bool drop_factor) {
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (p <= 5 || !is_prime(p)) throw std::domain_error("p must be a prime above 5");
  const PrimeField f(p);
  const auto s = f.sqrt(5);
  const auto w = f.sqrt(f.from_int(-2));
  if (!s || !w || *s == 0 || *w == 0) throw std::domain_error("5 and -2 must both be squares mod p");
  const std::uint64_t tt = f.from_rational(t);
  if (tt == 0) throw std::domain_error("t vanishes mod p");
  const std::uint64_t st = f.mul(*s, tt);
  // r = (3 + √5 t)/(2√5 t) and r^σ = (3 − √5 t)/(−2√5 t)
  const std::uint64_t r = f.div(f.add(3, st), f.mul(2, st));
  const std::uint64_t rs = f.div(f.sub(3, st), f.neg(f.mul(2, st)));
  const CurveModP E(f, 2, r, 0);
  const CurveModP Es(f, 2, rs, 0);
  if (E.singular() || Es.singular()) throw std::domain_error("E_t is singular mod p");
  const std::uint64_t w2 = f.mul(*w, *w);
  const std::uint64_t w3 = f.mul(w2, *w);
  // (x, y) ↦ (y²/(w²x²), y(c − x²)/(w³x²)); the kernel {O, (0,0)} goes to O
  auto phi = [&](std::uint64_t c, const PointModP& P) -> PointModP {
    if (P.infinity || P.x == 0) return {};
    const std::uint64_t x2 = f.mul(P.x, P.x);
    const std::uint64_t X = f.div(f.mul(P.y, P.y), f.mul(w2, x2));
    const std::uint64_t factor = drop_factor ? 1 : f.sub(c, x2);
    const std::uint64_t Y = f.div(f.mul(P.y, factor), f.mul(w3, x2));
    return {false, X, Y};
  };
  IsogenyCompositionCheck out;
  out.p = p;
  out.sqrt5 = *s;
  out.sqrtm2 = *w;
  out.trials = trials;
  out.vacuous = trials == 0;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
  std::mt19937_64 rng(seq);
  for (int i = 0; i < trials; ++i) {
    const PointModP P = E.random_point(rng);
    const PointModP Q = phi(r, P);
    const bool ok = Es.on_curve(Q) && phi(rs, Q) == E.mul(-2, P);
    if (ok) ++out.passed;
  }
  return out;
}

bool verify_isogeny_composition(std::uint64_t p, int trials, std::uint64_t seed, const Rational& t) {
  return check_isogeny_composition(p, trials, seed, t).pass();
}

PolyQ division_poly5(const CurveQ& e) {
  if (!e.a2.is_zero()) throw std::invalid_argument("division_poly5 expects y^2 = x^3 + bx + c");
  if (curve_invariants(e).disc.is_zero()) throw std::domain_error("singular curve");
  return division_poly5(e.a4, e.a6);
}

SexticResolvent x5sum_resolvent(const CurveQ& e) {
  const PolyQ psi5 = division_poly5(e);
  const Rational& b = e.a4;
  const Rational& c = e.a6;
  const PolyQ x = x_var();
  const PolyQ f({c, b, Rational(0), Rational(1)});
  const PolyQ dup({b * b, Rational(-8) * c, Rational(-2) * b, Rational(0), Rational(1)});
  const PolyQ constant_part = -(x * f * Rational(4) + dup);
  // S·4f − 4xf − dup, as a polynomial in x whose coefficients are polynomials in S
  using PP = Poly<PolyQ>;
  const PolyQ S = PolyQ::variable(Rational(0));
  std::vector<PolyQ> lin;
  for (int k = 0; k <= 4; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    lin.push_back(S * (f.coeff(ku) * Rational(4)) + PolyQ::constant(constant_part.coeff(ku)));
  }
  const PP second(lin, PolyQ::zero(Rational(0)));
  const PP first = psi5.map([](const Rational& v) { return PolyQ::constant(v); });
  SexticResolvent out;
  out.R = resultant(first, second);
  if (out.R.degree() != 12) throw std::domain_error("sextic resultant has unexpected degree");
  out.scalar = out.R.lead();
  const auto g = monic_square_root(out.R * (Rational(1) / out.scalar));
  if (!g) throw std::domain_error("sextic resultant is not a scalar times a square");
  out.g = *g;
  return out;
}

PolyQ q_prime(const Rational& j) {
  const PolyQ mu = x_var();
  const PolyQ a = mu * mu + mu * Rational(10) + PolyQ::constant(Rational(5));
  return a * a * a - mu * j;
}

KleinLinkCheck check_klein_link(const Rational& j, const KleinLinkOptions& opts) {
  if (j.is_zero() || j == Rational(1728)) throw std::domain_error("j must avoid 0 and 1728");
  KleinLinkCheck out;
  out.j = j;
  out.sextic = x5sum_resolvent(curve_from_j(j));
  const PolyQ& g = out.sextic.g;
  const PolyQ qp = q_prime(j);

  const PolyQ mu = x_var();
  const PolyQ A = mu * mu + mu * Rational(10) + PolyQ::constant(Rational(5));
  const PolyQ B = mu * mu + mu * Rational(4) - PolyQ::constant(Rational(1));
  if (gcd(B, qp).degree() > 0) throw std::domain_error("mu^2+4mu-1 shares a root with q'");
  const PolyQ minus2A = A * Rational(-2);
  PolyQ num = PolyQ::zero(Rational(0));
  for (int k = 0; k <= 6; ++k) {
    num += pow(minus2A, static_cast<unsigned>(k)) * pow(B, static_cast<unsigned>(6 - k)) * g.coeff(static_cast<std::size_t>(k));
  }
  out.forward_numerator = num;
  const auto fd = divmod(num, qp);
  out.forward_ok = !num.is_zero() && fd.rem.is_zero();
  out.forward_cofactor = fd.quot;

  const PolyQ xx = opts.negate_x ? -x_var() : x_var();
  const PolyQ x2 = xx - PolyQ::constant(Rational(2));
  const PolyQ U = pow(xx, 3U) * opts.transform_constant;
  const PolyQ V = pow(x2, 5U) * j - pow(xx, 3U) * (xx * xx - xx * Rational(10) + PolyQ::constant(Rational(34))) * Rational(1728);
  if (gcd(V, g).degree() > 0) throw std::domain_error("inverse transform denominator shares a root with g");
  const PolyQ W = U * U + U * V * Rational(10) + V * V * Rational(5);
  const PolyQ num2 = W * W * W - U * pow(V, 5U) * j;
  out.inverse_numerator = num2;
  out.inverse_ok = !num2.is_zero() && divmod(num2, g).rem.is_zero();
  return out;
}

bool verify_klein_link(const Rational& j, const KleinLinkOptions& opts) { return check_klein_link(j, opts).pass(); }

bool j_solves_j_equation(const Rational& t, const Rational& A, const Rational& B, const Rational& C) {
  return j_equation_value(invariants(Quintic{A, B, C}), j_invariant(curve_from_t(t))).is_zero();
}

bool j_solves_j_equation(const Rational& t) {
  const Quintic q = family_quintic(t);
  return j_solves_j_equation(t, q.A, q.B, q.C);
}

}  // namespace klein5
