#include "klein5/icosa.hpp"

#include <stdexcept>

namespace klein5 {

namespace {

using PolyQ = Poly<Rational>;
using PolyZ5 = Poly<AlgQ>;

AlgQ rat(const Rational& r) { return AlgQ::from_rational(qzeta5(), r); }

AlgQ zeta() { return AlgQ::gen(qzeta5(), "z"); }

AlgQ epsilon_z5() {
  const AlgQ z = zeta();
  return z + z.pow(4);
}

// p(ζ^ν z)
PolyZ5 rotate(const PolyQ& p, int nu) {
  std::vector<AlgQ> zp;
  for (int k = 0; k < 5; ++k) zp.push_back(zeta().pow(k));
  std::vector<AlgQ> c;
  for (int k = 0; k <= p.degree(); ++k) {
    c.push_back(zp[static_cast<std::size_t>((nu * k) % 5)] * p.coeff(static_cast<std::size_t>(k)));
  }
  return PolyZ5(std::move(c), rat(Rational(0)));
}

bool same_ratfunc(const std::pair<PolyZ5, PolyZ5>& composed, const RatFuncZ5& f) {
  return composed.first * f.den() == composed.second * f.num();
}

Rational n_scale(ResolventConvention conv) {
  return conv == ResolventConvention::displayed ? Rational(1) : Rational(12);
}

}  // namespace

std::string to_string(GenLabel g) {
  switch (g) {
    case GenLabel::S: return "S";
    case GenLabel::T: return "T";
    case GenLabel::U: return "U";
  }
  return "?";
}

GenLabel gen_label_from_string(const std::string& s) {
  if (s == "S") return GenLabel::S;
  if (s == "T") return GenLabel::T;
  if (s == "U") return GenLabel::U;
  throw std::invalid_argument("unknown generator '" + s + "'");
}

const AlgebraPtr<Rational>& qzeta5() {
  static const AlgebraPtr<Rational> alg = field_tower<Rational>(FieldName::Qzeta5);
  return alg;
}

MobiusGen mobius_gen(GenLabel g) {
  const AlgQ zero = rat(Rational(0));
  const AlgQ one = rat(Rational(1));
  switch (g) {
    case GenLabel::S: return {g, {zeta(), zero, zero, one}};
    case GenLabel::T: return {g, {epsilon_z5(), one, one, -epsilon_z5()}};
    case GenLabel::U: return {g, {zero, -one, one, zero}};
  }
  throw std::invalid_argument("unknown generator");
}

RatFuncZ5 as_ratfunc(const MobiusGen& g) {
  const auto& [a, b, c, d] = g.matrix;
  if ((a * d - b * c).is_zero()) throw std::domain_error("singular Möbius matrix");
  return RatFuncZ5(PolyZ5({b, a}, rat(Rational(0))), PolyZ5({d, c}, rat(Rational(0))));
}

RatFuncQ j_from_lambda(const RatFuncQ& lambda) {
  const auto k = [&](long v) { return RatFuncQ::constant(Rational(v)); };
  return (lambda + k(3)).pow(3) * (lambda * lambda + lambda * k(11) + k(64));
}

RatFuncQ j_from_mu(const RatFuncQ& mu) {
  const auto k = [&](long v) { return RatFuncQ::constant(Rational(v)); };
  return (mu * mu + mu * k(10) + k(5)).pow(3) / mu;
}

const InvariantFns& build_invariants() {
  static const InvariantFns fns = [] {
    const auto q5 = field_tower<Rational>(FieldName::Qsqrt5);
    const auto c = [&](const Rational& r) { return AlgQ::from_rational(q5, r); };
    const AlgQ sqrt5 = AlgQ::gen(q5, "sqrt5");
    const AlgQ eps = sqrt5 * Rational(1, 2) - c(Rational(1, 2));
    const AlgQ eps_inv = eps.inverse();
    using P5 = Poly<AlgQ>;
    const AlgQ zero = c(Rational(0));
    const P5 f1({c(Rational(1)), zero, c(Rational(1))}, zero);
    const P5 f2({c(Rational(-1)), -(eps * Rational(2)), c(Rational(1))}, zero);
    const P5 f3({c(Rational(-1)), eps_inv * Rational(2), c(Rational(1))}, zero);
    const P5 root = f1 * f2 * f3;
    // −z(z¹⁰ + 11z⁵ − 1)
    std::vector<AlgQ> den(12, zero);
    den[1] = c(Rational(1));
    den[6] = c(Rational(-11));
    den[11] = c(Rational(-1));
    const RatFunc<AlgQ> lam5(root * root, P5(den, zero));
    if (!has_scalar_coeffs(lam5.num()) || !has_scalar_coeffs(lam5.den())) {
      throw std::logic_error("lambda does not descend to Q");
    }
    const RatFuncQ lambda(scalar_part(lam5.num()), scalar_part(lam5.den()));
    const PolyQ mu_den =
        PolyQ::monomial(Rational(1), 10) + PolyQ::monomial(Rational(11), 5) - PolyQ::constant(Rational(1));
    const RatFuncQ mu(PolyQ::monomial(Rational(-125), 5), mu_den);
    return InvariantFns{lambda, mu, j_from_mu(mu), lam5};
  }();
  return fns;
}

bool verify_fundamental_identity(const RatFuncQ& lambda, const RatFuncQ& mu) {
  return j_from_lambda(lambda) == j_from_mu(mu);
}

bool verify_fundamental_identity() {
  const auto& f = build_invariants();
  return verify_fundamental_identity(f.lambda, f.mu);
}

RatFuncZ5 lift_to_z5(const RatFuncQ& f) {
  return RatFuncZ5::unnormalized(lift_poly(f.num(), qzeta5()), lift_poly(f.den(), qzeta5()));
}

RatFuncZ5 act(const MobiusGen& g, const RatFuncZ5& f) { return compose(f, as_ratfunc(g)); }

InvarianceCheck invariance_report(GenLabel g) {
  const auto& f = build_invariants();
  const RatFuncZ5 m = as_ratfunc(mobius_gen(g));
  InvarianceCheck r{g};
  const auto check = [&](const RatFuncQ& h) {
    const RatFuncZ5 hz = lift_to_z5(h);
    return same_ratfunc(compose_parts(hz, m), hz);
  };
  r.j_invariant = check(f.j);
  r.mu_invariant = check(f.mu);
  r.lambda_invariant = check(f.lambda);
  return r;
}

bool verify_invariance(GenLabel g) {
  const InvarianceCheck r = invariance_report(g);
  if (g == GenLabel::S) return r.j_invariant && r.mu_invariant && !r.lambda_invariant;
  return r.j_invariant;
}

std::vector<RatFuncZ5> rotated_lambdas() {
  const auto& f = build_invariants();
  std::vector<RatFuncZ5> out;
  for (int nu = 0; nu < 5; ++nu) {
    out.push_back(RatFuncZ5::unnormalized(rotate(f.lambda.num(), nu), rotate(f.lambda.den(), nu)));
  }
  return out;
}

std::vector<RatFuncZ5> resolvent_functions(const Rational& m, const Rational& n, ResolventConvention conv) {
  if (m.is_zero() && n.is_zero()) throw std::invalid_argument("m and n are both zero");
  const auto k = [](const Rational& v) { return RatFuncZ5::constant(rat(v)); };
  std::vector<RatFuncZ5> out;
  for (const auto& lam : rotated_lambdas()) {
    const RatFuncZ5 l3 = lam + k(Rational(3));
    RatFuncZ5 x = k(m) / l3;
    if (!n.is_zero()) x += k(n * n_scale(conv)) / (l3 * (lam * lam + lam * k(Rational(10)) + k(Rational(45))));
    out.push_back(x);
  }
  return out;
}

ResolventCheck check_resolvent_quintic(const Rational& m, const Rational& n, ResolventConvention conv) {
  const auto& f = build_invariants();
  const PolyQ& P = f.lambda.num();
  const PolyQ& Q = f.lambda.den();
  const AlgQ zero = rat(Rational(0));
  // coefficients of ∏(D_ν X − N_ν), lowest power of X first
  std::vector<PolyZ5> prod{PolyZ5::constant(rat(Rational(1)))};
  for (int nu = 0; nu < 5; ++nu) {
    const PolyZ5 Pn = rotate(P, nu);
    const PolyZ5 Qn = rotate(Q, nu);
    const PolyZ5 W = Pn * Pn + Pn * Qn * rat(Rational(10)) + Qn * Qn * rat(Rational(45));
    const PolyZ5 D = (Pn + Qn * rat(Rational(3))) * W;
    const PolyZ5 N = Qn * (W * rat(m) + Qn * Qn * rat(n * n_scale(conv)));
    std::vector<PolyZ5> next(prod.size() + 1, PolyZ5::zero(zero));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += D * prod[i];
      next[i] -= N * prod[i];
    }
    prod = std::move(next);
  }
  ResolventCheck r{m, n, conv};
  r.rational = true;
  for (const auto& c : prod) r.rational = r.rational && has_scalar_coeffs(c);
  if (!r.rational) return r;
  std::vector<PolyQ> c;
  for (const auto& p : prod) c.push_back(scalar_part(p));
  const PolyQ& total = c[5];
  const auto fr = resolvent_fractions<PolyQ>(m, n, f.j.num(), f.j.den(), conv);
  r.e1_zero = c[4].is_zero();
  r.e2_zero = c[3].is_zero();
  r.e3_ok = c[2] * fr.A_den == fr.A_num * total;
  r.e4_ok = c[1] * fr.B_den == fr.B_num * total;
  r.e5_ok = c[0] * fr.C_den == fr.C_num * total;
  return r;
}

bool verify_resolvent_quintic(const Rational& m, const Rational& n, ResolventConvention conv) {
  return check_resolvent_quintic(m, n, conv).pass();
}

std::vector<ResolventCheck> resolvent_grid(ResolventConvention conv) {
  std::vector<ResolventCheck> out;
  for (long m = -2; m <= 3; ++m) {
    for (long n = -2; n <= 3; ++n) out.push_back(check_resolvent_quintic(Rational(m), Rational(n), conv));
  }
  return out;
}

}  // namespace klein5
