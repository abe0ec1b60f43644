#include "klein5/localfield.hpp"

#include <stdexcept>

#include "klein5/algebra.hpp"
#include "klein5/quintic.hpp"

namespace klein5 {

std::string to_string(const Valuation5& v) { return v.is_infinite() ? "+inf" : std::to_string(*v.value); }

Valuation5 v5(const Rational& x) {
  if (x.is_zero()) return {};
  return {valuation(x, 5)};
}

bool is_square_5adic_unit(const Rational& t) {
  const Valuation5 v = v5(t);
  if (v.is_infinite() || *v.value != 0) return false;
  const unsigned long r = reduce_mod(t, 5);
  return r == 1 || r == 4;
}

bool theorem_hypothesis(const Rational& B, const Rational& C) {
  const auto t = trinomial_t(B, C);
  return t.has_value() && is_square_5adic_unit(*t);
}

Rational artin_schreier_y4(const Rational& u, const Rational& k) {
  const Rational den = Rational(625) * (Rational(1) + Rational(5) * (u.pow(4) + k));
  if (den.is_zero()) throw std::domain_error("quartic relation degenerates at this u");
  return Rational(256) * u.pow(4) / den;
}

long artin_schreier_y_valuation(const Rational& u) {
  if (u.is_zero()) throw std::domain_error("u must be nonzero");
  const long v = valuation(artin_schreier_y4(u), 5);
  if (v % 4 != 0) throw std::domain_error("v5(y^4) is not divisible by 4");
  return v / 4;
}

bool artin_schreier_identity(const Rational& k) {
  const RatFuncQ u = RatFuncQ::variable(Rational(0));
  const auto c = [](long v) { return RatFuncQ::constant(Rational(v)); };
  const RatFuncQ u4 = u.pow(4);
  const RatFuncQ y4 = c(256) * u4 / (c(625) * (c(1) + c(5) * (u4 + RatFuncQ::constant(k))));
  const auto alg = pure_extension<RatFuncQ>(y4, 4, "Q(u)[y]/(y^4 - y4(u))", "y", {"u"}, false);
  using E = AlgElement<RatFuncQ>;
  const E y = E::gen(alg, "y");
  const E t = E::scalar(alg, u * u);
  const auto [B, C] = family_coeffs(t);
  const E s = y * RatFuncQ::constant(Rational(5, 4));  // x ↦ x/s, then clear s⁵
  const E s4 = s.pow(4);
  // q_t(x/s)·s⁵ = x⁵ + B s⁴ x + C s⁵
  const E one = E::from_rational(alg, Rational(1));
  return B * s4 == -one && C * s4 * s == -y;
}

}  // namespace klein5
