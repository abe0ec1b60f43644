#pragma once

#include <optional>
#include <string>

#include "klein5/rational.hpp"

namespace klein5 {

/// A 5-adic valuation; nullopt stands for +∞ (the valuation of 0).
struct Valuation5 {
  std::optional<long> value;

  bool is_infinite() const { return !value.has_value(); }
  friend bool operator==(const Valuation5&, const Valuation5&) = default;
  friend Valuation5 operator+(const Valuation5& a, const Valuation5& b) {
    if (a.is_infinite() || b.is_infinite()) return {};
    return {*a.value + *b.value};
  }
  /// a ≤ b with +∞ the largest element.
  friend bool operator<=(const Valuation5& a, const Valuation5& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return *a.value <= *b.value;
  }
};

std::string to_string(const Valuation5& v);

Valuation5 v5(const Rational& x);

/// v₅(t) = 0 and t mod 5 ∈ {1, 4} (odd residue characteristic: Hensel lifts any square residue).
bool is_square_5adic_unit(const Rational& t);

/// trinomial_t(B, C) exists and is the square of a 5-adic unit. Throws std::invalid_argument
/// for C = 0 (from trinomial_t).
bool theorem_hypothesis(const Rational& B, const Rational& C);

/// y⁴ = 4⁴u⁴/(5⁴(1 + 5(u⁴ + k))) at a rational u, with k = −2.
Rational artin_schreier_y4(const Rational& u, const Rational& k = Rational(-2));

/// v₅(y) = v₅(y⁴)/4; throws std::domain_error when u = 0 or the quartic relation degenerates.
long artin_schreier_y_valuation(const Rational& u);

/// In Q(u)[y]/(y⁴ − 4⁴u⁴/(5⁴(1 + 5(u⁴ + k)))) with t = u², checks
/// q_t(x/(5y/4))·(5y/4)⁵ = x⁵ − x − y as polynomials in x. k = −2 is the identity; other k are
/// mutations.
bool artin_schreier_identity(const Rational& k = Rational(-2));

}  // namespace klein5
