#pragma once

#include <array>
#include <string>
#include <vector>

#include "klein5/algebra.hpp"
#include "klein5/quintic.hpp"
#include "klein5/ratfunc.hpp"

namespace klein5 {

using RatFuncZ5 = RatFunc<AlgQ>;  // rational functions in z over Q(ζ₅)

enum class GenLabel { S, T, U };

std::string to_string(GenLabel g);
GenLabel gen_label_from_string(const std::string& s);

/// z ↦ (az + b)/(cz + d) with matrix {a, b, c, d} over Q(ζ₅).
struct MobiusGen {
  GenLabel label;
  std::array<AlgQ, 4> matrix;
};

/// S z = ζ₅ z, T z = (εz + 1)/(z − ε), U z = −1/z, with ε = ζ₅ + ζ₅⁴.
MobiusGen mobius_gen(GenLabel g);
RatFuncZ5 as_ratfunc(const MobiusGen& g);

/// Q(ζ₅) as used throughout this module (one shared instance).
const AlgebraPtr<Rational>& qzeta5();

struct InvariantFns {
  RatFuncQ lambda;  // degree 12
  RatFuncQ mu;      // degree 10
  RatFuncQ j;       // degree 60, built from μ
  RatFunc<AlgQ> lambda_sqrt5;  // λ as first assembled over Q(√5), before descending to Q
};

/// λ, μ and j = (μ² + 10μ + 5)³/μ. λ is assembled over Q(√5) from its factored display and
/// then shown to have rational coefficients (std::logic_error otherwise).
const InvariantFns& build_invariants();

/// (λ+3)³(λ²+11λ+64) as a rational function.
RatFuncQ j_from_lambda(const RatFuncQ& lambda);
/// (μ²+10μ+5)³/μ as a rational function.
RatFuncQ j_from_mu(const RatFuncQ& mu);

/// Both expressions for j agree identically.
bool verify_fundamental_identity();
bool verify_fundamental_identity(const RatFuncQ& lambda, const RatFuncQ& mu);

RatFuncZ5 lift_to_z5(const RatFuncQ& f);
/// f∘g over Q(ζ₅), normalized.
RatFuncZ5 act(const MobiusGen& g, const RatFuncZ5& f);

struct InvarianceCheck {
  GenLabel gen;
  bool j_invariant = false;
  bool mu_invariant = false;
  bool lambda_invariant = false;
};

InvarianceCheck invariance_report(GenLabel g);
/// j∘g = j; for S additionally μ∘S = μ and λ∘S ≠ λ.
bool verify_invariance(GenLabel g);

/// λ(ζ₅^ν z), ν = 0..4.
std::vector<RatFuncZ5> rotated_lambdas();

/// x_ν = m/(λ_ν+3) + c·n/((λ_ν+3)(λ_ν²+10λ_ν+45)) with c = 1 (displayed) or 12 (consistent).
std::vector<RatFuncZ5> resolvent_functions(const Rational& m, const Rational& n,
                                           ResolventConvention conv = ResolventConvention::displayed);

struct ResolventCheck {
  Rational m;
  Rational n;
  ResolventConvention convention = ResolventConvention::displayed;
  bool rational = false;  // ∏(X − x_ν) has coefficients over Q(z)
  bool e1_zero = false;
  bool e2_zero = false;
  bool e3_ok = false;  // e₃ = −A
  bool e4_ok = false;  // e₄ = B
  bool e5_ok = false;  // e₅ = −C
  bool pass() const { return rational && e1_zero && e2_zero && e3_ok && e4_ok && e5_ok; }
};

/// Symmetric functions of x₀..x₄ compared with A, B, C at J = j(z). Works with the cleared
/// numerators: with x_ν = N_ν/D_ν, ∏(D_ν X − N_ν) = (∏D_ν)·(X⁵ + AX² + BX + C) is checked
/// coefficientwise after multiplying through by the denominators of A, B, C.
ResolventCheck check_resolvent_quintic(const Rational& m, const Rational& n,
                                       ResolventConvention conv = ResolventConvention::displayed);
bool verify_resolvent_quintic(const Rational& m, const Rational& n,
                              ResolventConvention conv = ResolventConvention::displayed);

/// The 6×6 grid m, n ∈ {−2, −1, 0, 1, 2, 3}: every symmetric function is a polynomial of total
/// degree ≤ 5 in (m, n), so agreement on the grid is agreement identically.
std::vector<ResolventCheck> resolvent_grid(ResolventConvention conv);

}  // namespace klein5
