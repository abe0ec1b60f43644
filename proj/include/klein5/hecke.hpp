#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace klein5 {

/// The moduli of ℤ[ε] (ε² = 1 − ε) that carry the characters below.
enum class HeckeModulus { four, eight, sqrt5, eight_sqrt5 };

std::string to_string(HeckeModulus m);
/// "4", "8", "sqrt5", "8sqrt5". Throws std::invalid_argument otherwise.
HeckeModulus hecke_modulus_from_string(const std::string& s);

/// a + bε with (a, b) reduced against the Hermite basis {(A, 0), (s, B)} of the ideal.
struct Residue {
  long a = 0;
  long b = 0;

  friend auto operator<=>(const Residue&, const Residue&) = default;
};

std::string to_string(const Residue& x);

/// N(a + bε) = a² − ab − b².
long norm(long a, long b);

class ResidueRing {
 public:
  explicit ResidueRing(HeckeModulus m);

  HeckeModulus modulus() const { return m_; }
  /// |ℤ[ε]/(m)|.
  long size() const { return A_ * B_; }
  Residue reduce(long a, long b) const;
  Residue one() const { return reduce(1, 0); }
  Residue mul(const Residue& x, const Residue& y) const;
  Residue add(const Residue& x, const Residue& y) const;
  Residue neg(const Residue& x) const;
  /// ε ↦ −1 − ε.
  Residue sigma(const Residue& x) const;
  bool is_unit(const Residue& x) const;
  std::vector<Residue> elements() const;
  std::vector<Residue> units() const;

 private:
  HeckeModulus m_;
  long A_ = 1, s_ = 0, B_ = 1;
};

/// ζ₂₄^exponent.
struct RootOfUnity {
  int exponent = 0;

  RootOfUnity() = default;
  explicit RootOfUnity(long e) : exponent(static_cast<int>(((e % 24) + 24) % 24)) {}
  friend RootOfUnity operator*(RootOfUnity x, RootOfUnity y) { return RootOfUnity(x.exponent + y.exponent); }
  RootOfUnity inverse() const { return RootOfUnity(-exponent); }
  RootOfUnity pow(long n) const { return RootOfUnity(exponent * n); }
  int order() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

std::string to_string(const RootOfUnity& z);

struct Character {
  HeckeModulus modulus;
  std::map<Residue, RootOfUnity> images;

  /// Throws std::out_of_range for a non-unit.
  RootOfUnity operator()(const Residue& x) const;
};

/// Extends the assignment gens ↦ images along the Cayley graph of the unit group.
/// Throws std::invalid_argument when a generator is not a unit, when the generators miss part
/// of the unit group, or when two paths to the same unit give different values.
Character char_from_generators(HeckeModulus m, const std::vector<Residue>& gens,
                               const std::vector<RootOfUnity>& images);

/// χ(xy) = χ(x)χ(y) on all unit pairs.
bool is_multiplicative(const Character& chi);

/// −1 ↦ −1, ε ↦ ζ₆ mod 4.
const Character& omega4();
/// −1 ↦ −1, 1 + 4ε ↦ −1, ε ↦ ζ₁₂ mod 8.
const Character& omega8();
/// ε ↦ ζ₄ mod √5.
const Character& omega5_hecke();

/// ω₄³ω₈³ω₅ on units mod 8√5 through the projections to mod 4, mod 8 and mod √5.
const Character& omega();

/// Projections of a residue mod 8√5.
Residue project(const Residue& x, HeckeModulus to);

/// (−2/n) for odd n.
int kronecker_minus2(long n);
/// (−1/n) for odd n.
int chi_minus4(long n);
/// Dirichlet character mod 5 with 2 ↦ ζ₄. Throws std::domain_error on multiples of 5.
RootOfUnity teichmuller5(long n);

struct IdentityCheck {
  std::size_t units = 0;
  std::size_t failures = 0;
  bool pass() const { return units > 0 && failures == 0; }
};

/// ω(σx)ω(x)⁻¹ = (−2/N(x)) on every unit mod 8√5.
IdentityCheck check_sigma_identity();
bool verify_sigma_identity();
/// ω(x)² = (−1/N(x))·ω₅(N(x))⁻¹ on every unit mod 8√5.
IdentityCheck check_square_identity();
bool verify_square_identity();

struct PositiveUnitCheck {
  RootOfUnity omega_eps;     // ω(ε)
  RootOfUnity omega_eps2;    // ω(ε²)
  std::vector<int> value_group;  // exponents taken by ω, ascending
  bool pass() const { return omega_eps2 == RootOfUnity(0); }
};

PositiveUnitCheck check_positive_units();
bool verify_positive_units();

/// The Hecke ω₅ at a rational residue a mod √5 equals the Teichmüller value.
bool verify_omega5_compatibility();

}  // namespace klein5
