#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "klein5/rational.hpp"

namespace klein5 {

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for a prime p < 2⁶²; elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws std::domain_error on 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }
  /// 1, −1 or 0.
  int legendre(std::uint64_t a) const;
  /// A square root by Tonelli–Shanks, when one exists.
  std::optional<std::uint64_t> sqrt(std::uint64_t a) const;
  std::uint64_t from_int(long long v) const;
  /// Throws std::domain_error when p divides the denominator.
  std::uint64_t from_rational(const Rational& r) const;
  std::uint64_t uniform(std::mt19937_64& rng) const;

  /// Polynomial (low degree first) evaluated at x.
  std::uint64_t eval(const std::vector<std::uint64_t>& poly, std::uint64_t x) const;

 private:
  std::uint64_t p_;
};

}  // namespace klein5
