#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace klein5 {

/// Exact fraction with canonical form: gcd(|num|, den) = 1 and den > 0.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }
  mpq_class& raw() { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_one() const { return v_ == 1; }

  std::string to_string() const;

  Rational inverse() const;
  Rational pow(long e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);

/// Nonnegative rational square root when x is a square in Q; nullopt otherwise.
std::optional<Rational> sqrt_exact(const Rational& x);

/// Real k-th root in Q (sign preserved for odd k); nullopt if none exists.
std::optional<Rational> root_exact(const Rational& x, unsigned k);

/// Exponent of the prime p in a nonzero rational.
long valuation(const Rational& x, unsigned long p);

/// Image of x in Z/p; throws std::domain_error when p divides the denominator.
unsigned long reduce_mod(const Rational& x, unsigned long p);

// Scalar protocol used by the generic polynomial and algebra code.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational lift_like(const Rational&, const Rational& r) { return r; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace klein5
