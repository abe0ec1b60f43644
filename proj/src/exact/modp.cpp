#include "klein5/modp.hpp"

#include <stdexcept>

namespace klein5 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller–Rabin for 64-bit inputs
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 62) || !is_prime(p)) throw std::invalid_argument("PrimeField needs a prime below 2^62");
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p_ - 2);
}

int PrimeField::legendre(std::uint64_t a) const {
  a %= p_;
  if (a == 0) return 0;
  if (p_ == 2) return 1;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
  a %= p_;
  if (a == 0) return 0;
  if (p_ == 2) return a;
  if (legendre(a) != 1) return std::nullopt;
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(z) != -1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = pow(z, q);
  std::uint64_t t = pow(a, q);
  std::uint64_t r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::uint64_t PrimeField::from_int(long long v) const {
  const long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::from_rational(const Rational& r) const {
  const mpz_class pm(static_cast<unsigned long>(p_));
  const mpz_class den = r.den() % pm;
  if (den == 0) throw std::domain_error("denominator divisible by p");
  mpz_class num = r.num() % pm;
  if (num < 0) num += pm;
  return div(num.get_ui(), den.get_ui());
}

std::uint64_t PrimeField::uniform(std::mt19937_64& rng) const {
  // rejection sampling keeps the distribution exact and independent of the library's distributions
  const std::uint64_t limit = ~0ULL - (~0ULL % p_);
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % p_;
}

std::uint64_t PrimeField::eval(const std::vector<std::uint64_t>& poly, std::uint64_t x) const {
  std::uint64_t r = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = add(mul(r, x), *it);
  return r;
}

}  // namespace klein5
