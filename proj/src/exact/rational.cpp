#include "klein5/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace klein5 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::optional<mpz_class> int_root(const mpz_class& n, unsigned k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rational> sqrt_exact(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto n = int_root(x.num(), 2);
  auto d = int_root(x.den(), 2);
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::optional<Rational> root_exact(const Rational& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (x.sign() < 0 && k % 2 == 0) return std::nullopt;
  const mpz_class an = abs(x.num());
  auto n = int_root(an, k);
  auto d = int_root(x.den(), k);
  if (!n || !d) return std::nullopt;
  return Rational(x.sign() < 0 ? mpz_class(-*n) : *n, *d);
}

long valuation(const Rational& x, unsigned long p) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  const mpz_class pz(p);
  auto count = [&](mpz_class n) {
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
      n /= pz;
      ++v;
    }
    return v;
  };
  return count(abs(x.num())) - count(x.den());
}

unsigned long reduce_mod(const Rational& x, unsigned long p) {
  const mpz_class pz(p);
  mpz_class d = x.den() % pz;
  if (d == 0) throw std::domain_error("denominator divisible by p=" + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (x.num() * inv) % pz;
  if (r < 0) r += pz;
  return r.get_ui();
}

}  // namespace klein5
