#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klein5/rational.hpp"

namespace klein5 {

// Coefficient rings plug in through free functions found by ADL:
//   zero_like, one_like, lift_like, is_zero, inverse, exact_div, to_string, require_field.
// require_field defaults to "ok" for scalar types that are always fields.
inline void require_field(const Rational&) {}

namespace detail {
// Unqualified call so ADL picks the overload for T at instantiation; member functions named
// is_zero would otherwise hide it.
template <class T>
bool scalar_is_zero(const T& x) { return is_zero(x); }
}  // namespace detail

/// Product kernel for dense coefficient vectors; specialized where a faster path exists.
template <class K>
struct PolyMulKernel {
  static std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b, const K& zero) {
    std::vector<K> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
};

// Clears denominators and multiplies over Z.
template <>
struct PolyMulKernel<Rational> {
  static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const Rational& zero);
};

/// Dense univariate polynomial, lowest degree first. The zero polynomial has no coefficients
/// but still carries a zero of its coefficient ring, so ring context survives empty values.
template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() requires std::default_initializable<K> : zero_(zero_like(K{})) {}
  Poly(std::initializer_list<K> c) requires std::default_initializable<K>
      : c_(c), zero_(zero_like(K{})) { trim(); }
  explicit Poly(std::vector<K> c) requires std::default_initializable<K>
      : c_(std::move(c)), zero_(zero_like(K{})) { trim(); }
  Poly(std::vector<K> c, K zero) : c_(std::move(c)), zero_(std::move(zero)) { trim(); }

  static Poly zero(const K& like) { return Poly({}, zero_like(like)); }
  static Poly constant(const K& c) { return Poly({c}, zero_like(c)); }
  static Poly monomial(const K& c, std::size_t deg) {
    std::vector<K> v(deg + 1, zero_like(c));
    v[deg] = c;
    return Poly(std::move(v), zero_like(c));
  }
  static Poly variable(const K& like) { return monomial(one_like(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const K& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const K& zero_elem() const { return zero_; }
  K one_elem() const { return one_like(zero_); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const K& s) {
    if (detail::scalar_is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly({}, a.zero_);
    return Poly(PolyMulKernel<K>::mul(a.c_, b.c_, a.zero_), a.zero_);
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  K eval(const K& x) const {
    K acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly({}, zero_);
    std::vector<K> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * lift_like(zero_, Rational(i)));
    return Poly(std::move(d), zero_);
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    require_field(zero_);
    return *this * inverse(c_.back());
  }

  /// Multiplies by x^k.
  Poly shift(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<K> v(k, zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v), zero_);
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(zero_))>;
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return Poly<R>(std::move(v), f(zero_));
  }

  /// Replaces coefficient i (extending with zeros when needed).
  void set_coeff(std::size_t i, K value) {
    if (i >= c_.size()) c_.resize(i + 1, zero_);
    c_[i] = std::move(value);
    trim();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
  K zero_;
};

template <class K>
struct DivMod {
  Poly<K> quot;
  Poly<K> rem;
};

/// Euclidean division over a field.
template <class K>
DivMod<K> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  require_field(b.zero_elem());
  const int db = b.degree();
  if (a.degree() < db) return {Poly<K>::zero(a.zero_elem()), a};
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), a.zero_elem());
  const K inv_lc = inverse(b.lead());
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= db; --d) {
    const K& top = r[static_cast<std::size_t>(d)];
    if (is_zero(top)) continue;
    const K c = top * inv_lc;
    const std::size_t shift = static_cast<std::size_t>(d - db);
    q[shift] = c;
    for (int i = 0; i < db; ++i) r[shift + static_cast<std::size_t>(i)] -= c * bc[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(d)] = a.zero_elem();
  }
  return {Poly<K>(std::move(q), a.zero_elem()), Poly<K>(std::move(r), a.zero_elem())};
}

/// Division over an integral domain where the quotient is known to be exact.
/// Throws std::domain_error if a nonzero remainder appears.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return a;
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), a.zero_elem());
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= db; --d) {
    const K& top = r[static_cast<std::size_t>(d)];
    if (is_zero(top)) continue;
    const K c = exact_div(top, b.lead());
    const std::size_t shift = static_cast<std::size_t>(d - db);
    q[shift] = c;
    for (int i = 0; i < db; ++i) r[shift + static_cast<std::size_t>(i)] -= c * bc[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(d)] = a.zero_elem();
  }
  for (const auto& x : r) {
    if (!is_zero(x)) throw std::domain_error("inexact polynomial division");
  }
  return Poly<K>(std::move(q), a.zero_elem());
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without division.
template <class K>
Poly<K> pseudo_remainder(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const int rounds = a.degree() - db + 1;
  const K& lb = b.lead();
  Poly<K> r = a;
  int used = 0;
  while (!r.is_zero() && r.degree() >= db) {
    const K c = r.lead();
    const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
    r = r * lb - (b * c).shift(shift);
    ++used;
  }
  for (int i = used; i < rounds; ++i) r *= lb;
  return r;
}

/// Monic gcd over a field; gcd(p, 0) = monic(p).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  require_field(a.zero_elem());
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    b = b.monic();
    Poly<K> r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p(q(x)).
template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& q) {
  Poly<K> acc = Poly<K>::zero(p.zero_elem());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly<K>::constant(*it);
  return acc;
}

template <class K>
Poly<K> pow(const Poly<K>& p, unsigned e) {
  Poly<K> result = Poly<K>::constant(p.one_elem());
  Poly<K> base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

/// Monic g with g^2 = p for monic p of even degree; nullopt when p is not such a square.
template <class K>
std::optional<Poly<K>> monic_square_root(const Poly<K>& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return std::nullopt;
  if (!(p.lead() == p.one_elem())) throw std::invalid_argument("monic_square_root needs a monic input");
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  std::vector<K> g(d + 1, p.zero_elem());
  g[d] = p.one_elem();
  const K half = inverse(lift_like(p.zero_elem(), Rational(2)));
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t target = 2 * d - k;
    K acc = p.coeff(target);
    for (std::size_t i = d - k + 1; i < d; ++i) {
      const std::size_t j = target - i;
      if (j > d - k && j < d) acc -= g[i] * g[j];
    }
    g[d - k] = acc * half;
  }
  Poly<K> root(std::move(g), p.zero_elem());
  if (!(root * root == p)) return std::nullopt;
  return root;
}

template <class K>
std::string to_string(const Poly<K>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const K& c = p.coeff(static_cast<std::size_t>(i));
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = to_string(c);
    if (i == 0) {
      os << cs;
    } else {
      if (!(c == p.one_elem())) os << "(" << cs << ")*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// Poly<K> is itself a coefficient ring (an integral domain when K is); used for resultants
// over Q[S].
template <class K>
Poly<K> zero_like(const Poly<K>& p) { return Poly<K>::zero(p.zero_elem()); }
template <class K>
Poly<K> one_like(const Poly<K>& p) { return Poly<K>::constant(p.one_elem()); }
template <class K>
Poly<K> lift_like(const Poly<K>& p, const Rational& r) {
  return Poly<K>::constant(lift_like(p.zero_elem(), r));
}
template <class K>
bool is_zero(const Poly<K>& p) { return p.is_zero(); }
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) { return exact_quotient(a, b); }
template <class K>
void require_field(const Poly<K>&) {
  throw std::domain_error("polynomial ring is not a field");
}
template <class K>
std::string to_string(const Poly<K>& p) { return to_string(p, "x"); }
template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) { return os << to_string(p, "x"); }

}  // namespace klein5
