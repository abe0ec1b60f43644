#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "klein5/poly.hpp"

namespace klein5 {

/// Quotient num/den of polynomials over a field K.
///
/// Normalized form: gcd(num, den) = 1 and den monic; the zero function is 0/1.
/// Equality is decided by cross-multiplication, so it never depends on normalization.
template <class K>
class RatFunc {
 public:
  RatFunc() requires std::default_initializable<K>
      : num_(), den_(Poly<K>::constant(one_like(K{}))) {}
  explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(num_.one_elem())) {}
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  /// Skips the gcd; callers use this for large intermediate values compared by cross-multiplication.
  static RatFunc unnormalized(Poly<K> num, Poly<K> den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc r(std::move(num));
    r.den_ = std::move(den);
    return r;
  }
  static RatFunc constant(const K& c) { return RatFunc(Poly<K>::constant(c)); }
  static RatFunc variable(const K& like) { return RatFunc(Poly<K>::variable(like)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  const K& zero_elem() const { return num_.zero_elem(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Degree as a map: max(deg num, deg den) of the normalized form.
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  bool is_normalized() const {
    if (!(den_.lead() == den_.one_elem())) return false;
    return gcd(num_, den_).degree() == 0;
  }
  RatFunc normalized() const { return RatFunc(num_, den_); }

  K eval(const K& x) const {
    const K d = den_.eval(x);
    if (detail::scalar_is_zero(d)) throw std::domain_error("rational function has a pole at the evaluation point");
    return num_.eval(x) * inverse(d);
  }

  RatFunc operator-() const { return unnormalized(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(Poly<K>::zero(a.zero_elem()));
    // cross-cancel before multiplying (inputs are assumed normalized)
    const Poly<K> g1 = gcd(a.num_, b.den_);
    const Poly<K> g2 = gcd(b.num_, a.den_);
    Poly<K> n = divmod(a.num_, g1).quot * divmod(b.num_, g2).quot;
    Poly<K> d = divmod(a.den_, g2).quot * divmod(b.den_, g1).quot;
    RatFunc r = unnormalized(std::move(n), std::move(d));
    r.make_den_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.reciprocal(); }
  friend RatFunc operator*(const RatFunc& a, const K& s) {
    RatFunc r = unnormalized(a.num_ * s, a.den_);
    return r;
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("reciprocal of the zero rational function");
    RatFunc r = unnormalized(den_, num_);
    r.make_den_monic();
    return r;
  }

  RatFunc pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    // powers of coprime num/den stay coprime
    return unnormalized(klein5::pow(num_, static_cast<unsigned>(e)),
                        klein5::pow(den_, static_cast<unsigned>(e)));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(zero_elem()))>;
    return RatFunc<R>::unnormalized(num_.map(f), den_.map(f));
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly<K>::constant(num_.one_elem());
      return;
    }
    const Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quot;
      den_ = divmod(den_, g).quot;
    }
    make_den_monic();
  }
  void make_den_monic() {
    if (den_.lead() == den_.one_elem()) return;
    const K c = inverse(den_.lead());
    num_ *= c;
    den_ *= c;
  }

  Poly<K> num_;
  Poly<K> den_;
};

/// Numerator and denominator of f∘g homogenized by gd^k with k = deg f, without gcd.
template <class K>
std::pair<Poly<K>, Poly<K>> compose_parts(const RatFunc<K>& f, const RatFunc<K>& g) {
  const int k = f.degree();
  const K& zero = f.zero_elem();
  std::vector<Poly<K>> gn_pow{Poly<K>::constant(one_like(zero))};
  std::vector<Poly<K>> gd_pow{Poly<K>::constant(one_like(zero))};
  for (int i = 1; i <= k; ++i) {
    gn_pow.push_back(gn_pow.back() * g.num());
    gd_pow.push_back(gd_pow.back() * g.den());
  }
  auto homogenize = [&](const Poly<K>& p) {
    Poly<K> acc = Poly<K>::zero(zero);
    for (int i = 0; i <= p.degree(); ++i) {
      const K& c = p.coeff(static_cast<std::size_t>(i));
      if (is_zero(c)) continue;
      acc += (gn_pow[static_cast<std::size_t>(i)] * gd_pow[static_cast<std::size_t>(k - i)]) * c;
    }
    return acc;
  };
  return {homogenize(f.num()), homogenize(f.den())};
}

/// f(g(x)) for rational functions; normalized result.
template <class K>
RatFunc<K> compose(const RatFunc<K>& f, const RatFunc<K>& g) {
  const auto [num, den] = compose_parts(f, g);
  if (den.is_zero()) throw std::domain_error("composition collapses the denominator to zero");
  return RatFunc<K>(num, den);
}

template <class K>
std::string to_string(const RatFunc<K>& f, const std::string& var) {
  if (f.den().degree() == 0 && f.den().lead() == f.den().one_elem()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// RatFunc<K> as a scalar field (used for a transcendental parameter t).
template <class K>
RatFunc<K> zero_like(const RatFunc<K>& f) { return RatFunc<K>(Poly<K>::zero(f.zero_elem())); }
template <class K>
RatFunc<K> one_like(const RatFunc<K>& f) { return RatFunc<K>::constant(one_like(f.zero_elem())); }
template <class K>
RatFunc<K> lift_like(const RatFunc<K>& f, const Rational& r) {
  return RatFunc<K>::constant(lift_like(f.zero_elem(), r));
}
template <class K>
bool is_zero(const RatFunc<K>& f) { return f.is_zero(); }
template <class K>
RatFunc<K> inverse(const RatFunc<K>& f) { return f.reciprocal(); }
template <class K>
RatFunc<K> exact_div(const RatFunc<K>& a, const RatFunc<K>& b) { return a / b; }
template <class K>
void require_field(const RatFunc<K>&) {}
template <class K>
std::string to_string(const RatFunc<K>& f) { return to_string(f, "t"); }
template <class K>
std::ostream& operator<<(std::ostream& os, const RatFunc<K>& f) { return os << to_string(f, "t"); }

/// Q(t): rational functions in one parameter.
using RatFuncQ = RatFunc<Rational>;

}  // namespace klein5
