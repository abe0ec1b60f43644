#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "klein5/poly.hpp"
#include "klein5/ratfunc.hpp"

namespace klein5 {

enum class FieldName { Q, Qsqrt5, Qzeta5, QepsI, Qsqrt5sqrtm2, F5, Custom };

/// Parses "Q", "Qsqrt5", "Qzeta5", "QepsI", "Qsqrt5sqrtm2", "F5". Throws std::invalid_argument otherwise.
FieldName field_name_from_string(const std::string& name);
std::string to_string(FieldName name);

/// Rational data describing one of the fixed algebras; lifted to a scalar domain by field_tower.
struct AlgebraTable {
  FieldName name = FieldName::Custom;
  std::string label;
  std::vector<std::string> basis;
  // table[i][j] = coordinates of basis[i]*basis[j]
  std::vector<std::vector<std::vector<Rational>>> table;
  // matrices acting on coordinate vectors (column k = image of basis[k])
  std::optional<std::vector<std::vector<Rational>>> sqrt5_conj;
  std::optional<std::vector<std::vector<Rational>>> complex_conj;
  unsigned long characteristic = 0;
};

AlgebraTable fixed_algebra_table(FieldName name);

namespace detail {

inline Rational scale(const Rational& x, const Rational& c) { return x * c; }
template <class K>
RatFunc<K> scale(const RatFunc<K>& x, const Rational& c) {
  if (c.is_zero()) return zero_like(x);
  return x * lift_like(x.zero_elem(), c);
}

inline Rational lift_scalar(const Rational&, const Rational& r) { return r; }
template <class K>
RatFunc<K> lift_scalar(const RatFunc<K>& like, const Rational& r) { return lift_like(like, r); }

}  // namespace detail

/// Finite-dimensional commutative algebra over a scalar field S, given by structure constants.
/// basis[0] is always the unit. The constructor checks commutativity, associativity and the unit
/// on every basis pair/triple and throws std::invalid_argument on failure.
template <class S>
class Algebra {
 public:
  struct Term {
    std::size_t k;
    S coef;
    int unit;  // +1 / -1 when coef is ±1, else 0
  };

  Algebra(FieldName name, std::string label, std::vector<std::string> basis,
          std::vector<std::vector<std::vector<S>>> table, S scalar_zero, std::vector<std::string> params = {},
          unsigned long characteristic = 0, bool is_field = true)
      : name_(name),
        label_(std::move(label)),
        basis_(std::move(basis)),
        params_(std::move(params)),
        table_(std::move(table)),
        zero_(std::move(scalar_zero)),
        characteristic_(characteristic),
        is_field_(is_field) {
    const std::size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("algebra needs a nonempty basis");
    if (table_.size() != n) throw std::invalid_argument("multiplication table has wrong shape");
    sparse_.assign(n, std::vector<std::vector<Term>>(n));
    const S one = one_like(zero_);
    const S minus_one = -one;
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[i].size() != n) throw std::invalid_argument("multiplication table has wrong shape");
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i][j].size() != n) throw std::invalid_argument("multiplication table has wrong shape");
        for (std::size_t k = 0; k < n; ++k) {
          const S& c = table_[i][j][k];
          if (is_zero(c)) continue;
          const int u = (c == one) ? 1 : (c == minus_one ? -1 : 0);
          sparse_[i][j].push_back(Term{k, c, u});
        }
      }
    }
    verify_table();
  }

  FieldName name() const { return name_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t dim() const { return basis_.size(); }
  const S& scalar_zero() const { return zero_; }
  unsigned long characteristic() const { return characteristic_; }
  bool is_field() const { return is_field_; }
  const std::vector<std::vector<std::vector<S>>>& table() const { return table_; }
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return sparse_[i][j]; }

  const std::optional<std::vector<std::vector<Rational>>>& sqrt5_conj() const { return sqrt5_conj_; }
  const std::optional<std::vector<std::vector<Rational>>>& complex_conj() const { return complex_conj_; }
  void set_sqrt5_conj(std::vector<std::vector<Rational>> m) { sqrt5_conj_ = std::move(m); }
  void set_complex_conj(std::vector<std::vector<Rational>> m) { complex_conj_ = std::move(m); }

  /// Index of a basis symbol; throws if absent.
  std::size_t index_of(const std::string& symbol) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] == symbol) return i;
    }
    throw std::invalid_argument("algebra " + label_ + " has no basis element '" + symbol + "'");
  }

  bool same_as(const Algebra& o) const {
    return this == &o || (label_ == o.label_ && basis_ == o.basis_ && params_ == o.params_);
  }

 private:
  // coordinates of (e_i e_j) e_k and e_i (e_j e_k)
  std::vector<S> basis_prod(std::size_t i, const std::vector<S>& v) const {
    std::vector<S> r(dim(), zero_);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& t : sparse_[i][j]) r[t.k] += t.coef * v[j];
    }
    return r;
  }

  void verify_table() const {
    const std::size_t n = dim();
    const S one = one_like(zero_);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<S> e(n, zero_);
      e[i] = one;
      if (!(table_[0][i] == e)) throw std::invalid_argument(label_ + ": basis[0] is not the unit");
      for (std::size_t j = 0; j < n; ++j) {
        if (!(table_[i][j] == table_[j][i])) throw std::invalid_argument(label_ + ": table not commutative");
        for (std::size_t k = 0; k < n; ++k) {
          // (e_i e_j) e_k versus e_i (e_j e_k); commutativity lets both be left multiplications
          std::vector<S> lhs(n, zero_);
          for (std::size_t m = 0; m < n; ++m) {
            const S& c = table_[i][j][m];
            if (is_zero(c)) continue;
            for (std::size_t q = 0; q < n; ++q) lhs[q] += c * table_[m][k][q];
          }
          const std::vector<S> rhs = basis_prod(i, table_[j][k]);
          if (!(lhs == rhs)) throw std::invalid_argument(label_ + ": table not associative");
        }
      }
    }
  }

  FieldName name_;
  std::string label_;
  std::vector<std::string> basis_;
  std::vector<std::string> params_;
  std::vector<std::vector<std::vector<S>>> table_;
  std::vector<std::vector<std::vector<Term>>> sparse_;
  S zero_;
  unsigned long characteristic_;
  bool is_field_;
  std::optional<std::vector<std::vector<Rational>>> sqrt5_conj_;
  std::optional<std::vector<std::vector<Rational>>> complex_conj_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

/// Element of an Algebra<S>, stored as its coordinate vector.
template <class S>
class AlgElement {
 public:
  AlgElement(AlgebraPtr<S> alg, std::vector<S> coords) : alg_(std::move(alg)), c_(std::move(coords)) {
    if (!alg_) throw std::invalid_argument("element without an algebra");
    if (c_.size() != alg_->dim()) throw std::invalid_argument("coordinate vector length does not match algebra");
    reduce();
  }

  static AlgElement zero(const AlgebraPtr<S>& alg) {
    return AlgElement(alg, std::vector<S>(alg->dim(), alg->scalar_zero()));
  }
  static AlgElement scalar(const AlgebraPtr<S>& alg, const S& s) {
    std::vector<S> v(alg->dim(), alg->scalar_zero());
    v[0] = s;
    return AlgElement(alg, std::move(v));
  }
  static AlgElement from_rational(const AlgebraPtr<S>& alg, const Rational& r) {
    return scalar(alg, detail::lift_scalar(alg->scalar_zero(), r));
  }
  static AlgElement basis_element(const AlgebraPtr<S>& alg, std::size_t k) {
    std::vector<S> v(alg->dim(), alg->scalar_zero());
    v.at(k) = one_like(alg->scalar_zero());
    return AlgElement(alg, std::move(v));
  }
  static AlgElement gen(const AlgebraPtr<S>& alg, const std::string& symbol) {
    return basis_element(alg, alg->index_of(symbol));
  }
  /// Builds an element from rational coordinates.
  static AlgElement from_rationals(const AlgebraPtr<S>& alg, const std::vector<Rational>& q) {
    if (q.size() != alg->dim()) throw std::invalid_argument("coordinate vector length does not match algebra");
    std::vector<S> v;
    v.reserve(q.size());
    for (const auto& x : q) v.push_back(detail::lift_scalar(alg->scalar_zero(), x));
    return AlgElement(alg, std::move(v));
  }

  const AlgebraPtr<S>& algebra() const { return alg_; }
  const std::vector<S>& coords() const { return c_; }
  const S& coord(std::size_t k) const { return c_.at(k); }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!detail::scalar_is_zero(x)) return false;
    }
    return true;
  }
  /// True when every non-unit coordinate vanishes.
  bool is_scalar() const {
    for (std::size_t k = 1; k < c_.size(); ++k) {
      if (!detail::scalar_is_zero(c_[k])) return false;
    }
    return true;
  }

  AlgElement operator-() const {
    AlgElement r = *this;
    for (auto& x : r.c_) x = -x;
    r.reduce();
    return r;
  }
  AlgElement& operator+=(const AlgElement& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    reduce();
    return *this;
  }
  AlgElement& operator-=(const AlgElement& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    reduce();
    return *this;
  }
  AlgElement& operator*=(const AlgElement& o) { return *this = *this * o; }
  AlgElement& operator/=(const AlgElement& o) { return *this = *this * o.inverse(); }

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    a.check_same(b);
    const std::size_t n = a.c_.size();
    std::vector<S> r(n, a.alg_->scalar_zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (detail::scalar_is_zero(b.c_[j])) continue;
        const S p = a.c_[i] * b.c_[j];
        for (const auto& t : a.alg_->product_terms(i, j)) {
          if (t.unit == 1) {
            r[t.k] += p;
          } else if (t.unit == -1) {
            r[t.k] -= p;
          } else {
            r[t.k] += t.coef * p;
          }
        }
      }
    }
    return AlgElement(a.alg_, std::move(r));
  }
  friend AlgElement operator/(const AlgElement& a, const AlgElement& b) { return a * b.inverse(); }
  friend AlgElement operator*(AlgElement a, const S& s) {
    for (auto& x : a.c_) x = x * s;
    a.reduce();
    return a;
  }

  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    if (!a.alg_->same_as(*b.alg_)) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
  }

  /// Matrix of multiplication by this element (column j = this * basis[j]).
  std::vector<std::vector<S>> mult_matrix() const {
    const std::size_t n = c_.size();
    std::vector<std::vector<S>> m(n, std::vector<S>(n, alg_->scalar_zero()));
    for (std::size_t j = 0; j < n; ++j) {
      const AlgElement col = *this * basis_element(alg_, j);
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    return m;
  }

  /// Multiplicative inverse by solving (mult matrix) x = 1. Throws std::domain_error when singular.
  AlgElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + alg_->label());
    const std::size_t n = c_.size();
    if (alg_->characteristic() != 0) {
      if constexpr (std::is_same_v<S, Rational>) {
        if (n != 1) throw std::domain_error("inverse only supported for prime fields in positive characteristic");
        return AlgElement(alg_, {Rational(reduce_mod(c_[0].inverse(), alg_->characteristic()))});
      }
    }
    if (is_scalar()) return scalar(alg_, klein5::inverse(c_[0]));
    auto m = mult_matrix();
    std::vector<S> rhs(n, alg_->scalar_zero());
    rhs[0] = one_like(alg_->scalar_zero());
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && detail::scalar_is_zero(m[piv][col])) ++piv;
      if (piv == n) throw std::domain_error("element is not invertible in " + alg_->label());
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
      const S inv = klein5::inverse(m[col][col]);
      for (std::size_t k = col; k < n; ++k) m[col][k] = m[col][k] * inv;
      rhs[col] = rhs[col] * inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || detail::scalar_is_zero(m[r][col])) continue;
        const S f = m[r][col];
        for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        rhs[r] -= f * rhs[col];
      }
    }
    return AlgElement(alg_, std::move(rhs));
  }

  AlgElement pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgElement result = from_rational(alg_, Rational(1));
    AlgElement base = *this;
    while (e) {
      if (e & 1L) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Applies a Q-linear map given as a rational matrix (column k = image of basis[k]).
  AlgElement apply_matrix(const std::vector<std::vector<Rational>>& mat) const {
    const std::size_t n = c_.size();
    std::vector<S> r(n, alg_->scalar_zero());
    for (std::size_t k = 0; k < n; ++k) {
      if (detail::scalar_is_zero(c_[k])) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& a = mat[i][k];
        if (a.is_zero()) continue;
        r[i] += detail::scale(c_[k], a);
      }
    }
    return AlgElement(alg_, std::move(r));
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (detail::scalar_is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      const std::string cs = klein5::to_string(c_[k]);
      if (k == 0) {
        os << cs;
      } else if (c_[k] == one_like(c_[k])) {
        os << alg_->basis()[k];
      } else {
        os << "(" << cs << ")*" << alg_->basis()[k];
      }
    }
    return first ? "0" : os.str();
  }

 private:
  void check_same(const AlgElement& o) const {
    if (alg_ != o.alg_ && !alg_->same_as(*o.alg_)) {
      throw std::invalid_argument("mixing elements of " + alg_->label() + " and " + o.alg_->label());
    }
  }
  void reduce() {
    if (alg_->characteristic() == 0) return;
    if constexpr (std::is_same_v<S, Rational>) {
      for (auto& x : c_) x = Rational(reduce_mod(x, alg_->characteristic()));
    } else {
      throw std::logic_error("positive characteristic needs rational coordinates");
    }
  }

  AlgebraPtr<S> alg_;
  std::vector<S> c_;
};

using AlgQ = AlgElement<Rational>;
using AlgQt = AlgElement<RatFuncQ>;

// Scalar protocol for algebra elements.
template <class S>
AlgElement<S> zero_like(const AlgElement<S>& x) { return AlgElement<S>::zero(x.algebra()); }
template <class S>
AlgElement<S> one_like(const AlgElement<S>& x) { return AlgElement<S>::from_rational(x.algebra(), Rational(1)); }
template <class S>
AlgElement<S> lift_like(const AlgElement<S>& x, const Rational& r) {
  return AlgElement<S>::from_rational(x.algebra(), r);
}
template <class S>
bool is_zero(const AlgElement<S>& x) { return x.is_zero(); }
template <class S>
AlgElement<S> inverse(const AlgElement<S>& x) { return x.inverse(); }
template <class S>
AlgElement<S> exact_div(const AlgElement<S>& a, const AlgElement<S>& b) { return a / b; }
template <class S>
void require_field(const AlgElement<S>& x) {
  if (!x.algebra()->is_field()) throw std::domain_error(x.algebra()->label() + " has zero divisors");
}
template <class S>
std::string to_string(const AlgElement<S>& x) { return x.to_string(); }
template <class S>
std::ostream& operator<<(std::ostream& os, const AlgElement<S>& x) { return os << x.to_string(); }

/// Polynomial products over an algebra: one product per pair of coordinate polynomials,
/// recombined through the structure constants. Far cheaper than coefficientwise algebra products
/// when S = Rational, since those products use the integer kernel.
template <class S>
struct PolyMulKernel<AlgElement<S>> {
  static std::vector<AlgElement<S>> mul(const std::vector<AlgElement<S>>& a, const std::vector<AlgElement<S>>& b,
                                        const AlgElement<S>& zero) {
    const auto& alg = zero.algebra();
    const std::size_t n = alg->dim();
    const S& sz = alg->scalar_zero();
    auto split = [&](const std::vector<AlgElement<S>>& v) {
      std::vector<std::vector<S>> parts(n, std::vector<S>(v.size(), sz));
      std::vector<bool> nonzero(n, false);
      for (std::size_t d = 0; d < v.size(); ++d) {
        for (std::size_t k = 0; k < n; ++k) {
          parts[k][d] = v[d].coord(k);
          if (!is_zero(parts[k][d])) nonzero[k] = true;
        }
      }
      return std::pair{parts, nonzero};
    };
    const auto [pa, nza] = split(a);
    const auto [pb, nzb] = split(b);
    const std::size_t len = a.size() + b.size() - 1;
    std::vector<std::vector<S>> out(n, std::vector<S>(len, sz));
    for (std::size_t i = 0; i < n; ++i) {
      if (!nza[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!nzb[j]) continue;
        const std::vector<S> p = PolyMulKernel<S>::mul(pa[i], pb[j], sz);
        for (const auto& t : alg->product_terms(i, j)) {
          auto& dst = out[t.k];
          for (std::size_t d = 0; d < len; ++d) {
            if (is_zero(p[d])) continue;
            if (t.unit == 1) {
              dst[d] += p[d];
            } else if (t.unit == -1) {
              dst[d] -= p[d];
            } else {
              dst[d] += t.coef * p[d];
            }
          }
        }
      }
    }
    std::vector<AlgElement<S>> r;
    r.reserve(len);
    for (std::size_t d = 0; d < len; ++d) {
      std::vector<S> c(n, sz);
      for (std::size_t k = 0; k < n; ++k) c[k] = std::move(out[k][d]);
      r.emplace_back(alg, std::move(c));
    }
    return r;
  }
};

/// One of the fixed algebras over S. S = Rational takes no parameters; S = RatFuncQ takes exactly
/// one parameter symbol (the transcendental t, u or j). Throws std::invalid_argument otherwise.
template <class S>
AlgebraPtr<S> field_tower(FieldName name, std::vector<std::string> params = {}) {
  const AlgebraTable t = fixed_algebra_table(name);
  S zero;
  if constexpr (std::is_same_v<S, Rational>) {
    if (!params.empty()) throw std::invalid_argument("rational scalars take no parameters");
    zero = Rational(0);
  } else {
    if (params.size() != 1) throw std::invalid_argument("exactly one transcendental parameter is supported");
    if (t.characteristic != 0) throw std::invalid_argument("parameters over a finite field are not supported");
  }
  std::vector<std::vector<std::vector<S>>> table;
  for (const auto& row : t.table) {
    auto& out_row = table.emplace_back();
    for (const auto& v : row) {
      auto& out_v = out_row.emplace_back();
      for (const auto& q : v) out_v.push_back(detail::lift_scalar(zero, q));
    }
  }
  std::string label = t.label;
  if (!params.empty()) label += "(" + params[0] + ")";
  auto alg = std::make_shared<Algebra<S>>(name, label, t.basis, std::move(table), zero, std::move(params),
                                          t.characteristic, true);
  if (t.sqrt5_conj) alg->set_sqrt5_conj(*t.sqrt5_conj);
  if (t.complex_conj) alg->set_complex_conj(*t.complex_conj);
  return alg;
}

/// Q[s]/(s² − d) over S; a field iff d is not a square (the caller states which).
template <class S>
AlgebraPtr<S> quadratic_algebra(const S& d, const std::string& label, const std::string& symbol, bool is_field) {
  const S zero = zero_like(d);
  const S one = one_like(d);
  std::vector<std::vector<std::vector<S>>> table{{{one, zero}, {zero, one}}, {{zero, one}, {d, zero}}};
  auto alg = std::make_shared<Algebra<S>>(FieldName::Custom, label, std::vector<std::string>{"1", symbol},
                                          std::move(table), zero, std::vector<std::string>{}, 0, is_field);
  alg->set_sqrt5_conj({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
  return alg;
}

/// S[y]/(y^n − c): basis 1, y, ..., y^(n-1).
template <class S>
AlgebraPtr<S> pure_extension(const S& c, unsigned n, const std::string& label, const std::string& symbol,
                             std::vector<std::string> params, bool is_field) {
  if (n == 0) throw std::invalid_argument("pure extension of degree 0");
  const S zero = zero_like(c);
  const S one = one_like(c);
  std::vector<std::string> basis{"1"};
  for (unsigned k = 1; k < n; ++k) basis.push_back(k == 1 ? symbol : symbol + "^" + std::to_string(k));
  std::vector<std::vector<std::vector<S>>> table(n, std::vector<std::vector<S>>(n, std::vector<S>(n, zero)));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i + j < n) {
        table[i][j][i + j] = one;
      } else {
        table[i][j][i + j - n] = c;
      }
    }
  }
  return std::make_shared<Algebra<S>>(FieldName::Custom, label, std::move(basis), std::move(table), zero,
                                      std::move(params), 0, is_field);
}

/// An automorphism sending √5 to −√5 (on Q(ζ₅) this is z ↦ z², of order 4); throws
/// std::domain_error when the algebra does not contain √5.
template <class S>
AlgElement<S> sqrt5_conjugate(const AlgElement<S>& x) {
  const auto& m = x.algebra()->sqrt5_conj();
  if (!m) throw std::domain_error(x.algebra()->label() + " does not contain sqrt5");
  return x.apply_matrix(*m);
}

/// Complex conjugation (i ↦ −i, ζ₅ ↦ ζ₅⁴, √−2 ↦ −√−2); throws std::domain_error when unavailable.
template <class S>
AlgElement<S> complex_conjugate(const AlgElement<S>& x) {
  const auto& m = x.algebra()->complex_conj();
  if (!m) throw std::domain_error(x.algebra()->label() + " has no complex conjugation");
  return x.apply_matrix(*m);
}

/// √5 inside the named algebra: 1 + 2(ζ+ζ⁴) in Qzeta5, 1 + 2ε in QepsI, a basis element otherwise.
template <class S>
AlgElement<S> sqrt5_in(const AlgebraPtr<S>& alg) {
  switch (alg->name()) {
    case FieldName::Qsqrt5:
    case FieldName::Qsqrt5sqrtm2:
      return AlgElement<S>::gen(alg, "sqrt5");
    case FieldName::Qzeta5: {
      const auto z = AlgElement<S>::gen(alg, "z");
      return AlgElement<S>::from_rational(alg, Rational(1)) + (z + z.pow(4)) * detail::lift_scalar(alg->scalar_zero(), Rational(2));
    }
    case FieldName::QepsI:
      return AlgElement<S>::from_rational(alg, Rational(1)) +
             AlgElement<S>::gen(alg, "e") * detail::lift_scalar(alg->scalar_zero(), Rational(2));
    default:
      throw std::domain_error(alg->label() + " does not contain sqrt5");
  }
}

/// Embeds an element of Q(√5) into a target algebra that contains √5.
template <class S>
AlgElement<S> embed_sqrt5(const AlgElement<S>& x, const AlgebraPtr<S>& target) {
  if (x.algebra()->name() != FieldName::Qsqrt5) throw std::invalid_argument("embed_sqrt5 expects an element of Qsqrt5");
  const auto one = AlgElement<S>::from_rational(target, Rational(1));
  return one * x.coord(0) + sqrt5_in(target) * x.coord(1);
}

/// Embeds a rational-coefficient polynomial into polynomials over an algebra.
template <class S>
Poly<AlgElement<S>> lift_poly(const Poly<S>& p, const AlgebraPtr<S>& alg) {
  return p.map([&](const S& c) { return AlgElement<S>::scalar(alg, c); });
}

/// Drops to scalar coefficients; throws std::domain_error when some coefficient is not a scalar.
template <class S>
Poly<S> scalar_part(const Poly<AlgElement<S>>& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_scalar()) throw std::domain_error("polynomial has non-scalar coefficients");
  }
  return p.map([](const AlgElement<S>& c) { return c.coord(0); });
}

template <class S>
bool has_scalar_coeffs(const Poly<AlgElement<S>>& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_scalar()) return false;
  }
  return true;
}

}  // namespace klein5
