#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "klein5/poly.hpp"

namespace klein5 {

namespace detail {

template <class D>
D power(const D& x, int e) {
  D r = one_like(x);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace detail

/// Res(a, b) over an integral domain D with exact division, by the subresultant PRS.
///
/// Convention: Res(a, b) = det Sylvester(a, b) with the rows of a first, so
/// Res(a, b) = lc(a)^deg b · ∏ b(α) over the roots α of a, and Res(x − a, x − b) = a − b.
/// Throws std::domain_error when both inputs are zero; returns 0 when exactly one is.
template <class D>
D resultant(Poly<D> a, Poly<D> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant of two zero polynomials");
  const D zero = a.zero_elem();
  if (a.is_zero() || b.is_zero()) return zero;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    D r = detail::power(b.lead(), a.degree());
    return sign < 0 ? -r : r;
  }
  D g = one_like(zero);
  D h = one_like(zero);
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    Poly<D> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return zero;
    const D div = g * detail::power(h, delta);
    b = r.map([&](const D& c) { return exact_div(c, div); });
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(detail::power(g, delta), detail::power(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  D res = da == 1 ? b.lead() : exact_div(detail::power(b.lead(), da), detail::power(h, da - 1));
  return sign < 0 ? -res : res;
}

/// Sylvester matrix with the deg(b) shifted rows of a first, then the deg(a) rows of b.
template <class D>
std::vector<std::vector<D>> sylvester_matrix(const Poly<D>& a, const Poly<D>& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("Sylvester matrix of a zero polynomial");
  const int m = a.degree();
  const int n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<D>> s(size, std::vector<D>(size, a.zero_elem()));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) {
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = a.coeff(static_cast<std::size_t>(k));
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = b.coeff(static_cast<std::size_t>(k));
    }
  }
  return s;
}

}  // namespace klein5
