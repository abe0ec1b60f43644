#include "klein5/quintic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "klein5/ratfunc.hpp"

namespace klein5 {

namespace {

void append_term(std::ostringstream& os, const Rational& c, const std::string& mono, bool& first) {
  if (c.is_zero()) return;
  const bool neg = c.sign() < 0;
  const Rational a = abs(c);
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  first = false;
  if (mono.empty()) {
    os << a.to_string();
  } else {
    if (!a.is_one()) os << a.to_string() << "*";
    os << mono;
  }
}

}  // namespace

std::string to_string(const Quintic& q) {
  std::ostringstream os;
  bool first = false;
  os << "x^5";
  append_term(os, q.A, "x^2", first);
  append_term(os, q.B, "x", first);
  append_term(os, q.C, "", first);
  return os.str();
}

QuinticInvariants invariants(const Quintic& q) { return invariants_of(q.A, q.B, q.C); }

JCandidates j_candidates(const Quintic& q) {
  const QuinticInvariants inv = invariants(q);
  if (inv.delta.is_zero()) throw std::domain_error("delta = 0: A^4 - 5B^3 + 25ABC vanishes");
  const auto c = j_equation_coeffs(inv);
  JCandidates out;
  out.radicand = Rational(5) * inv.disc;
  out.quad_disc = c[1] * c[1] - Rational(4) * c[2] * c[0];
  out.center = -c[1] / (Rational(2) * c[2]);
  Rational field_radicand = out.radicand;
  if (!inv.disc.is_zero()) {
    out.cofactor = out.quad_disc / out.radicand;
    const auto root = sqrt_exact(*out.cofactor);
    out.square_class_ok = root.has_value() && !root->is_zero();
    if (out.square_class_ok) out.half_width = *root / (Rational(2) * c[2]);
  } else {
    out.square_class_ok = out.quad_disc.is_zero();
    out.half_width = Rational(0);
  }
  if (!out.square_class_ok) {
    // keep the roots exact even if the expected square class fails
    field_radicand = out.quad_disc;
    out.half_width = out.quad_disc.is_zero() ? Rational(0) : Rational(1) / (Rational(2) * c[2]);
  }
  const bool radicand_square = sqrt_exact(field_radicand).has_value();
  out.field = quadratic_algebra(field_radicand, "Q(sqrt(" + field_radicand.to_string() + "))", "s",
                                !radicand_square);
  const AlgQ s = AlgQ::gen(out.field, "s");
  const AlgQ center = AlgQ::from_rational(out.field, out.center);
  out.roots = {center + s * out.half_width, center - s * out.half_width};
  if (radicand_square) {
    const Rational r = *sqrt_exact(field_radicand);
    out.rational_roots = std::pair{out.center + out.half_width * r, out.center - out.half_width * r};
  }
  return out;
}

Rational j_discriminant_cofactor(const Quintic& q) {
  const Rational& A = q.A;
  const Rational& B = q.B;
  const Rational& C = q.C;
  const Rational p1 = Rational(8) * A.pow(5) * C + Rational(8) * A.pow(4) * B.pow(2) -
                      Rational(250) * A.pow(2) * B * C.pow(2) - Rational(225) * A * B.pow(3) * C +
                      Rational(81) * B.pow(5) + Rational(3125) * C.pow(4);
  const Rational p2 = Rational(64) * A.pow(10) + Rational(1000) * A.pow(7) * B * C - Rational(800) * A.pow(6) * B.pow(3) +
                      Rational(3125) * A.pow(5) * C.pow(3) - Rational(3125) * A.pow(4) * B.pow(2) * C.pow(2) +
                      Rational(625) * A.pow(3) * B.pow(4) * C - Rational(625) * A.pow(2) * B.pow(6) -
                      Rational(3125) * B.pow(5) * C.pow(2);
  return (p1 * p2).pow(2) / Rational(5).pow(36);
}

std::string to_string(ResolventConvention c) {
  return c == ResolventConvention::displayed ? "displayed" : "consistent";
}

Quintic resolvent_coeffs(const Rational& m, const Rational& n, const Rational& j, ResolventConvention conv) {
  if (j.is_zero() || j == Rational(1728)) throw std::domain_error("resolvent coefficients need j not in {0, 1728}");
  const auto f = resolvent_fractions(m, n, j, Rational(1), conv);
  return Quintic{f.A_num / f.A_den, f.B_num / f.B_den, f.C_num / f.C_den};
}

Quintic family_quintic(const Rational& t) {
  if (t.is_zero()) throw std::domain_error("family parameter t must be nonzero");
  const auto [B, C] = family_coeffs(t);
  return Quintic{Rational(0), B, C};
}

bool verify_family_disc_identity(const Rational& scalar) {
  const RatFuncQ t = RatFuncQ::variable(Rational(0));
  const auto [B, C] = family_coeffs(t);
  const auto inv = invariants_of(zero_like(t), B, C);
  const RatFuncQ nine_minus = RatFuncQ::constant(Rational(9)) - t * t * RatFuncQ::constant(Rational(5));
  return inv.disc * t.pow(10) == nine_minus.pow(4) * RatFuncQ::constant(scalar);
}

std::optional<Rational> trinomial_t(const Rational& B, const Rational& C) {
  if (C.is_zero()) throw std::invalid_argument("C must be nonzero for t");
  const Rational disc = Rational(256) * B.pow(5) + Rational(3125) * C.pow(4);
  if (disc.sign() <= 0) return std::nullopt;
  const auto root = sqrt_exact(disc);
  if (!root) return std::nullopt;
  return Rational(75) * C * C / *root;
}

std::string to_string(const IntTrinomial& t) {
  std::ostringstream os;
  bool first = true;
  append_term(os, Rational(t.a5), "x^5", first);
  append_term(os, Rational(t.a1), "x", first);
  append_term(os, Rational(t.a0), "", first);
  return first ? "0" : os.str();
}

IntTrinomial canonical_trinomial(const Rational& c5, const Rational& B, const Rational& C) {
  if (c5.is_zero() && B.is_zero() && C.is_zero()) throw std::invalid_argument("zero trinomial");
  mpz_class l = 1;
  for (const auto* r : {&c5, &B, &C}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den().get_mpz_t());
  IntTrinomial t{(c5 * Rational(l)).num(), (B * Rational(l)).num(), (C * Rational(l)).num()};
  mpz_class g = 0;
  for (const auto* z : {&t.a5, &t.a1, &t.a0}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z->get_mpz_t());
  t.a5 /= g;
  t.a1 /= g;
  t.a0 /= g;
  if (t.a5 < 0 || (t.a5 == 0 && t.a1 < 0)) {
    t.a5 = -t.a5;
    t.a1 = -t.a1;
    t.a0 = -t.a0;
  }
  // x -> -x negates the odd part; renormalizing the sign leaves only a0 flipped
  if (t.a0 < 0) t.a0 = -t.a0;
  return t;
}

std::optional<Rational> scaling_factor(const Trinomial& q1, const Trinomial& q2) {
  if (q1.c5.is_zero() || q2.c5.is_zero()) throw std::invalid_argument("trinomial needs a quintic term");
  if (q1.C.is_zero() || q2.C.is_zero()) throw std::invalid_argument("scaling test needs C nonzero");
  const Rational b1 = q1.B / q1.c5, c1 = q1.C / q1.c5;
  const Rational b2 = q2.B / q2.c5, c2 = q2.C / q2.c5;
  // monic q1(cx)/c⁵ = x⁵ + (b1/c⁴) x + c1/c⁵
  const auto c = root_exact(c1 / c2, 5);
  if (!c) return std::nullopt;
  if (!(b2 == b1 / c->pow(4))) return std::nullopt;
  return c;
}

bool scaling_equivalent(const Trinomial& q1, const Trinomial& q2) { return scaling_factor(q1, q2).has_value(); }

std::pair<Rational, Rational> solvable_family(const Rational& v, const Rational& w) {
  const Rational v2 = v * v;
  const Rational den = (v2 + Rational(1)).pow(2);
  const Rational B = Rational(20) * (v2 + v - Rational(1)) * (v2 - v - Rational(1)) * w.pow(4) / den;
  const Rational C = Rational(16) * (v2 + v - Rational(1)) * (Rational(2) * v2 + Rational(3) * v - Rational(2)) * w.pow(5) / den;
  return {B, C};
}

std::pair<Rational, Rational> solvability_obstruction(const Rational& v) {
  const Rational v2 = v * v, v3 = v2 * v;
  const Rational quad = Rational(2) * v2 + Rational(3) * v - Rational(2);
  const Rational cub1 = Rational(2) * v3 + Rational(2) * v2 - v + Rational(1);
  const Rational cub2 = v3 + v2 + Rational(2) * v - Rational(2);
  if (quad.is_zero()) throw std::domain_error("2v^2 + 3v - 2 vanishes at v = " + v.to_string());
  if (cub1.is_zero() || cub2.is_zero()) throw std::domain_error("t has a vanishing denominator at v = " + v.to_string());
  const Rational w = (v2 - v - Rational(1)) / quad;
  const Rational t = Rational(3) * (v2 + Rational(1)) * quad * quad / (Rational(5) * cub1 * cub2);
  return {w, t};
}

Rational obstruction_rhs(const Rational& x) {
  const Rational x2 = x * x, x3 = x2 * x;
  return Rational(15) * (x2 + Rational(1)) * (Rational(2) * x3 + Rational(2) * x2 - x + Rational(1)) *
         (x3 + x2 + Rational(2) * x - Rational(2));
}

namespace {

using i128 = __int128;

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

// quadratic-residue filters; a nonsquare fails one of them with high probability
bool maybe_square(i128 v) {
  static const auto table = [] {
    std::array<std::vector<bool>, 4> t;
    const unsigned mods[4] = {64, 63, 65, 11};
    for (int k = 0; k < 4; ++k) {
      t[k].assign(mods[k], false);
      for (unsigned x = 0; x < mods[k]; ++x) t[k][(x * x) % mods[k]] = true;
    }
    return t;
  }();
  const unsigned mods[4] = {64, 63, 65, 11};
  for (int k = 0; k < 4; ++k) {
    if (!table[k][static_cast<std::size_t>(v % mods[k])]) return false;
  }
  return true;
}

}  // namespace

HyperellipticSearch hyperelliptic_search(long height) {
  if (height < 1) throw std::invalid_argument("height bound must be positive");
  HyperellipticSearch out;
  out.height = height;
  out.point_at_infinity = sqrt_exact(Rational(30)).has_value();
  for (long q = 1; q <= height; ++q) {
    const i128 Q = q;
    for (long p = -height; p <= height; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      ++out.tested;
      const i128 P = p;
      // q⁸·RHS(p/q), each factor homogenized
      const i128 f1 = P * P + Q * Q;
      const i128 f2 = 2 * P * P * P + 2 * P * P * Q - P * Q * Q + Q * Q * Q;
      const i128 f3 = P * P * P + P * P * Q + 2 * P * Q * Q - 2 * Q * Q * Q;
      const i128 F = 15 * f1 * f2 * f3;
      if (F < 0 || !maybe_square(F)) continue;
      const mpz_class Fz = to_mpz(F);
      if (!mpz_perfect_square_p(Fz.get_mpz_t())) continue;
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), Fz.get_mpz_t());
      const mpz_class q4 = mpz_class(q) * q * q * q;
      out.points.push_back({Rational(mpz_class(p), mpz_class(q)), Rational(root, q4)});
    }
  }
  return out;
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {{1, 0, 0, 0, 20, -16}, {Rational(4), Rational(-25), Rational(50)}, {Rational(3, 5), Rational(15, 11)}},
      {{1, 0, 10, -10, 35, -18}, {Rational(5), Rational(20), Rational(16)}, {Rational(1)}},
      {{1, 0, -10, 20, 110, -116}, {Rational(5), Rational(-20), Rational(16)}, {Rational(3)}},
      {{1, 0, 10, -40, 60, -32}, {Rational(5), Rational(-5), Rational(4)}, {Rational(3, 2)}},
      {{1, 0, -10, -20, 10, 216}, {Rational(5), Rational(5), Rational(8)}, {Rational(4, 3)}},
  };
  return rows;
}

namespace {

std::string poly_string(const std::vector<long>& c) {
  std::ostringstream os;
  bool first = true;
  const int deg = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= deg; ++i) {
    const int e = deg - i;
    const std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
    append_term(os, Rational(c[static_cast<std::size_t>(i)]), mono, first);
  }
  return os.str();
}

}  // namespace

std::vector<TableCheck> reproduce_table() {
  std::vector<TableCheck> out;
  for (const auto& row : table_rows()) {
    TableCheck chk;
    chk.original = poly_string(row.original);
    {
      std::ostringstream os;
      bool first = true;
      append_term(os, row.principal.c5, "x^5", first);
      append_term(os, row.principal.B, "x", first);
      append_term(os, row.principal.C, "", first);
      chk.principal = os.str();
    }
    chk.listed = row.listed_t;
    chk.t_principal = trinomial_t(row.principal.B / row.principal.c5, row.principal.C / row.principal.c5);
    const auto& o = row.original;
    if (o[1] == 0 && o[2] == 0 && o[3] == 0) chk.t_original = trinomial_t(Rational(o[4]), Rational(o[5]));
    std::set<Rational> got;
    if (chk.t_principal) got.insert(*chk.t_principal);
    if (chk.t_original) got.insert(*chk.t_original);
    const std::set<Rational> want(row.listed_t.begin(), row.listed_t.end());
    chk.match = got == want;
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace klein5
