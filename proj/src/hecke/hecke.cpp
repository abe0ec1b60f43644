#include "klein5/hecke.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace klein5 {

namespace {

long floor_div(long x, long d) {
  long q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

long modp(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

std::string to_string(HeckeModulus m) {
  switch (m) {
    case HeckeModulus::four: return "4";
    case HeckeModulus::eight: return "8";
    case HeckeModulus::sqrt5: return "sqrt5";
    case HeckeModulus::eight_sqrt5: return "8sqrt5";
  }
  return "?";
}

HeckeModulus hecke_modulus_from_string(const std::string& s) {
  if (s == "4") return HeckeModulus::four;
  if (s == "8") return HeckeModulus::eight;
  if (s == "sqrt5") return HeckeModulus::sqrt5;
  if (s == "8sqrt5") return HeckeModulus::eight_sqrt5;
  throw std::invalid_argument("unsupported modulus '" + s + "'");
}

std::string to_string(const Residue& x) { return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")"; }

long norm(long a, long b) { return a * a - a * b - b * b; }

ResidueRing::ResidueRing(HeckeModulus m) : m_(m) {
  // Hermite basis: (A, 0) and (s, B) span the ideal in (a, b) coordinates.
  switch (m) {
    case HeckeModulus::four: A_ = 4, s_ = 0, B_ = 4; break;
    case HeckeModulus::eight: A_ = 8, s_ = 0, B_ = 8; break;
    case HeckeModulus::sqrt5: A_ = 5, s_ = -2, B_ = 1; break;           // √5·ε = 2 − ε
    case HeckeModulus::eight_sqrt5: A_ = 40, s_ = -16, B_ = 8; break;   // 8√5·ε = 16 − 8ε
  }
}

Residue ResidueRing::reduce(long a, long b) const {
  const long q = floor_div(b, B_);
  return {modp(a - s_ * q, A_), b - B_ * q};
}

Residue ResidueRing::mul(const Residue& x, const Residue& y) const {
  return reduce(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
}

Residue ResidueRing::add(const Residue& x, const Residue& y) const { return reduce(x.a + y.a, x.b + y.b); }

Residue ResidueRing::neg(const Residue& x) const { return reduce(-x.a, -x.b); }

Residue ResidueRing::sigma(const Residue& x) const { return reduce(x.a - x.b, -x.b); }

bool ResidueRing::is_unit(const Residue& x) const {
  const long n = norm(x.a, x.b);
  switch (m_) {
    case HeckeModulus::four:
    case HeckeModulus::eight: return modp(n, 2) == 1;
    case HeckeModulus::sqrt5: return modp(n, 5) != 0;
    case HeckeModulus::eight_sqrt5: return modp(n, 2) == 1 && modp(n, 5) != 0;
  }
  return false;
}

std::vector<Residue> ResidueRing::elements() const {
  std::vector<Residue> out;
  for (long a = 0; a < A_; ++a) {
    for (long b = 0; b < B_; ++b) out.push_back({a, b});
  }
  return out;
}

std::vector<Residue> ResidueRing::units() const {
  std::vector<Residue> out;
  for (const auto& x : elements()) {
    if (is_unit(x)) out.push_back(x);
  }
  return out;
}

int RootOfUnity::order() const { return 24 / std::gcd(exponent, 24); }

std::string to_string(const RootOfUnity& z) { return "zeta24^" + std::to_string(z.exponent); }

RootOfUnity Character::operator()(const Residue& x) const {
  const auto it = images.find(ResidueRing(modulus).reduce(x.a, x.b));
  if (it == images.end()) throw std::out_of_range("character evaluated at a non-unit");
  return it->second;
}

Character char_from_generators(HeckeModulus m, const std::vector<Residue>& gens,
                               const std::vector<RootOfUnity>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("generator and image counts differ");
  const ResidueRing R(m);
  std::vector<Residue> g;
  for (const auto& x : gens) {
    const Residue r = R.reduce(x.a, x.b);
    if (!R.is_unit(r)) throw std::invalid_argument("generator " + to_string(x) + " is not a unit");
    g.push_back(r);
  }
  Character chi{m, {}};
  chi.images[R.one()] = RootOfUnity(0);
  std::deque<Residue> queue{R.one()};
  while (!queue.empty()) {
    const Residue x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Residue y = R.mul(x, g[k]);
      const RootOfUnity v = chi.images.at(x) * images[k];
      const auto it = chi.images.find(y);
      if (it == chi.images.end()) {
        chi.images[y] = v;
        queue.push_back(y);
      } else if (!(it->second == v)) {
        throw std::invalid_argument("images inconsistent with the relations among the generators");
      }
    }
  }
  if (chi.images.size() != R.units().size()) throw std::invalid_argument("generators do not generate the unit group");
  return chi;
}

bool is_multiplicative(const Character& chi) {
  const ResidueRing R(chi.modulus);
  for (const auto& [x, vx] : chi.images) {
    for (const auto& [y, vy] : chi.images) {
      if (!(chi(R.mul(x, y)) == vx * vy)) return false;
    }
  }
  return true;
}

const Character& omega4() {
  static const Character chi =
      char_from_generators(HeckeModulus::four, {{-1, 0}, {0, 1}}, {RootOfUnity(12), RootOfUnity(4)});
  return chi;
}

const Character& omega8() {
  static const Character chi = char_from_generators(HeckeModulus::eight, {{-1, 0}, {1, 4}, {0, 1}},
                                                    {RootOfUnity(12), RootOfUnity(12), RootOfUnity(2)});
  return chi;
}

const Character& omega5_hecke() {
  static const Character chi = char_from_generators(HeckeModulus::sqrt5, {{0, 1}}, {RootOfUnity(6)});
  return chi;
}

Residue project(const Residue& x, HeckeModulus to) { return ResidueRing(to).reduce(x.a, x.b); }

const Character& omega() {
  static const Character chi = [] {
    const ResidueRing R(HeckeModulus::eight_sqrt5);
    Character c{HeckeModulus::eight_sqrt5, {}};
    for (const auto& x : R.units()) {
      c.images[x] = omega4()(project(x, HeckeModulus::four)).pow(3) * omega8()(project(x, HeckeModulus::eight)).pow(3) *
                    omega5_hecke()(project(x, HeckeModulus::sqrt5));
    }
    return c;
  }();
  return chi;
}

int kronecker_minus2(long n) {
  const long r = modp(n, 8);
  if (r % 2 == 0) throw std::domain_error("(-2/n) needs odd n");
  return r == 1 || r == 3 ? 1 : -1;
}

int chi_minus4(long n) {
  const long r = modp(n, 4);
  if (r % 2 == 0) throw std::domain_error("(-1/n) needs odd n");
  return r == 1 ? 1 : -1;
}

RootOfUnity teichmuller5(long n) {
  switch (modp(n, 5)) {
    case 1: return RootOfUnity(0);
    case 2: return RootOfUnity(6);
    case 4: return RootOfUnity(12);
    case 3: return RootOfUnity(18);
    default: throw std::domain_error("teichmuller5 at a multiple of 5");
  }
}

namespace {

RootOfUnity sign(int s) { return RootOfUnity(s == 1 ? 0 : 12); }

}  // namespace

IdentityCheck check_sigma_identity() {
  const ResidueRing R(HeckeModulus::eight_sqrt5);
  const Character& w = omega();
  IdentityCheck r;
  for (const auto& [x, wx] : w.images) {
    ++r.units;
    if (!(w(R.sigma(x)) * wx.inverse() == sign(kronecker_minus2(norm(x.a, x.b))))) ++r.failures;
  }
  return r;
}

bool verify_sigma_identity() { return check_sigma_identity().pass(); }

IdentityCheck check_square_identity() {
  const Character& w = omega();
  IdentityCheck r;
  for (const auto& [x, wx] : w.images) {
    ++r.units;
    const long n = norm(x.a, x.b);
    if (!(wx.pow(2) == sign(chi_minus4(n)) * teichmuller5(n).inverse())) ++r.failures;
  }
  return r;
}

bool verify_square_identity() { return check_square_identity().pass(); }

PositiveUnitCheck check_positive_units() {
  const ResidueRing R(HeckeModulus::eight_sqrt5);
  const Residue e{0, 1};
  PositiveUnitCheck r;
  r.omega_eps = omega()(e);
  r.omega_eps2 = omega()(R.mul(e, e));
  std::set<int> values;
  for (const auto& [x, v] : omega().images) values.insert(v.exponent);
  r.value_group.assign(values.begin(), values.end());
  return r;
}

bool verify_positive_units() { return check_positive_units().pass(); }

bool verify_omega5_compatibility() {
  for (long a = 1; a < 5; ++a) {
    if (!(omega5_hecke()({a, 0}) == teichmuller5(a))) return false;
  }
  return true;
}

}  // namespace klein5
