#include "klein5/repn.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace klein5 {

namespace {

int mod5(long v) {
  const long r = v % 5;
  return static_cast<int>(r < 0 ? r + 5 : r);
}

OrderElement one() { return AlgQ::from_rational(order_algebra(), Rational(1)); }
OrderElement zero() { return AlgQ::zero(order_algebra()); }

OrderElement omega2(Branch b) { return b == Branch::i ? imag() : -imag(); }

int inv5(int a) {
  for (int x = 1; x < 5; ++x) {
    if (mod5(static_cast<long>(a) * x) == 1) return x;
  }
  throw std::invalid_argument("not invertible mod 5");
}

}  // namespace

const AlgebraPtr<Rational>& order_algebra() {
  static const AlgebraPtr<Rational> alg = field_tower<Rational>(FieldName::QepsI);
  return alg;
}

OrderElement order_element(const Rational& c1, const Rational& ce, const Rational& ci, const Rational& cie) {
  return AlgQ::from_rationals(order_algebra(), {c1, ce, ci, cie});
}

OrderElement eps() { return AlgQ::gen(order_algebra(), "e"); }
OrderElement imag() { return AlgQ::gen(order_algebra(), "i"); }

bool is_dyadic(const OrderElement& x) {
  for (const auto& c : x.coords()) {
    mpz_class d = c.den();
    while (d % 2 == 0) d /= 2;
    if (d != 1) return false;
  }
  return true;
}

OrderElement omega5(int a, Branch b) {
  switch (mod5(a)) {
    case 1: return one();
    case 2: return omega2(b);
    case 3: return -omega2(b);
    case 4: return -one();
    default: throw std::invalid_argument("omega5 needs a unit mod 5");
  }
}

OrderElement varpi(Branch b) { return omega2(b) * eps().inverse() - one(); }

int residue_hom(const OrderElement& x, Branch b) {
  // images of 1, ε, i, iε
  const long i_img = b == Branch::i ? 2 : 3;
  const long imgs[4] = {1, 2, i_img, 2 * i_img};
  long acc = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    acc += static_cast<long>(reduce_mod(x.coord(k), 5)) * imgs[k];
  }
  return mod5(acc);
}

VarpiIdentities check_varpi_identities(Branch b, const Rational& eps_sign) {
  const OrderElement w = varpi(b);
  const OrderElement wc = complex_conjugate(w);
  const OrderElement e = eps();
  const OrderElement two = one() * Rational(2);
  const OrderElement lhs1 = two + e * eps_sign;
  const OrderElement lhs2 = two - omega5(2, b);
  const OrderElement lhs3 = e * Rational(2) + one();  // √5
  VarpiIdentities r;
  r.two_minus_eps = lhs1 == e * e * w * wc;
  r.two_minus_omega = lhs2 == e * w * (e * wc - one());
  r.sqrt5 = lhs3 == e * w * wc && lhs3 * lhs3 == one() * Rational(5);
  r.residues_vanish = residue_hom(lhs1, b) == 0 && residue_hom(lhs2, b) == 0 && residue_hom(lhs3, b) == 0;
  return r;
}

bool verify_varpi_identities() { return check_varpi_identities().pass(); }

RepMatrix rep_identity() { return {one(), zero(), zero(), one()}; }

RepMatrix rep_mul(const RepMatrix& x, const RepMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

OrderElement rep_det(const RepMatrix& x) { return x[0] * x[3] - x[1] * x[2]; }

RepMatrix rep_inverse(const RepMatrix& x) {
  const OrderElement di = rep_det(x).inverse();
  return {x[3] * di, -(x[1] * di), -(x[2] * di), x[0] * di};
}

RepMatrix rep_pow(const RepMatrix& x, long e) {
  RepMatrix base = e < 0 ? rep_inverse(x) : x;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RepMatrix acc = rep_identity();
  while (n) {
    if (n & 1) acc = rep_mul(acc, base);
    base = rep_mul(base, base);
    n >>= 1;
  }
  return acc;
}

bool rep_equal(const RepMatrix& x, const RepMatrix& y) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!(x[k] == y[k])) return false;
  }
  return true;
}

std::string to_string(const RepMatrix& x) {
  return "[[" + x[0].to_string() + ", " + x[1].to_string() + "], [" + x[2].to_string() + ", " + x[3].to_string() + "]]";
}

F5Matrix f5_mul(const F5Matrix& x, const F5Matrix& y) {
  return {mod5(x[0] * y[0] + x[1] * y[2]), mod5(x[0] * y[1] + x[1] * y[3]), mod5(x[2] * y[0] + x[3] * y[2]),
          mod5(x[2] * y[1] + x[3] * y[3])};
}

int f5_det(const F5Matrix& x) { return mod5(x[0] * x[3] - x[1] * x[2]); }

std::string to_string(const F5Matrix& x) {
  return "[[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "],[" + std::to_string(x[2]) + "," +
         std::to_string(x[3]) + "]]";
}

bool f5_is_square(int a) {
  const int r = mod5(a);
  return r == 1 || r == 4;
}

PiGenerators pi_generators(Branch b) {
  const OrderElement w = varpi(b);
  const OrderElement e = eps();
  const Rational h(1, 2);
  return {{e * h, (w + one() * Rational(2)) * h, w * h, e * h}, {zero(), -one(), one(), zero()}};
}

RepMatrix pi_U_unchecked(int a, int d, Branch b) { return {omega5(a, b), zero(), zero(), omega5(d, b)}; }

RepMatrix pi_U(int a, int d, Branch b) {
  if (mod5(a) == 0 || mod5(d) == 0 || !f5_is_square(a * d)) {
    throw std::invalid_argument("U(a,d) needs ad to be a nonzero square mod 5");
  }
  return pi_U_unchecked(a, d, b);
}

F5Matrix reduce_matrix(const RepMatrix& x, Branch b) {
  return {residue_hom(x[0], b), residue_hom(x[1], b), residue_hom(x[2], b), residue_hom(x[3], b)};
}

namespace {

std::vector<std::pair<int, int>> diagonal_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a < 5; ++a) {
    for (int d = 1; d < 5; ++d) {
      if (f5_is_square(a * d)) out.emplace_back(a, d);
    }
  }
  return out;
}

std::vector<RepMatrix> generator_images(Branch b) {
  const auto g = pi_generators(b);
  std::vector<RepMatrix> out{g.S, g.T};
  for (const auto& [a, d] : diagonal_pairs()) out.push_back(pi_U(a, d, b));
  return out;
}

const std::vector<RepMatrix>& pi_images(Branch b) {
  static const std::vector<RepMatrix> images[2] = {
      [] {
        const auto& grp = enumerate_group();
        const auto gens = generator_images(Branch::i);
        std::vector<RepMatrix> out;
        for (const auto& w : grp.words) {
          RepMatrix m = rep_identity();
          for (int k : w) m = rep_mul(m, gens[static_cast<std::size_t>(k)]);
          out.push_back(m);
        }
        return out;
      }(),
      [] {
        const auto& grp = enumerate_group();
        const auto gens = generator_images(Branch::minus_i);
        std::vector<RepMatrix> out;
        for (const auto& w : grp.words) {
          RepMatrix m = rep_identity();
          for (int k : w) m = rep_mul(m, gens[static_cast<std::size_t>(k)]);
          out.push_back(m);
        }
        return out;
      }()};
  return images[b == Branch::i ? 0 : 1];
}

}  // namespace

const GroupEnumeration& enumerate_group() {
  static const GroupEnumeration grp = [] {
    constexpr std::size_t kMaxWord = 40;
    GroupEnumeration g;
    g.generators = {{1, 1, 0, 1}, {0, 4, 1, 0}};
    for (const auto& [a, d] : diagonal_pairs()) g.generators.push_back({a, 0, 0, d});
    std::map<F5Matrix, std::size_t> seen;
    std::deque<std::size_t> queue;
    const F5Matrix id{1, 0, 0, 1};
    g.elements.push_back(id);
    g.words.push_back({});
    seen[id] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < g.generators.size(); ++k) {
        const F5Matrix next = f5_mul(g.elements[cur], g.generators[k]);
        if (seen.count(next)) continue;
        std::vector<int> w = g.words[cur];
        w.push_back(static_cast<int>(k));
        if (w.size() > kMaxWord) throw std::runtime_error("word length cap exceeded");
        g.max_word_length = std::max(g.max_word_length, w.size());
        seen[next] = g.elements.size();
        g.elements.push_back(next);
        g.words.push_back(std::move(w));
        queue.push_back(g.elements.size() - 1);
      }
    }
    return g;
  }();
  return grp;
}

std::size_t group_index(const F5Matrix& g) {
  static const std::map<F5Matrix, std::size_t> index = [] {
    std::map<F5Matrix, std::size_t> m;
    const auto& grp = enumerate_group();
    for (std::size_t k = 0; k < grp.elements.size(); ++k) m[grp.elements[k]] = k;
    return m;
  }();
  F5Matrix canon{mod5(g[0]), mod5(g[1]), mod5(g[2]), mod5(g[3])};
  const auto it = index.find(canon);
  if (it == index.end()) throw std::out_of_range("matrix is not in Z(F5)*SL2(F5)");
  return it->second;
}

RepMatrix lift_pi(const F5Matrix& g, Branch b) { return pi_images(b)[group_index(g)]; }

HomomorphismCheck check_homomorphism(std::size_t samples, std::uint64_t seed, bool exhaustive) {
  const auto& grp = enumerate_group();
  const auto& imgs = pi_images(Branch::i);
  const std::size_t n = grp.elements.size();
  HomomorphismCheck r;
  auto check = [&](std::size_t x, std::size_t y) {
    ++r.pairs;
    const std::size_t xy = group_index(f5_mul(grp.elements[x], grp.elements[y]));
    if (!rep_equal(rep_mul(imgs[x], imgs[y]), imgs[xy])) ++r.failures;
  };
  if (exhaustive) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) check(x, y);
    }
    return r;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) check(rng() % n, rng() % n);
  return r;
}

RelationCheck check_relations(Branch b) {
  const auto g = pi_generators(b);
  const RepMatrix I = rep_identity();
  const RepMatrix Tinv = rep_inverse(g.T);
  RelationCheck r;
  r.orders = rep_equal(rep_pow(g.S, 5), I) && rep_equal(rep_pow(g.T, 4), I);
  r.relation1 = true;
  r.relation2 = true;
  for (const auto& [a, d] : diagonal_pairs()) {
    const RepMatrix U = pi_U(a, d, b);
    r.orders = r.orders && rep_equal(rep_pow(U, 4), I);
    r.relation1 = r.relation1 && rep_equal(rep_mul(rep_mul(g.T, U), Tinv), pi_U(d, a, b));
    const int n = mod5(static_cast<long>(a) * inv5(d));
    r.relation2 = r.relation2 && rep_equal(rep_mul(rep_mul(U, g.S), rep_inverse(U)), rep_pow(g.S, n));
  }
  r.relation3 = true;
  for (int d = 1; d < 5; ++d) {
    const int a = inv5(d);
    const RepMatrix lhs = rep_mul(rep_mul(g.T, rep_pow(g.S, d)), Tinv);
    const RepMatrix rhs = rep_mul(rep_mul(rep_mul(pi_U(a, d, b), rep_pow(g.S, -d)), Tinv), rep_pow(g.S, -a));
    r.relation3 = r.relation3 && rep_equal(lhs, rhs);
  }
  r.relation2_fails_off_group = true;
  for (int a = 1; a < 5; ++a) {
    for (int d = 1; d < 5; ++d) {
      const int n = mod5(static_cast<long>(a) * inv5(d));
      if (n != 2 && n != 3) continue;
      const RepMatrix U = pi_U_unchecked(a, d, b);
      if (rep_equal(rep_mul(rep_mul(U, g.S), rep_inverse(U)), rep_pow(g.S, n))) r.relation2_fails_off_group = false;
    }
  }
  return r;
}

bool verify_relations() { return check_relations().pass(); }

CongruenceCheck check_congruence(Branch b) {
  const auto& grp = enumerate_group();
  const auto& imgs = pi_images(b);
  CongruenceCheck r;
  r.elements = grp.elements.size();
  std::set<std::string> distinct;
  r.reduces_to_g = true;
  r.literal_identity = true;
  r.dyadic = true;
  r.det_compatible = true;
  const F5Matrix id{1, 0, 0, 1};
  for (std::size_t k = 0; k < grp.elements.size(); ++k) {
    const RepMatrix& m = imgs[k];
    distinct.insert(to_string(m));
    for (const auto& x : m) r.dyadic = r.dyadic && is_dyadic(x);
    const F5Matrix red = reduce_matrix(m, b);
    r.reduces_to_g = r.reduces_to_g && red == grp.elements[k];
    r.literal_identity = r.literal_identity && red == id;
    r.det_compatible = r.det_compatible && residue_hom(rep_det(m), b) == f5_det(grp.elements[k]);
  }
  r.distinct_images = distinct.size();
  r.teichmuller = true;
  for (int a = 1; a < 5; ++a) r.teichmuller = r.teichmuller && residue_hom(omega5(a, b), b) == a;
  return r;
}

bool verify_congruence() { return check_congruence().pass(); }

}  // namespace klein5
