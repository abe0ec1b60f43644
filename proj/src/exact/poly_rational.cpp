#include "klein5/poly.hpp"

namespace klein5 {

namespace {

// Scales v to integers: v[i] = out[i] / common.
mpz_class integer_image(const std::vector<Rational>& v, std::vector<mpz_class>& out) {
  mpz_class common = 1;
  for (const auto& x : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get().get_den_mpz_t());
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), common.get_mpz_t(), v[i].get().get_den_mpz_t());
    out[i] *= v[i].get().get_num();
  }
  return common;
}

}  // namespace

std::vector<Rational> PolyMulKernel<Rational>::mul(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b,
                                                   const Rational&) {
  std::vector<mpz_class> ia, ib;
  const mpz_class da = integer_image(a, ia);
  const mpz_class db = integer_image(b, ib);
  std::vector<mpz_class> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& c : acc) out.emplace_back(c, den);
  return out;
}

}  // namespace klein5
