#include <stdexcept>

#include "klein5/algebra.hpp"

namespace klein5 {

namespace {

using Vec = std::vector<Rational>;
using Table = std::vector<std::vector<Vec>>;
using Mat = std::vector<std::vector<Rational>>;

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n, Rational(0));
  v[k] = Rational(1);
  return v;
}

// Columns given as image vectors; returns the matrix with those columns.
Mat from_columns(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  Mat m(n, Vec(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][k] = cols[k][i];
  }
  return m;
}

Mat diag(const std::vector<int>& d) {
  Mat m(d.size(), Vec(d.size(), Rational(0)));
  for (std::size_t k = 0; k < d.size(); ++k) m[k][k] = Rational(d[k]);
  return m;
}

// Power basis 1..x^(n-1) modulo a monic polynomial with rational coefficients (low degree first,
// leading 1 omitted).
Table power_basis_table(const Vec& tail) {
  const std::size_t n = tail.size();
  // reduced coordinates of x^k for k < 2n-1
  std::vector<Vec> xp;
  for (std::size_t k = 0; k < n; ++k) xp.push_back(unit_vec(n, k));
  for (std::size_t k = n; k + 1 < 2 * n; ++k) {
    const Vec& prev = xp.back();
    Vec next(n, Rational(0));
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = prev[i];
    const Rational top = prev[n - 1];
    for (std::size_t i = 0; i < n; ++i) next[i] -= top * tail[i];
    xp.push_back(next);
  }
  Table t(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = xp[i + j];
  }
  return t;
}

// Tensor product of two quadratic algebras Q[a]/(a²−p) ⊗ Q[b]/(b²−q)-style tables given by
// their 2-dim tables; basis order 1, a, b, ab.
Table tensor(const Table& ta, const Table& tb) {
  Table t(4, std::vector<Vec>(4, Vec(4, Rational(0))));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t ia = i % 2, ib = i / 2, ja = j % 2, jb = j / 2;
      const Vec& pa = ta[ia][ja];
      const Vec& pb = tb[ib][jb];
      for (std::size_t ka = 0; ka < 2; ++ka) {
        for (std::size_t kb = 0; kb < 2; ++kb) t[i][j][ka + 2 * kb] += pa[ka] * pb[kb];
      }
    }
  }
  return t;
}

}  // namespace

FieldName field_name_from_string(const std::string& name) {
  if (name == "Q") return FieldName::Q;
  if (name == "Qsqrt5") return FieldName::Qsqrt5;
  if (name == "Qzeta5") return FieldName::Qzeta5;
  if (name == "QepsI") return FieldName::QepsI;
  if (name == "Qsqrt5sqrtm2") return FieldName::Qsqrt5sqrtm2;
  if (name == "F5") return FieldName::F5;
  throw std::invalid_argument("unknown field '" + name + "'");
}

std::string to_string(FieldName name) {
  switch (name) {
    case FieldName::Q: return "Q";
    case FieldName::Qsqrt5: return "Qsqrt5";
    case FieldName::Qzeta5: return "Qzeta5";
    case FieldName::QepsI: return "QepsI";
    case FieldName::Qsqrt5sqrtm2: return "Qsqrt5sqrtm2";
    case FieldName::F5: return "F5";
    case FieldName::Custom: return "Custom";
  }
  return "Custom";
}

AlgebraTable fixed_algebra_table(FieldName name) {
  AlgebraTable t;
  t.name = name;
  t.label = to_string(name);
  switch (name) {
    case FieldName::Q:
      t.basis = {"1"};
      t.table = power_basis_table({Rational(0)});
      break;
    case FieldName::F5:
      t.basis = {"1"};
      t.table = power_basis_table({Rational(0)});
      t.characteristic = 5;
      break;
    case FieldName::Qsqrt5:
      t.basis = {"1", "sqrt5"};
      t.table = power_basis_table({Rational(-5), Rational(0)});
      t.sqrt5_conj = diag({1, -1});
      break;
    case FieldName::Qzeta5: {
      t.basis = {"1", "z", "z^2", "z^3"};
      t.table = power_basis_table({Rational(1), Rational(1), Rational(1), Rational(1)});
      const Vec z4{Rational(-1), Rational(-1), Rational(-1), Rational(-1)};
      // sigma: z -> z^2 sends sqrt5 = 1 + 2(z + z^4) to its negative
      t.sqrt5_conj = from_columns({unit_vec(4, 0), unit_vec(4, 2), z4, unit_vec(4, 1)});
      // complex conjugation: z -> z^4
      t.complex_conj = from_columns({unit_vec(4, 0), z4, unit_vec(4, 3), unit_vec(4, 2)});
      break;
    }
    case FieldName::QepsI: {
      t.basis = {"1", "e", "i", "ie"};
      // e^2 = 1 - e, i^2 = -1
      t.table = tensor(power_basis_table({Rational(-1), Rational(1)}), power_basis_table({Rational(1), Rational(0)}));
      t.sqrt5_conj = from_columns({unit_vec(4, 0),
                                   Vec{Rational(-1), Rational(-1), Rational(0), Rational(0)},
                                   unit_vec(4, 2),
                                   Vec{Rational(0), Rational(0), Rational(-1), Rational(-1)}});
      t.complex_conj = diag({1, 1, -1, -1});
      break;
    }
    case FieldName::Qsqrt5sqrtm2:
      t.basis = {"1", "sqrt5", "sqrtm2", "sqrt5*sqrtm2"};
      t.table = tensor(power_basis_table({Rational(-5), Rational(0)}), power_basis_table({Rational(2), Rational(0)}));
      t.sqrt5_conj = diag({1, -1, 1, -1});
      t.complex_conj = diag({1, 1, -1, -1});
      break;
    case FieldName::Custom:
      throw std::invalid_argument("custom algebras are built with quadratic_algebra or pure_extension");
  }
  return t;
}

}  // namespace klein5
