#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klein5/algebra.hpp"

namespace klein5 {

/// Elements of Z[ε, i][1/2] as coordinates over {1, ε, i, iε} in Q(ε, i) (ε² = 1 − ε, i² = −1).
using OrderElement = AlgQ;

/// Which square root of −1 plays ω₅(2). `i` is the default; `minus_i` belongs to the conjugate prime.
enum class Branch { i, minus_i };

const AlgebraPtr<Rational>& order_algebra();
OrderElement order_element(const Rational& c1, const Rational& ce, const Rational& ci, const Rational& cie);
OrderElement eps();
OrderElement imag();

/// Denominators of every coordinate are powers of 2.
bool is_dyadic(const OrderElement& x);

/// ω₅: 1 ↦ 1, 2 ↦ ω₅(2), 3 ↦ −ω₅(2), 4 ↦ −1. Throws std::invalid_argument for a ≡ 0 mod 5.
OrderElement omega5(int a, Branch b = Branch::i);

/// ϖ = ω₅(2)ε⁻¹ − 1.
OrderElement varpi(Branch b = Branch::i);

/// Reduction mod λ: ε ↦ 2, i ↦ ±2 (2 on the default branch), 1/2 ↦ 3. Throws std::domain_error
/// when a denominator is divisible by 5.
int residue_hom(const OrderElement& x, Branch b = Branch::i);

struct VarpiIdentities {
  bool two_minus_eps = false;     // 2 − ε = ε²ϖϖ^c
  bool two_minus_omega = false;   // 2 − ω₅(2) = εϖ(εϖ^c − 1)
  bool sqrt5 = false;             // √5 = εϖϖ^c
  bool residues_vanish = false;   // each left side maps to 0 mod λ
  bool pass() const { return two_minus_eps && two_minus_omega && sqrt5 && residues_vanish; }
};

/// The first left side is 2 + eps_sign·ε; eps_sign = +1 is the mutation test.
VarpiIdentities check_varpi_identities(Branch b = Branch::i, const Rational& eps_sign = Rational(-1));
bool verify_varpi_identities();

/// 2×2 matrices, row-major {a, b, c, d}.
using RepMatrix = std::array<OrderElement, 4>;
using F5Matrix = std::array<int, 4>;

RepMatrix rep_identity();
RepMatrix rep_mul(const RepMatrix& x, const RepMatrix& y);
OrderElement rep_det(const RepMatrix& x);
RepMatrix rep_inverse(const RepMatrix& x);
RepMatrix rep_pow(const RepMatrix& x, long e);
bool rep_equal(const RepMatrix& x, const RepMatrix& y);
std::string to_string(const RepMatrix& x);

F5Matrix f5_mul(const F5Matrix& x, const F5Matrix& y);
int f5_det(const F5Matrix& x);
std::string to_string(const F5Matrix& x);
bool f5_is_square(int a);

struct PiGenerators {
  RepMatrix S;  // ½(ε, ϖ+2; ϖ, ε)
  RepMatrix T;  // (0, −1; 1, 0)
};

PiGenerators pi_generators(Branch b = Branch::i);
/// diag(ω₅(a), ω₅(d)); throws std::invalid_argument unless ad is a nonzero square mod 5.
RepMatrix pi_U(int a, int d, Branch b = Branch::i);
/// diag(ω₅(a), ω₅(d)) without the membership check (for the negative relation test).
RepMatrix pi_U_unchecked(int a, int d, Branch b = Branch::i);
/// Entrywise residue_hom.
F5Matrix reduce_matrix(const RepMatrix& x, Branch b = Branch::i);

struct GroupEnumeration {
  std::vector<F5Matrix> generators;     // (1,1;0,1), (0,−1;1,0), diag(a,d) with ad square
  std::vector<F5Matrix> elements;       // breadth-first discovery order
  std::vector<std::vector<int>> words;  // generator indices, shortest first found
  std::size_t max_word_length = 0;
};

/// Breadth-first closure of the generators; throws std::runtime_error if a word exceeds 40.
const GroupEnumeration& enumerate_group();
std::size_t group_index(const F5Matrix& g);  // throws std::out_of_range outside the group

/// π(g) from the discovery word. Throws std::out_of_range when g is not in the group.
RepMatrix lift_pi(const F5Matrix& g, Branch b = Branch::i);

struct HomomorphismCheck {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

/// lift_pi(g)lift_pi(h) = lift_pi(gh) on `samples` random pairs, or on all 240² pairs.
HomomorphismCheck check_homomorphism(std::size_t samples, std::uint64_t seed, bool exhaustive = false);

struct RelationCheck {
  bool orders = false;        // S⁵ = T⁴ = U(a,d)⁴ = 1
  bool relation1 = false;     // T U(a,d) T⁻¹ = U(d,a)
  bool relation2 = false;     // U(a,d) S U(a,d)⁻¹ = Sⁿ, n ≡ ad⁻¹
  bool relation3 = false;     // T S^d T⁻¹ = U(a,d) S^{−d} T⁻¹ S^{−a}, ad ≡ 1
  bool relation2_fails_off_group = false;  // relation 2 breaks for every ad⁻¹ ≡ ±2
  bool pass() const { return orders && relation1 && relation2 && relation3 && relation2_fails_off_group; }
};

RelationCheck check_relations(Branch b = Branch::i);
bool verify_relations();

struct CongruenceCheck {
  std::size_t elements = 0;
  std::size_t distinct_images = 0;  // faithfulness: 240
  bool reduces_to_g = false;        // residue_hom(π(g)) = g for every g
  bool literal_identity = false;    // residue_hom(π(g)) = 1 for every g (the literal reading; expected false)
  bool dyadic = false;              // all entries have power-of-2 denominators
  bool det_compatible = false;      // residue_hom(det π(g)) = det g
  bool teichmuller = false;         // residue_hom(ω₅(a)) = a
  bool pass() const {
    return elements == 240 && distinct_images == 240 && reduces_to_g && dyadic && det_compatible && teichmuller;
  }
};

CongruenceCheck check_congruence(Branch b = Branch::i);
bool verify_congruence();

}  // namespace klein5
