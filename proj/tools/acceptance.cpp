// One line per acceptance criterion. Exit status 0 iff every criterion has its recorded outcome:
// all pass except the known-red literal readings (3, 7), which must still fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "klein5/hecke.hpp"
#include "klein5/icosa.hpp"
#include "klein5/localfield.hpp"
#include "klein5/qcurve.hpp"
#include "klein5/quintic.hpp"
#include "klein5/repn.hpp"

using namespace klein5;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kCompositionPoints = 20;
constexpr std::size_t kCompositionPrimes = 3;
constexpr int kFamilySamples = 5;
constexpr int kUnitSamples = 20;
constexpr long kHeight = 1000;

const std::set<std::string> kKnownRed{"3", "7"};

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;  // runtime budget; 0 means none
  std::function<Outcome()> run;
  bool supplementary = false;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

Rational random_unit5(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  for (;;) {
    const long p = num(rng), q = den(rng);
    if (p % 5 != 0 && q % 5 != 0) return Rational(mpz_class(p), mpz_class(q));
  }
}

Outcome grid(ResolventConvention conv) {
  const auto g = resolvent_grid(conv);
  std::size_t bad = 0, trace_bad = 0;
  std::string first;
  for (const auto& r : g) {
    if (!(r.e1_zero && r.e2_zero)) ++trace_bad;
    if (r.pass()) continue;
    if (bad++ == 0) first = " first (m,n)=(" + r.m.to_string() + "," + r.n.to_string() + ")";
  }
  return {bad == 0, std::to_string(g.size() - bad) + "/" + std::to_string(g.size()) + " grid points, e1=e2=0 fails at " +
                        std::to_string(trace_bad) + first};
}

Outcome klein_link(bool negate_x) {
  int ok = 0;
  std::string detail;
  for (const Rational& j : {Rational(2), Rational(-25, 3), Rational(1000), Rational(7, 2), Rational(-1)}) {
    const auto r = check_klein_link(j, {Rational(31104), negate_x});
    ok += r.pass();
    detail += " j=" + j.to_string() + (r.forward_ok ? ":fwd" : ":FWD!") + (r.inverse_ok ? "/inv" : "/INV!");
  }
  return {ok == 5, std::to_string(ok) + "/5 samples;" + detail};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;
  cs.push_back({"1", "fundamental identity (lambda+3)^3(lambda^2+11lambda+64) = (mu^2+10mu+5)^3/mu", 10, [] {
                  return Outcome{verify_fundamental_identity(), "exact over Q(z)"};
                }});
  cs.push_back({"2", "j fixed by S, T, U over Q(zeta5); mu fixed by S; lambda moved by S", 0, [] {
                  const auto s = invariance_report(GenLabel::S);
                  const auto t = invariance_report(GenLabel::T);
                  const auto u = invariance_report(GenLabel::U);
                  const bool ok = s.j_invariant && t.j_invariant && u.j_invariant && s.mu_invariant && !s.lambda_invariant;
                  return Outcome{ok, std::string("lambda o U ") + (u.lambda_invariant ? "= lambda" : "!= lambda")};
                }});
  cs.push_back({"3", "resolvent quintic on the 6x6 grid, x_nu and (A,B,C) as printed", 600,
                [] { return grid(ResolventConvention::displayed); }});
  cs.push_back({"3*", "supplementary: same grid with the n-term scaled by 12 and the n^4 sign of B flipped", 600,
                [] { return grid(ResolventConvention::consistent); }, true});
  cs.push_back({"4", "table t parameters {3/5, 15/11, 1, 3, 3/2, 4/3}", 0, [] {
                  std::set<Rational> got;
                  bool rows = true;
                  for (const auto& c : reproduce_table()) {
                    rows = rows && c.match;
                    if (c.t_principal) got.insert(*c.t_principal);
                    if (c.t_original) got.insert(*c.t_original);
                  }
                  const std::set<Rational> want{Rational(3, 5), Rational(15, 11), Rational(1), Rational(3), Rational(3, 2),
                                                Rational(4, 3)};
                  return Outcome{rows && got == want, std::to_string(got.size()) + " distinct values"};
                }});
  cs.push_back({"5", "Disc(q_t) t^10 = 2^8 3^2 (9-5t^2)^4 in Q(t)", 0,
                [] { return Outcome{verify_family_disc_identity(), "exact"}; }});
  cs.push_back({"6", "Q-curve: codomain, composition = [-2], j(E_1) of the table model, j-equation roots", 0, [] {
                  const bool codomain = verify_isogeny_codomain();
                  int primes_ok = 0;
                  for (auto p : admissible_primes(kCompositionPrimes)) {
                    primes_ok += check_isogeny_composition(p, kCompositionPoints, kSeed).passed == kCompositionPoints;
                  }
                  const bool table = j_invariant(curve_from_t(Rational(1))) == j_invariant(table_row_curve());
                  bool jeq = j_solves_j_equation(Rational(1), Rational(0), Rational(4), Rational(16, 5));
                  std::mt19937_64 rng(kSeed);
                  int family = 0;
                  while (family < kFamilySamples) {
                    const Rational t = random_rational(rng);
                    if (t.is_zero() || Rational(5) * t * t == Rational(9)) continue;
                    jeq = jeq && j_solves_j_equation(t);
                    ++family;
                  }
                  const bool ok = codomain && primes_ok == static_cast<int>(kCompositionPrimes) && table && jeq;
                  return Outcome{ok, "codomain " + std::string(codomain ? "ok" : "bad") + ", primes " +
                                         std::to_string(primes_ok) + "/" + std::to_string(kCompositionPrimes) + " x " +
                                         std::to_string(kCompositionPoints) + " points, table j " + (table ? "ok" : "bad") +
                                         ", j-equation " + (jeq ? "ok" : "bad")};
                }});
  cs.push_back({"7", "Klein link for 5 rational j, inverse transform as printed", 0, [] { return klein_link(false); }});
  cs.push_back({"7*", "supplementary: inverse transform with x = -(x_P + x_2P)", 0, [] { return klein_link(true); }, true});
  cs.push_back({"8", "representation: 240 elements, faithful, orders, relations, reduction, varpi identities", 60, [] {
                  const auto& grp = enumerate_group();
                  const auto rel = check_relations();
                  const auto con = check_congruence();
                  const auto hom = check_homomorphism(0, 0, true);
                  const bool varpi_ok = check_varpi_identities().pass();
                  const bool ok = grp.elements.size() == 240 && con.distinct_images == 240 && rel.pass() && con.reduces_to_g &&
                                  hom.pass() && varpi_ok;
                  return Outcome{ok, std::to_string(con.distinct_images) + " distinct images, " + std::to_string(hom.pairs) +
                                         " products checked"};
                }});
  cs.push_back({"9", "Hecke: sigma and square identities on 192 units mod 8 sqrt5; omega(eps^2) = 1", 10, [] {
                  const auto s = check_sigma_identity();
                  const auto q = check_square_identity();
                  const auto p = check_positive_units();
                  return Outcome{s.pass() && q.pass() && p.pass() && s.units == 192,
                                 std::to_string(s.units) + " units, omega(eps) = " + to_string(p.omega_eps)};
                }});
  cs.push_back({"10", "local: Artin-Schreier identity, square-unit table, hypothesis on the family and the triple", 0, [] {
                  const bool as = artin_schreier_identity();
                  const bool table = is_square_5adic_unit(Rational(1)) && !is_square_5adic_unit(Rational(3)) &&
                                     !is_square_5adic_unit(Rational(3, 5)) && is_square_5adic_unit(Rational(4, 9));
                  std::mt19937_64 rng(kSeed);
                  bool family = true;
                  for (int k = 0; k < kUnitSamples; ++k) {
                    const Rational u = random_unit5(rng);
                    const Quintic q = family_quintic(u * u);
                    family = family && theorem_hypothesis(q.B, q.C);
                  }
                  const bool triple = theorem_hypothesis(Rational(4), Rational(16, 5)) &&
                                      !theorem_hypothesis(Rational(20), Rational(-16)) &&
                                      !theorem_hypothesis(Rational(-4), Rational(16, 5));
                  return Outcome{as && table && family && triple, std::to_string(kUnitSamples) + " random units"};
                }});
  cs.push_back({"11", "no rational points of height <= 1000 on y^2 = 15(x^2+1)(2x^3+2x^2-x+1)(x^3+x^2+2x-2)", 60, [] {
                  const auto h = hyperelliptic_search(kHeight);
                  return Outcome{h.points.empty(), std::to_string(h.tested) + " coprime pairs"};
                }});
  cs.push_back({"12", "mutation suite: each exact check fails under its single-coefficient mutation", 0, [] {
                  std::vector<std::pair<std::string, bool>> m;
                  {
                    const auto& f = build_invariants();
                    auto num = f.lambda.num();
                    num.set_coeff(3, num.coeff(3) + Rational(1));
                    m.emplace_back("fundamental", !verify_fundamental_identity(RatFuncQ(num, f.lambda.den()), f.mu));
                  }
                  m.emplace_back("disc", !verify_family_disc_identity(Rational(2305)));
                  m.emplace_back("codomain", !verify_isogeny_codomain(Rational(1)));
                  m.emplace_back("composition",
                                 !check_isogeny_composition(admissible_primes(1).front(), kCompositionPoints, kSeed,
                                                            Rational(1), true)
                                      .pass());
                  m.emplace_back("j-equation", !j_solves_j_equation(Rational(1), Rational(0), Rational(4), Rational(17, 5)));
                  m.emplace_back("klein-link", !verify_klein_link(Rational(2), {Rational(31105), true}));
                  m.emplace_back("artin-schreier", !artin_schreier_identity(Rational(-1)));
                  m.emplace_back("varpi", !check_varpi_identities(Branch::i, Rational(1)).two_minus_eps);
                  m.emplace_back("relation2", check_relations().relation2_fails_off_group);
                  std::size_t dropped = 0;
                  for (const auto& [x, wx] : omega().images) {
                    if (!(wx.pow(2) == teichmuller5(norm(x.a, x.b)).inverse())) ++dropped;
                  }
                  m.emplace_back("hecke-square", dropped > 0);
                  int caught = 0;
                  std::string missed;
                  for (const auto& [name, ok] : m) {
                    caught += ok;
                    if (!ok) missed += " " + name;
                  }
                  return Outcome{caught == static_cast<int>(m.size()),
                                 std::to_string(caught) + "/" + std::to_string(m.size()) + " mutations caught" +
                                     (missed.empty() ? "" : ", missed:" + missed)};
                }});
  return cs;
}

}  // namespace

int main() {
  int pass = 0, fail = 0, unexpected = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool ok = o.ok && in_time;
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + " s";
    if (c.limit_s > 0) timing += ", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    const bool red = kKnownRed.count(c.id) > 0;
    std::printf("%s %-3s %s [%s; %s]%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), o.detail.c_str(),
                timing.c_str(), red ? " (known red)" : "");
    if (!c.supplementary) (ok ? pass : fail)++;
    if (ok == red) ++unexpected;
  }
  std::printf("summary: %d pass, %d fail, %d unexpected\n", pass, fail, unexpected);
  return unexpected == 0 ? 0 : 1;
}
