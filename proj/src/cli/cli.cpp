#include "klein5/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "klein5/hecke.hpp"
#include "klein5/icosa.hpp"
#include "klein5/localfield.hpp"
#include "klein5/qcurve.hpp"
#include "klein5/quintic.hpp"
#include "klein5/repn.hpp"

namespace klein5::cli {

namespace {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

LogLevel log_level() {
  const char* v = std::getenv("KLEIN5_LOG");
  if (!v) return LogLevel::warn;
  const std::string s(v);
  if (s == "debug") return LogLevel::debug;
  if (s == "info") return LogLevel::info;
  if (s == "error") return LogLevel::error;
  if (s == "off") return LogLevel::off;
  return LogLevel::warn;
}

void log(std::ostream& err, LogLevel level, const std::string& msg) {
  static const char* names[] = {"debug", "info", "warn", "error"};
  if (level >= log_level() && level != LogLevel::off) err << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

CheckResult check(std::string id, std::string description, bool ok, std::optional<std::string> witness = {}) {
  return {std::move(id), std::move(description), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)};
}

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

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.to_string();
  return s;
}

std::string opt_string(const std::optional<Rational>& x) { return x ? x->to_string() : "none"; }

std::vector<CheckResult> icosa_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check("fundamental-identity", "(lambda+3)^3 (lambda^2+11 lambda+64) = (mu^2+10 mu+5)^3/mu",
                      verify_fundamental_identity()));
  {
    const auto& f = build_invariants();
    auto num = f.lambda.num();
    num.set_coeff(3, num.coeff(3) + Rational(1));
    out.push_back(check("fundamental-identity-mutation", "identity fails after adding 1 to the z^3 coefficient of lambda",
                        !verify_fundamental_identity(RatFuncQ(num, f.lambda.den()), f.mu)));
  }
  for (GenLabel g : {GenLabel::S, GenLabel::T, GenLabel::U}) {
    const auto r = invariance_report(g);
    std::string w = "j:" + std::string(r.j_invariant ? "fixed" : "moved") + " mu:" + (r.mu_invariant ? "fixed" : "moved") +
                    " lambda:" + (r.lambda_invariant ? "fixed" : "moved");
    const std::string desc = g == GenLabel::S ? "j and mu fixed by S, lambda moved" : "j fixed by " + to_string(g);
    out.push_back(check("invariance-" + to_string(g), desc, verify_invariance(g), w));
  }
  const auto conv = opts.literal ? ResolventConvention::displayed : ResolventConvention::consistent;
  const auto grid = resolvent_grid(conv);
  std::optional<std::string> witness;
  std::size_t failures = 0;
  for (const auto& r : grid) {
    if (r.pass()) continue;
    ++failures;
    if (!witness) {
      witness = "(m,n)=(" + r.m.to_string() + "," + r.n.to_string() + ") e1:" + (r.e1_zero ? "ok" : "bad") +
                " e2:" + (r.e2_zero ? "ok" : "bad") + " e3:" + (r.e3_ok ? "ok" : "bad") + " e4:" + (r.e4_ok ? "ok" : "bad") +
                " e5:" + (r.e5_ok ? "ok" : "bad");
    }
  }
  if (witness) *witness += "; " + std::to_string(failures) + " of " + std::to_string(grid.size()) + " grid points fail";
  out.push_back(check("resolvent-grid", "x_0..x_4 are the roots of x^5+Ax^2+Bx+C on the 6x6 (m,n) grid, convention " +
                                            to_string(conv),
                      failures == 0, witness));
  return out;
}

std::vector<CheckResult> klein_link_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const KleinLinkOptions link{Rational(31104), !opts.literal};
  for (const Rational& j : {Rational(2), Rational(-25, 3), Rational(1000), Rational(7, 2), Rational(-1)}) {
    const auto r = check_klein_link(j, link);
    out.push_back(check("j=" + j.to_string(),
                        std::string("forward and inverse transforms between roots of q' and of g, inverse with ") +
                            (opts.literal ? "x = x_P + x_2P" : "x = -(x_P + x_2P)"),
                        r.pass(),
                        std::string("forward:") + (r.forward_ok ? "ok" : "bad") + " inverse:" + (r.inverse_ok ? "ok" : "bad")));
  }
  out.push_back(check("transform-mutation", "inverse transform fails with constant 31105",
                      !verify_klein_link(Rational(2), {Rational(31105), true})));
  return out;
}

std::vector<CheckResult> qcurve_checks(const VerifyOptions& opts, std::vector<std::string>& warnings) {
  std::vector<CheckResult> out;
  out.push_back(check("isogeny-codomain", "phi maps E_t onto E_t^sigma, t transcendental", verify_isogeny_codomain()));
  out.push_back(
      check("isogeny-codomain-mutation", "codomain identity fails with r shifted by 1", !verify_isogeny_codomain(Rational(1))));
  if (opts.samples == 0) warnings.push_back("samples = 0: the finite-field composition checks are vacuous");
  const auto primes = admissible_primes(3);
  for (auto p : primes) {
    const auto r = check_isogeny_composition(p, opts.samples, opts.seed);
    out.push_back(check("isogeny-composition-p" + std::to_string(p), "phi^sigma(phi(P)) = [-2]P on random points of E_1 mod p",
                        r.pass(),
                        std::to_string(r.passed) + "/" + std::to_string(r.trials) + " sqrt5=" + std::to_string(r.sqrt5) +
                            " sqrt-2=" + std::to_string(r.sqrtm2)));
  }
  if (opts.samples > 0) {
    out.push_back(check("isogeny-composition-mutation", "composition fails without the (r - x^2) factor",
                        !check_isogeny_composition(primes.front(), opts.samples, opts.seed, Rational(1), true).pass()));
  } else {
    out.push_back({"isogeny-composition-mutation", "composition fails without the (r - x^2) factor", CheckStatus::skipped,
                   std::string("samples = 0")});
  }
  const auto j1 = j_invariant(curve_from_t(Rational(1)));
  out.push_back(check("table-row-j", "j(E_1) = j(y^2 = x^3 + (5-sqrt5)x^2 + sqrt5 x)", j1 == j_invariant(table_row_curve()),
                      "j(E_1) = " + j1.to_string()));
  out.push_back(check("j-equation-buhler", "j(E_1) solves the j-equation of x^5 + 4x + 16/5",
                      j_solves_j_equation(Rational(1), Rational(0), Rational(4), Rational(16, 5))));
  std::mt19937_64 rng(opts.seed);
  std::vector<Rational> ts;
  while (ts.size() < 5) {
    const Rational t = random_rational(rng);
    if (t.is_zero() || Rational(5) * t * t == Rational(9)) continue;
    ts.push_back(t);
  }
  bool all = true;
  for (const auto& t : ts) all = all && j_solves_j_equation(t);
  out.push_back(check("j-equation-family", "j(E_t) solves the j-equation of q_t for 5 random t", all, "t = " + join(ts)));
  out.push_back(check("j-equation-mutation", "j(E_1) does not solve the j-equation of x^5 + 4x + 17/5",
                      !j_solves_j_equation(Rational(1), Rational(0), Rational(4), Rational(17, 5))));
  const auto h = hyperelliptic_search(opts.height);
  std::string w = std::to_string(h.tested) + " coprime pairs tested";
  if (!h.points.empty()) w = "x = " + h.points.front().x.to_string() + ", y = " + h.points.front().y.to_string();
  out.push_back(check("hyperelliptic-height", "no rational points of height <= " + std::to_string(opts.height) +
                                                  " on y^2 = 15(x^2+1)(2x^3+2x^2-x+1)(x^3+x^2+2x-2)",
                      h.points.empty(), w));
  return out;
}

std::vector<CheckResult> repn_checks() {
  std::vector<CheckResult> out;
  const auto v = check_varpi_identities();
  out.push_back(check("varpi-identities", "2 - eps, 2 - omega5(2) and sqrt5 factor through varpi; residues vanish", v.pass()));
  out.push_back(check("varpi-mutation", "2 + eps does not factor as eps^2 varpi varpibar",
                      !check_varpi_identities(Branch::i, Rational(1)).two_minus_eps));
  const auto& grp = enumerate_group();
  bool dets = true;
  for (const auto& m : grp.elements) dets = dets && (f5_det(m) == 1 || f5_det(m) == 4);
  out.push_back(check("enumeration", "Z(F5) SL2(F5) has 240 elements, all with square determinant",
                      grp.elements.size() == 240 && dets,
                      std::to_string(grp.elements.size()) + " elements, max word length " +
                          std::to_string(grp.max_word_length)));
  const auto rel = check_relations();
  out.push_back(check("orders", "S^5 = T^4 = U^4 = 1", rel.orders));
  out.push_back(check("relations", "T U(a,d) T^-1 = U(d,a); U S U^-1 = S^(a/d); T S^d T^-1 = U(a,d) S^-d T^-1 S^-a",
                      rel.relation1 && rel.relation2 && rel.relation3));
  out.push_back(check("relation2-off-group", "U S U^-1 = S^n fails when a/d = 2 or 3", rel.relation2_fails_off_group));
  const auto hom = check_homomorphism(0, 0, true);
  out.push_back(check("homomorphism", "pi(gh) = pi(g) pi(h) on all pairs", hom.pass(),
                      std::to_string(hom.failures) + " failures in " + std::to_string(hom.pairs) + " pairs"));
  const auto c = check_congruence();
  out.push_back(check("faithful", "240 distinct images", c.distinct_images == 240, std::to_string(c.distinct_images)));
  out.push_back(check("congruence", "pi(g) reduces to g mod varpi; dyadic entries; det and Teichmuller compatible", c.pass(),
                      std::string("reduces to identity: ") + (c.literal_identity ? "yes" : "no")));
  return out;
}

std::vector<CheckResult> hecke_checks() {
  std::vector<CheckResult> out;
  const std::size_t n4 = ResidueRing(HeckeModulus::four).units().size();
  const std::size_t n8 = ResidueRing(HeckeModulus::eight).units().size();
  const std::size_t n5 = ResidueRing(HeckeModulus::sqrt5).units().size();
  const std::size_t n40 = ResidueRing(HeckeModulus::eight_sqrt5).units().size();
  out.push_back(check("unit-groups", "unit groups of orders 12, 48, 4, 192", n4 == 12 && n8 == 48 && n5 == 4 && n40 == 192,
                      std::to_string(n4) + ", " + std::to_string(n8) + ", " + std::to_string(n5) + ", " + std::to_string(n40)));
  out.push_back(check("multiplicative", "omega4, omega8, omega5 and omega are multiplicative",
                      is_multiplicative(omega4()) && is_multiplicative(omega8()) && is_multiplicative(omega5_hecke()) &&
                          is_multiplicative(omega())));
  const auto s = check_sigma_identity();
  out.push_back(check("sigma-identity", "omega(sigma x)/omega(x) = (-2/N x) on all units mod 8 sqrt5", s.pass(),
                      std::to_string(s.failures) + " failures in " + std::to_string(s.units)));
  const auto q = check_square_identity();
  out.push_back(check("square-identity", "omega(x)^2 = (-1/N x) omega5(N x)^-1 on all units mod 8 sqrt5", q.pass(),
                      std::to_string(q.failures) + " failures in " + std::to_string(q.units)));
  std::size_t dropped = 0;
  for (const auto& [x, wx] : omega().images) {
    if (!(wx.pow(2) == teichmuller5(norm(x.a, x.b)).inverse())) ++dropped;
  }
  out.push_back(check("square-identity-mutation", "square identity fails without the (-1/N x) factor", dropped > 0,
                      std::to_string(dropped) + " failures"));
  const auto p = check_positive_units();
  std::string group;
  for (int e : p.value_group) group += (group.empty() ? "" : ",") + std::to_string(e);
  out.push_back(check("positive-units", "omega(eps^2) = 1", p.pass(),
                      "omega(eps) = " + to_string(p.omega_eps) + "; value exponents {" + group + "}"));
  out.push_back(check("omega5-compatibility", "Hecke omega5 at rational residues equals the Teichmuller character",
                      verify_omega5_compatibility()));
  return out;
}

std::vector<CheckResult> localfield_checks(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check("artin-schreier", "q_t(x/s) s^5 = x^5 - x - y with s = 5y/4", artin_schreier_identity()));
  out.push_back(check("artin-schreier-mutation", "identity fails with k = -1 in the quartic relation",
                      !artin_schreier_identity(Rational(-1))));
  const bool table = is_square_5adic_unit(Rational(1)) && !is_square_5adic_unit(Rational(3)) &&
                     !is_square_5adic_unit(Rational(3, 5)) && is_square_5adic_unit(Rational(4, 9));
  out.push_back(check("square-unit-table", "1 -> T, 3 -> F, 3/5 -> F, 4/9 -> T", table));
  const bool triple = theorem_hypothesis(Rational(4), Rational(16, 5)) && !theorem_hypothesis(Rational(20), Rational(-16)) &&
                      !theorem_hypothesis(Rational(-4), Rational(16, 5));
  out.push_back(check("hypothesis-triple", "(4, 16/5) -> T, (20, -16) -> F, (-4, 16/5) -> F", triple));
  std::mt19937_64 rng(opts.seed);
  std::vector<Rational> us;
  bool all = true;
  for (int k = 0; k < opts.samples; ++k) {
    const Rational u = random_unit5(rng);
    us.push_back(u);
    const Quintic q = family_quintic(u * u);
    all = all && theorem_hypothesis(q.B, q.C);
  }
  out.push_back(check("intro-family", "hypothesis holds for q_(u^2) at " + std::to_string(opts.samples) + " random 5-adic units u",
                      all, us.empty() ? std::nullopt : std::optional<std::string>("first u = " + us.front().to_string())));
  return out;
}

std::vector<CheckResult> suite_checks(const std::string& suite, const VerifyOptions& opts, std::vector<std::string>& warnings) {
  if (suite == "icosa") return icosa_checks(opts);
  if (suite == "klein-link") return klein_link_checks(opts);
  if (suite == "qcurve") return qcurve_checks(opts, warnings);
  if (suite == "repn") return repn_checks();
  if (suite == "hecke") return hecke_checks();
  if (suite == "localfield") return localfield_checks(opts);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Rational json_rational(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(v.get<long>()));
  throw std::invalid_argument(std::string("field '") + key + "' must be a \"p/q\" string or an integer");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["status"] = r.pass() ? "pass" : "fail";
  j["seed"] = r.options.seed;
  j["options"] = {{"samples", r.options.samples}, {"height", r.options.height}, {"literal", r.options.literal}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o;
    o["id"] = c.id;
    o["description"] = c.description;
    o["status"] = to_string(c.status);
    if (c.witness) o["witness"] = *c.witness;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

QuinticRecord parse_record(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  try {
    QuinticRecord q{j.contains("A") ? json_rational(j, "A") : Rational(0), json_rational(j, "B"), json_rational(j, "C"), {}};
    if (j.contains("label")) q.label = j.at("label").get<std::string>();
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

Json analyze_record(const QuinticRecord& q) {
  Json j;
  if (q.label) j["label"] = *q.label;
  j["A"] = q.A.to_string();
  j["B"] = q.B.to_string();
  j["C"] = q.C.to_string();
  Json errors = Json::object();
  const Quintic quintic{q.A, q.B, q.C};
  const auto inv = invariants(quintic);
  j["invariants"] = {{"delta", inv.delta.to_string()},
                     {"gamma4", inv.gamma4.to_string()},
                     {"gamma6", inv.gamma6.to_string()},
                     {"disc", inv.disc.to_string()}};
  try {
    const auto jc = j_candidates(quintic);
    Json o;
    o["radicand"] = jc.radicand.to_string();
    o["quad_disc"] = jc.quad_disc.to_string();
    o["cofactor"] = jc.cofactor ? Json(jc.cofactor->to_string()) : Json(nullptr);
    o["square_class_ok"] = jc.square_class_ok;
    o["center"] = jc.center.to_string();
    o["half_width"] = jc.half_width.to_string();
    if (jc.rational_roots) o["rational_roots"] = {jc.rational_roots->first.to_string(), jc.rational_roots->second.to_string()};
    j["j_candidates"] = std::move(o);
  } catch (const std::exception& e) {
    j["j_candidates"] = nullptr;
    errors["j_candidates"] = e.what();
  }
  j["t"] = nullptr;
  j["hypothesis"] = nullptr;
  if (!q.A.is_zero()) {
    errors["t"] = "t is defined for trinomials (A = 0)";
  } else {
    try {
      const auto t = trinomial_t(q.B, q.C);
      if (t) j["t"] = t->to_string();
      j["hypothesis"] = theorem_hypothesis(q.B, q.C);
    } catch (const std::exception& e) {
      errors["t"] = e.what();
    }
  }
  j["errors"] = std::move(errors);
  return j;
}

std::vector<Json> analyze_batch(const std::vector<QuinticRecord>& records, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  workers = std::min<unsigned>(workers, std::max<std::size_t>(records.size(), 1));
  std::vector<Json> out(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) out[k] = analyze_record(records[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"icosa", "klein-link", "qcurve", "repn", "hecke", "localfield"};
  return names;
}

VerificationReport verify_suite(const std::string& suite, const VerifyOptions& opts) {
  VerificationReport r;
  r.suite = suite;
  r.options = opts;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      for (auto& c : suite_checks(name, opts, r.warnings)) {
        c.id = name + "/" + c.id;
        r.checks.push_back(std::move(c));
      }
    }
    return r;
  }
  r.checks = suite_checks(suite, opts, r.warnings);
  return r;
}

VerificationReport table_report() {
  VerificationReport r;
  r.suite = "table";
  int row = 0;
  for (const auto& c : reproduce_table()) {
    ++row;
    r.checks.push_back(check("row-" + std::to_string(row), c.original + " | " + c.principal, c.match,
                             "listed {" + join(c.listed) + "}, from principal " + opt_string(c.t_principal) +
                                 ", from original " + opt_string(c.t_original)));
  }
  return r;
}

Json table_rows_json() {
  Json rows = Json::array();
  for (const auto& c : reproduce_table()) {
    Json o;
    o["original"] = c.original;
    o["principal"] = c.principal;
    Json listed = Json::array();
    for (const auto& t : c.listed) listed.push_back(t.to_string());
    o["listed"] = std::move(listed);
    o["t_principal"] = c.t_principal ? Json(c.t_principal->to_string()) : Json(nullptr);
    o["t_original"] = c.t_original ? Json(c.t_original->to_string()) : Json(nullptr);
    o["match"] = c.match;
    rows.push_back(std::move(o));
  }
  return rows;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    log(err, LogLevel::error, "cannot open '" + path + "' for writing");
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

std::vector<QuinticRecord> read_records(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  std::vector<QuinticRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse_record(Json::parse(line)));
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification tools for icosahedral quintics, Q-curves and the attached characters"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool timing = false;
  app.add_option("--out", out_path, "Write the JSON report to this path instead of stdout");
  app.add_flag("--timing", timing, "Include wall_time_ms in the report");

  auto* analyze = app.add_subcommand("analyze", "Invariants, j candidates, t and the local hypothesis per quintic");
  std::string file, a_text = "0", b_text, c_text;
  bool json_lines = false;
  auto* file_opt = analyze->add_option("--file", file, "JSON-lines input, one quintic per line");
  auto* b_opt = analyze->add_option("--b", b_text, "Coefficient B (p/q)");
  auto* c_opt = analyze->add_option("--c", c_text, "Coefficient C (p/q)");
  auto* a_opt = analyze->add_option("--a", a_text, "Coefficient A (p/q), default 0");
  analyze->add_flag("--json", json_lines, "Emit one JSON object per line instead of a single report");
  b_opt->needs(c_opt);
  c_opt->needs(b_opt);
  a_opt->needs(b_opt);
  file_opt->excludes(b_opt)->excludes(c_opt)->excludes(a_opt);

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite;
  VerifyOptions opts;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--samples", opts.samples, "Random trials per probabilistic check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opts.seed, "PRNG seed");
  verify->add_option("--height", opts.height, "Height bound for the hyperelliptic search")->check(CLI::PositiveNumber);
  verify->add_flag("--literal", opts.literal, "Use the printed resolvent convention and inverse transform");

  auto* table = app.add_subcommand("table", "Recompute the t parameters of the table rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 2;
  }

  const auto start = Clock::now();
  try {
    if (*analyze) {
      if (file.empty() && b_text.empty()) {
        err << "analyze needs --file or --b/--c\n";
        return 2;
      }
      std::vector<QuinticRecord> records;
      if (!file.empty()) {
        records = read_records(file);
      } else {
        records.push_back({Rational::parse(a_text), Rational::parse(b_text), Rational::parse(c_text), {}});
      }
      log(err, LogLevel::info, "analyzing " + std::to_string(records.size()) + " records");
      const auto results = analyze_batch(records);
      std::string text;
      if (json_lines) {
        for (const auto& r : results) text += r.dump() + "\n";
      } else {
        Json report;
        report["suite"] = "analyze";
        report["status"] = "pass";
        report["records"] = results;
        if (timing) report["wall_time_ms"] = elapsed_ms(start);
        text = report.dump(2) + "\n";
      }
      return emit(text, out_path, out, err) ? 0 : 2;
    }
    VerificationReport report;
    Json extra;
    if (*verify) {
      log(err, LogLevel::info, "running suite " + suite);
      report = verify_suite(suite, opts);
    } else if (*table) {
      report = table_report();
      extra = table_rows_json();
    }
    for (const auto& w : report.warnings) log(err, LogLevel::warn, w);
    if (timing) report.wall_time_ms = elapsed_ms(start);
    Json j = to_json(report);
    if (!extra.is_null()) j["rows"] = std::move(extra);
    if (!emit(j.dump(2) + "\n", out_path, out, err)) return 2;
    for (const auto& c : report.checks) {
      if (c.status == CheckStatus::fail) log(err, LogLevel::warn, "check " + c.id + " failed");
    }
    return report.pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace klein5::cli
