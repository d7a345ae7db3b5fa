#include <sstream>

#include "dmod/cli.hpp"
#include "dmod/errors.hpp"
#include "dmod/parse.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod::cli {

namespace {

Poly P(const AlgebraPtr& a, const std::string& s) { return parse_element(s, a); }

std::vector<Poly> Ps(const AlgebraPtr& a, const std::vector<std::string>& xs) {
  std::vector<Poly> out;
  for (const auto& x : xs) out.push_back(P(a, x));
  return out;
}

AlgebraPtr ring(const std::vector<std::string>& names) { return commutative(names); }

CaseResult pass() { return {CaseResult::Pass, ""}; }
CaseResult fail(std::string why) { return {CaseResult::Fail, std::move(why)}; }

CaseResult expect_roots(const BFunction& b, const std::map<Rational, int>& want, const std::string& label) {
  if (b.roots == want && b.remainder.degree() == 0) return pass();
  BFunction w;
  w.roots = want;
  return fail(label + " gave " + b.roots_string() + ", expected " + w.roots_string());
}

std::map<Rational, int> roots(std::initializer_list<std::pair<Rational, int>> rs) {
  std::map<Rational, int> m;
  for (const auto& [r, k] : rs) m[r] = k;
  return m;
}

Rational q(long a, long b) { return make_rational(a, b); }

// Runs the CLI in-process and returns (status, stdout, stderr).
struct CliRun {
  int status;
  std::string out, err;
};

CliRun cli(const std::string& command, Session s) {
  std::ostringstream out, err;
  int st = run_command(command, s, out, err);
  return {st, out.str(), err.str()};
}

Session session(std::vector<std::string> ring, std::vector<std::string> polys) {
  Session s;
  s.ring = std::move(ring);
  s.polys = std::move(polys);
  return s;
}

const std::vector<std::string> kReiffenAnn{
    "2*x*y*Dx-3*x^2*Dy-y^2*Dy+2*y*Dx",
    "2*x^2*Dx+2*x*y*Dy+2*x*Dx+3*y*Dy-6*x*s-6*s",
    "x^2*y*Dy+y^3*Dy-2*x^2*Dx-3*x*y*Dy-2*y^2*s+6*x*s",
    "x^3*Dy+x*y^2*Dy+y^2*Dy-2*x*y*s-2*y*s",
    "2*y^3*Dx*Dy+3*x^3*Dy^2+x*y^2*Dy^2-4*x^2*Dx^2-8*x*y*Dx*Dy-2*x^2*Dx-4*y^2*Dx*s+6*x*y*Dy+12*x*Dx*s-10*x*Dx-"
    "6*y*Dy+12*s"};

const std::vector<std::string> kRationalAnn{"3*x*Dx+2*y*Dy+1", "y^3*Dy^2-x^2*Dy^2+6*y^2*Dy+6*y",
                                         "9*y^2*Dx^2*Dy-4*y*Dy^3+27*y*Dx^2+2*Dy^2", "y^4*Dy-x^2*y*Dy+2*y^3+x^2",
                                         "9*y^3*Dx^2-4*y^2*Dy^2+10*y*Dy-10"};

const std::vector<std::string> kLogAnn{
    "4*x^2*Dx+5*x*Dx*y+3*x*y*Dy-16*x*s+4*y^2*Dy-20*y*s",
    "16*x*Dx*y^2-125*x*Dx*y-4*x^2*Dy+4*Dx*y^3+5*x*y*Dy+12*y^3*Dy-100*y^2*Dy-64*y^2*s+500*y*s"};

const std::vector<std::string> kTangentBundle{
    "3*y0^2*Dx1-2*x0*Dy1",
    "3*y0^2*Dx0+6*y0*y1*Dx1-2*x0*Dy0-2*x1*Dy1",
    "x0*y0*Dx1*Dy0-x0*y0*Dx0*Dy1+x1*y0*Dx1*Dy1-2*x0*y1*Dx1*Dy1",
    "3*y0*y1*Dx1^2-x0*Dx1*Dy0+x0*Dx0*Dy1-x1*Dx1*Dy1",
    "3*x0*y0*y1*Dx0*Dx1*Dy1+6*x0*y1^2*Dx1^2*Dy1-x0^2*Dx1*Dy0^2+x0^2*Dx0*Dy0*Dy1-2*x0*x1*Dx1*Dy0*Dy1+x0*x1*Dx0*Dy1^2-"
    "x1^2*Dx1*Dy1^2+3*x1*y0*Dx1^2+3*x0*y1*Dx1^2-3*y0*y1*Dx1*Dy1",
    "6*x0*y1^2*Dx1^2*Dy0*Dy1+3*x0*y0*y1*Dx0^2*Dy1^2-3*x1*y0*y1*Dx0*Dx1*Dy1^2+6*x0*y1^2*Dx0*Dx1*Dy1^2-x0^2*Dx1*Dy0^3+"
    "x0^2*Dx0*Dy0^2*Dy1-2*x0*x1*Dx1*Dy0^2*Dy1+x0*x1*Dx0*Dy0*Dy1^2-x1^2*Dx1*Dy0*Dy1^2+3*x1*y0*Dx1^2*Dy0+"
    "3*x0*y1*Dx1^2*Dy0+9*x0*y1*Dx0*Dx1*Dy1-6*y0*y1*Dx1*Dy0*Dy1+3*y0*y1*Dx0*Dy1^2+6*y1^2*Dx1*Dy1^2+3*x1*Dx1^2+"
    "3*y1*Dx1*Dy1",
    "6*x0*y1^2*Dx1^3*Dy1-x0^2*Dx1^2*Dy0^2+2*x0^2*Dx0*Dx1*Dy0*Dy1-2*x0*x1*Dx1^2*Dy0*Dy1-x0^2*Dx0^2*Dy1^2+"
    "2*x0*x1*Dx0*Dx1*Dy1^2-x1^2*Dx1^2*Dy1^2-3*x0*y0*Dx0*Dx1^2+3*x1*y0*Dx1^3+3*x0*y1*Dx1^3-2*x0*Dx1*Dy0*Dy1+"
    "x0*Dx0*Dy1^2-3*x1*Dx1*Dy1^2+6*y0*Dx1^2",
    "s22-x1*Dx1-y1*Dy1",
    "6*s21-3*x0*Dx1-2*y0*Dy1",
    "6*s11-3*x0*Dx0+3*x1*Dx1-2*y0*Dy0+4*y1*Dy1",
    "s12*x0+3*y0*y1^2*Dx1-x0*x1*Dx0+x1^2*Dx1-x0*y1*Dy0",
    "s12*y0*Dy1-x1*y0*Dx1*Dy0+2*x1*y1*Dx1*Dy1-y0*y1*Dy0*Dy1+2*y1^2*Dy1^2-y0*Dy0+4*y1*Dy1",
    "3*s12*y0^2+6*x1*y0*y1*Dx1-3*y0^2*y1*Dy0+6*y0*y1^2*Dy1-2*x0*x1*Dy0",
    "s12*x1*Dy1^2-3*s12*y0*Dx1+3*x1*y0*y1*Dx0*Dx1*Dy1+6*x1*y1^2*Dx1^2*Dy1-3*y0*y1^2*Dx1*Dy0*Dy1+"
    "3*y0*y1^2*Dx0*Dy1^2+6*y1^3*Dx1*Dy1^2-x0*x1*Dx1*Dy0^2+x0*x1*Dx0*Dy0*Dy1-2*x1^2*Dx1*Dy0*Dy1-x1*y1*Dy0*Dy1^2+"
    "3*x1*y0*Dx0*Dx1+3*x1*y1*Dx1^2-6*y0*y1*Dx1*Dy0+9*y0*y1*Dx0*Dy1+18*y1^2*Dx1*Dy1-2*x1*Dy0*Dy1+3*y0*Dx0",
    "3*s12*y0*y1*Dx1-s12*x1*Dy1-3*x1*y0*y1*Dx0*Dx1-3*y0*y1^2*Dx0*Dy1+x1^2*Dx1*Dy0+x1*y1*Dy0*Dy1-3*y0*y1*Dx0+"
    "x1*Dy0"};

const std::vector<std::string> kSmall{"x^2+y^2", "2*x*y", "x^2-y^3", "x^3+y^2+x*y^2"};

CaseResult reiffen_annihilator(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  auto a = sannfs_bm({P(r, "x^3+y^2+x*y^2")}, opt);
  if (!ideal_equal(a.gens.gens(), Ps(a.algebra, kReiffenAnn), opt.gb)) return fail("not ideal-equal to the printed basis");
  return pass();
}

CaseResult normal_crossing(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  Poly f = P(r, "2*x*y");
  auto want = roots({{-1, 2}});
  if (auto c = expect_roots(bfct(f, {}, opt), want, "bfct"); c.status != CaseResult::Pass) return c;
  auto ann = sannfs_bm({f}, opt);
  if (auto c = expect_roots(bfct_ann(ann, opt), want, "bfct_ann"); c.status != CaseResult::Pass) return c;
  if (!ideal_equal(ann.gens.gens(), Ps(ann.algebra, {"y*Dy-s", "x*Dx-s"}), opt.gb)) return fail("Ann(f^s) differs");
  return pass();
}

CaseResult hyperplanes(const DmodOptions& opt) {
  auto r = ring({"x", "y", "z"});
  return expect_roots(bfct(P(r, "x*y*z*(z-y)*(y+z)"), {}, opt),
                      roots({{-1, 3}, {q(-1, 2), 1}, {q(-3, 4), 1}, {q(-5, 4), 1}, {q(-3, 2), 1}}), "bfct");
}

CaseResult annpoly_xy(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  GBasis G = ann_poly(P(r, "2*x*y"), opt);
  if (!ideal_equal(G.gens(), Ps(G.algebra(), {"Dy^2", "y*Dy-1", "Dx^2", "x*Dx-1"}), opt.gb))
    return fail("Ann(2xy) differs");
  return pass();
}

CaseResult annrat(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  GBasis G = ann_rat(P(r, "2*x*y"), P(r, "x^2-y^3"), opt);
  if (!ideal_equal(G.gens(), Ps(G.algebra(), kRationalAnn), opt.gb)) return fail("not ideal-equal to the printed basis");
  return pass();
}

CaseResult zeta_operator(const DmodOptions& opt) {
  auto r = ring({"x"});
  auto ann = sannfs_bm({P(r, "x^2-x")}, opt);
  BFunction b = bfct_ann(ann, opt);
  if (b.poly != UniPoly({1, 1})) return fail("b = " + b.poly.to_string());
  Poly printed = P(ann.algebra, "(2*x-1)*Dx-4*(s+1)");
  Poly canon = bernstein_operator_nf(printed, ann, opt);
  const char* names[] = {"modulo", "search", "lift"};
  Poly ops[] = {operator_modulo(ann, b.poly, opt), operator_search(ann, b.poly, opt),
                operator_lift(ann, b.poly, true, opt)};
  for (int k = 0; k < 3; ++k) {
    Poly nf = bernstein_operator_nf(ops[k], ann, opt);
    if (!is_bernstein_operator(nf, ann, b.poly)) return fail(std::string(names[k]) + ": identity fails");
    if (nf != canon) return fail(std::string(names[k]) + ": " + to_string(nf) + " not congruent");
  }
  return pass();
}

CaseResult log_annihilator(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  auto a = sannfs_log(P(r, "x^4+y^5+x*y^4"), opt);
  if (!ideal_equal(a.gens.gens(), Ps(a.algebra, kLogAnn), opt.gb)) return fail("Ann^(1) differs from the printed pair");
  return pass();
}

CaseResult order_two_annihilator(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  Poly f = P(r, "x^4+y^5+x*y^4");
  auto a2 = ann_upto_k(f, 2, opt);
  auto full = sannfs_bm({f}, opt);
  if (!ideal_equal(a2.gens.gens(), full.gens.gens(), opt.gb)) return fail("Ann^(2) != Ann(f^s)");
  return pass();
}

CaseResult curve_arrangement(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  return expect_roots(bfct(P(r, "(x^3-y^2)*(3*x-2*y-1)*(x+2*y)"), {}, opt),
                      roots({{q(-2, 3), 1},
                             {q(-5, 8), 1},
                             {q(-3, 4), 1},
                             {q(-7, 8), 1},
                             {-1, 2},
                             {q(-4, 3), 1},
                             {q(-5, 4), 1},
                             {q(-9, 8), 1},
                             {q(-11, 8), 1}}),
                      "bfct");
}

CaseResult variety_r1(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  for (const auto& text : kSmall) {
    Poly f = P(r, text);
    if (bfct_var({f}, std::nullopt, opt) != bfct_ann(f, opt)) return fail("bfct_var != bfct_ann for " + text);
  }
  return pass();
}

CaseResult tangent_bundle(const DmodOptions& opt) {
  auto r = ring({"x0", "x1", "y0", "y1"});
  auto fs = Ps(r, {"x0^2+y0^3", "2*x0*x1+3*y0^2*y1"});
  auto ann = sannfs_var(fs, opt);
  if (!ideal_equal(ann.gens.gens(), Ps(ann.algebra, kTangentBundle), opt.gb))
    return fail("Ann F^s differs from the printed basis");
  if (int d = lt_dimension(ann.gens); d != 6) return fail("GK dimension " + std::to_string(d));
  if (!reduces_to_zero(P(ann.algebra, "s12*s21-s11*s22-s11"), ann.gens)) return fail("central element not in Ann");
  auto want = roots({{-1, 2}, {q(-1, 3), 2}, {q(-2, 3), 2}, {q(-1, 2), 1}, {q(-5, 6), 1}, {q(-7, 6), 1}});
  BFunction b = bfct_var(ann, opt);
  BFunction bz = unipoly_rational_roots(b.poly.compose_linear(1, Rational(1 - variety_codim(fs))));
  return expect_roots(bz, want, "b_TX");
}

CaseResult unsupported_window(const DmodOptions& opt) {
  // x^5+y^5+x^2y^3 has minimal integer root -1, so its window is empty and
  // alpha = -1 is served by substitution.
  auto r2 = ring({"x", "y"});
  Poly f = P(r2, "x^5+y^5+x^2*y^3");
  if (int m = min_integer_root(sannfs_bm({f}, opt), opt); m != -1)
    return fail("min integer root of x^5+y^5+x^2*y^3 is " + std::to_string(m));
  if (auto run = cli("ann-falpha", [] {
        auto s = session({"x", "y"}, {"x^5+y^5+x^2*y^3"});
        s.alpha = "-1";
        return s;
      }());
      run.status != kOk)
    return fail("ann-falpha at alpha = -1 on the empty window failed");
  const std::string needle = "requires SST Alg. 5.3.15";
  auto q4 = session({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2"});
  q4.alpha = "-1";
  auto run = cli("ann-falpha", q4);
  if (run.status != kComputation || run.err.find(needle) == std::string::npos)
    return fail("ann-falpha in the window: status " + std::to_string(run.status));
  run = cli("ann-rat", session({"x", "y", "z", "w"}, {"1", "x^2+y^2+z^2+w^2"}));
  if (run.status != kComputation || run.err.find(needle) == std::string::npos)
    return fail("ann-rat with min root -2: status " + std::to_string(run.status));
  return pass();
}

CaseResult cli_examples(const DmodOptions&) {
  auto run = cli("bfct", session({"x", "y"}, {"2*x*y"}));
  if (run.out != "roots: (-1, 2)\n") return fail("bfct 2xy printed '" + run.out + "'");
  run = cli("bfct", session({"x", "y", "z"}, {"x*y*z*(z-y)*(y+z)"}));
  if (run.out != "roots: (-3/2, 1) (-5/4, 1) (-1, 3) (-3/4, 1) (-1/2, 1)\n")
    return fail("bfct hyperplanes printed '" + run.out + "'");
  auto s = session({"x"}, {"x"});
  s.alpha = "-1/2";
  run = cli("ann-falpha", s);
  if (run.status != kOk || run.out.find("\nx*Dx+1/2\n") == std::string::npos)
    return fail("ann-falpha x^(-1/2) printed '" + run.out + "'");
  return pass();
}

CaseResult bernstein_sato_ideal(const DmodOptions& opt) {
  auto r = ring({"x", "y"});
  GBasis B = bs_ideal(Ps(r, {"x", "y"}), opt);
  if (B.size() != 1 || B[0] != P(B.algebra(), "(s1+1)*(s2+1)")) return fail("B(x, y) is not <(s1+1)(s2+1)>");
  return pass();
}

CaseResult bmi_example(const DmodOptions& opt) {
  auto r = ring({"x", "y", "z"});
  GBasis B = bs_ideal(Ps(r, {"z", "x^5+y^5+x^2*y^3*z"}), opt);
  if (B.size() != 3) return fail(std::to_string(B.size()) + " generators");
  std::vector<std::string> lms;
  for (const auto& g : B) lms.push_back(to_string(Poly::monomial(B.algebra(), g.lm())));
  std::sort(lms.begin(), lms.end());
  if (lms != std::vector<std::string>{"s1*s2^8", "s1^2*s2^7", "s1^5*s2^6"}) return fail("unexpected leading monomials");
  return pass();
}

CaseResult determinantal(const DmodOptions& opt) {
  std::vector<std::string> names;
  for (int k = 1; k <= 12; ++k) names.push_back("x" + std::to_string(k));
  auto r = ring(names);
  // maximal minors of the generic 3x4 matrix with rows x1..x4, x5..x8, x9..x12
  auto minor = [&](int skip) {
    std::vector<int> cols;
    for (int c = 1; c <= 4; ++c)
      if (c != skip) cols.push_back(c);
    auto e = [&](int row, int col) { return "x" + std::to_string(4 * row + col); };
    std::string det;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
      det += p < 3 ? "+" : "-";
      det += e(0, cols[perms[p][0]]) + "*" + e(1, cols[perms[p][1]]) + "*" + e(2, cols[perms[p][2]]);
    }
    return "(" + det + ")";
  };
  Poly f = P(r, minor(1) + "*" + minor(2) + "*" + minor(3) + "*" + minor(4));
  auto ann = sannfs_log(f, opt);
  for (int a = 11; a >= 2; --a)
    if (check_root(ann, Rational(a), opt)) return fail(std::to_string(-a) + " is a root");
  if (!check_root(ann, Rational(1), opt)) return fail("-1 is not a root");
  return pass();
}

}  // namespace

const std::vector<CorpusCase>& corpus() {
  static const std::vector<CorpusCase> cases{
      {"annihilator of x^3+y^2+x*y^2", 1, false, reiffen_annihilator},
      {"b-function and annihilator of 2*x*y", 2, false, normal_crossing},
      {"b-function of x*y*z*(z-y)*(y+z)", 3, false, hyperplanes},
      {"annihilator of the polynomial 2*x*y", 4, false, annpoly_xy},
      {"annihilator of 2*x*y/(x^2-y^3)", 5, false, annrat},
      {"Bernstein operators of x^2-x", 6, false, zeta_operator},
      {"logarithmic annihilator of x^4+y^5+x*y^4", 7, false, log_annihilator},
      {"order two annihilator of x^4+y^5+x*y^4", 7, false, order_two_annihilator},
      {"variety b-function with one polynomial", 9, false, variety_r1},
      {"integer window needing the syzygy branch", 11, false, unsupported_window},
      {"command line examples", 0, false, cli_examples},
      {"Bernstein-Sato ideal of (x, y)", 0, false, bernstein_sato_ideal},
      {"global b-function of (x^3-y^2)*(3*x-2*y-1)*(x+2*y)", 8, true, curve_arrangement},
      {"tangent bundle of x^2+y^3", 9, true, tangent_bundle},
      {"Bernstein-Sato ideal of (z, x^5+y^5+x^2*y^3*z)", 0, true, bmi_example},
      {"minimal integer root of the 3x4 maximal minors product", 0, true, determinantal},
  };
  return cases;
}

}  // namespace dmod::cli
