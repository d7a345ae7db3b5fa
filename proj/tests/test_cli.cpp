#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dmod/cli.hpp"
#include "dmod/errors.hpp"
#include "dmod/parse.hpp"
#include "dmod/presets.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace dmod;
using namespace dmod::cli;

namespace {

struct Out {
  int status;
  std::string out, err;
};

Session session(std::vector<std::string> ring, std::vector<std::string> polys) {
  Session s;
  s.ring = std::move(ring);
  s.polys = std::move(polys);
  return s;
}

Out call(const std::string& command, const Session& s) {
  std::ostringstream out, err;
  int st = run_command(command, s, out, err);
  return {st, out.str(), err.str()};
}

Out argv(std::vector<std::string> args) {
  args.insert(args.begin(), "dmod");
  std::vector<const char*> ptrs;
  for (const auto& a : args) ptrs.push_back(a.c_str());
  std::ostringstream out, err;
  int st = run(static_cast<int>(ptrs.size()), ptrs.data(), out, err);
  return {st, out.str(), err.str()};
}

std::vector<std::string> lines_after(const std::string& text, const std::string& header) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  bool on = false;
  while (std::getline(in, line)) {
    if (on) out.push_back(line);
    if (line.rfind(header, 0) == 0) on = true;
  }
  return out;
}

}  // namespace

TEST_CASE("ring specifications") {
  CHECK(parse_ring_spec("x,y") == std::vector<std::string>{"x", "y"});
  CHECK(parse_ring_spec(" x0 , x1 y0") == std::vector<std::string>{"x0", "x1", "y0"});
  CHECK_THROWS_AS(parse_ring_spec("x,x"), InvalidArgument);
  CHECK_THROWS_AS(parse_ring_spec("1x"), InvalidArgument);
  CHECK_THROWS_AS(parse_ring_spec(""), InvalidArgument);
  // reserved names are refused by the f^s commands
  for (const char* name : {"s", "t1", "Dt", "Dx", "h", "s12"}) {
    CAPTURE(name);
    CHECK(call("bfct", session({"x", name}, {"x"})).status == kUsage);
  }
}

TEST_CASE("polynomial input") {
  auto r = commutative(std::vector<std::string>{"x", "y"});
  Poly f = parse_element("x^3 + y^2 + x*y^2", r);
  CHECK(f == parse_element("x^3+x*y^2+y^2", r));
  Poly g = parse_element("-3/4*x*y + 1", r);
  CHECK(g.size() == 2);
  auto bad = call("bfct", session({"x"}, {"x^(2)"}));
  CHECK(bad.status == kUsage);
  CHECK(bad.err.find("parse-error") != std::string::npos);
  CHECK(call("bfct", session({"x"}, {"y"})).status == kUsage);
  CHECK(call("bfct", session({"x"}, {"1/0*x"})).status == kUsage);
}

TEST_CASE("b-function output") {
  CHECK(call("bfct", session({"x", "y"}, {"2*x*y"})).out == "roots: (-1, 2)\n");
  CHECK(call("bfct-ann", session({"x", "y"}, {"2*x*y"})).out == "roots: (-1, 2)\n");
  CHECK(call("bfct", session({"x", "y", "z"}, {"x*y*z*(z-y)*(y+z)"})).out ==
        "roots: (-3/2, 1) (-5/4, 1) (-1, 3) (-3/4, 1) (-1/2, 1)\n");
  auto s = session({"x", "y"}, {"x^3-y^2"});
  s.weights = {2, 3};
  CHECK(call("bfct", s).out == "roots: (-7/6, 1) (-1, 1) (-5/6, 1)\n");
}

TEST_CASE("ann-falpha output annihilates x^(-1/2)") {
  auto s = session({"x"}, {"x"});
  s.alpha = "-1/2";
  auto r = call("ann-falpha", s);
  REQUIRE(r.status == kOk);
  auto gens = lines_after(r.out, "generators");
  REQUIRE(gens.size() == 1);
  auto w = weyl(std::vector<std::string>{"x"});
  Poly g = parse_element(gens[0], w);
  CHECK(g == parse_element("x*Dx+1/2", w));
  CHECK(apply_to_falpha(g, parse_element("x", commutative(std::vector<std::string>{"x"})), make_rational(-1, 2))
            .is_zero());
}

TEST_CASE("check-root takes roots of b_f(s)") {
  auto s = session({"x", "y"}, {"2*x*y"});
  s.alpha = "-1";
  CHECK(call("check-root", s).out == "root: -1\nmultiplicity: 2\nroots: (-1, 2)\n");
  s.alpha = "1";
  CHECK(call("check-root", s).out == "root: 1\nmultiplicity: 0\n");
  s.alpha = "x";
  CHECK(call("check-root", s).status == kUsage);
  s.alpha.reset();
  CHECK(call("check-root", s).status == kUsage);
}

TEST_CASE("other commands") {
  CHECK(call("min-int-root", session({"x", "y"}, {"x^2-y^3"})).out == "min-int-root: -1\nroots: (-1, 1)\n");
  CHECK(call("operator", session({"x"}, {"x^2-x"})).out ==
        "algebra: x,Dx,s\nb: s+1\noperator: 2*x*Dx-Dx-4*s-4\nroots: (-1, 1)\n");
  for (const char* m : {"search", "lift"}) {
    auto s = session({"x"}, {"x^2-x"});
    s.method = m;
    CHECK(call("operator", s).out == "algebra: x,Dx,s\nb: s+1\noperator: 2*x*Dx-Dx-4*s-4\nroots: (-1, 1)\n");
  }
  CHECK(call("bs-ideal", session({"x", "y"}, {"x", "y"})).out ==
        "algebra: s1,s2\ngenerators (1):\ns1*s2+s1+s2+1\n");
  CHECK(call("bfct-var", session({"x", "y"}, {"x", "y"})).out == "codim: 2\nvariety-roots: (-1, 1)\nroots: (-2, 1)\n");
  auto sol = call("solve0", session({"x", "y"}, {"x^2-1", "y-x"}));
  CHECK(sol.out == "x: x^2-1\ny: y^2-1\nsolution: (-1, -1)\nsolution: (1, 1)\n");
  auto pi = session({"x", "y"}, {"x^2-1", "y-x"});
  pi.sigma = "x+y";
  CHECK(call("principal-intersect", pi).out == "minimal polynomial: s^2-4\nroots: (-2, 1) (2, 1)\n");
  auto gk = session({"x", "y"}, {"Dx", "Dy"});
  gk.algebra = "weyl";
  CHECK(call("gkdim", gk).out == "gkdim: 2\n");
  auto bi = session({"t"}, {"t*Dt+3"});
  CHECK(call("bfct-ideal", bi).out == "roots: (-3, 1)\n");
  auto k2 = session({"x", "y"}, {"x^2-y^3"});
  k2.k = 2;
  CHECK(call("ann-k", k2).status == kOk);
  k2.k = 0;
  CHECK(call("ann-k", k2).status == kUsage);
  CHECK(call("annfs-var", session({"x", "y"}, {"x", "y"})).status == kOk);
  CHECK(call("annfs-log", session({"x", "y"}, {"2*x*y"})).status == kOk);
  CHECK(call("ann-poly", session({"x", "y"}, {"2*x*y"})).status == kOk);
  CHECK(call("ann-rat", session({"x", "y"}, {"2*x*y"})).status == kUsage);
  CHECK(call("nonsense", session({"x"}, {"x"})).status == kUsage);
}

TEST_CASE("orderings") {
  auto s = session({"x", "y"}, {"x^2-y", "x*y-1"});
  s.ord = "lp";
  CHECK(call("gb", s).out == "algebra: x,y\ngenerators (2):\ny^3-1\nx-y^2\n");
  s.ord = "elim:x";
  CHECK(call("gb", s).out == "algebra: x,y\ngenerators (2):\ny^3-1\nx-y^2\n");
  s.ord = "wp:1,3";
  CHECK(call("gb", s).status == kOk);
  s.ord = "wp:1";
  CHECK(call("gb", s).status == kUsage);
  s.ord = "elim:z";
  CHECK(call("gb", s).status == kUsage);
  s.ord = "ds";
  CHECK(call("gb", s).status == kUsage);
}

TEST_CASE("gb output reparses to the same basis") {
  std::mt19937 rng(77);
  auto k = commutative(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens;
    Session s;
    s.ring = k->names();
    for (int j = 0; j < 3; ++j) {
      gens.push_back(oracle::random_element(k, rng, 3, 2, 4));
      s.polys.push_back(to_string(gens.back()));
    }
    auto r = call("gb", s);
    REQUIRE(r.status == kOk);
    std::vector<Poly> back;
    for (const auto& line : lines_after(r.out, "generators")) back.push_back(parse_element(line, k));
    CHECK(back == buchberger(gens).gens());
  }
}

TEST_CASE("computation errors exit with status 2") {
  auto q = session({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2"});
  q.alpha = "-1";
  auto r = call("ann-falpha", q);
  CHECK(r.status == kComputation);
  CHECK(r.err.find("unsupported-branch") != std::string::npos);
  CHECK(r.err.find("requires SST Alg. 5.3.15") != std::string::npos);
  r = call("ann-rat", session({"x", "y", "z", "w"}, {"1", "x^2+y^2+z^2+w^2"}));
  CHECK(r.status == kComputation);
  CHECK(r.err.find("requires SST Alg. 5.3.15") != std::string::npos);
  auto capped = session({"x", "y"}, {"2*x*y"});
  capped.cap = 1;
  r = call("bfct-ann", capped);
  CHECK(r.status == kComputation);
  CHECK(r.err.find("cap-exceeded") != std::string::npos);
}

TEST_CASE("json encoding") {
  auto s = session({"x", "y"}, {"2*x*y"});
  s.json = true;
  auto j = nlohmann::json::parse(call("bfct", s).out);
  CHECK(j["command"] == "bfct");
  CHECK(j["ring"] == nlohmann::json::array({"x", "y"}));
  CHECK(j["generators"].empty());
  CHECK(j["roots"] == nlohmann::json::parse("[[-1, 1, 2]]"));
  j = nlohmann::json::parse(call("annfs", s).out);
  auto alg = weyl_s({"x", "y"}, 1);
  std::vector<Poly> gens;
  for (const auto& g : j["generators"]) gens.push_back(parse_element(g.get<std::string>(), alg));
  CHECK(ideal_equal(gens, {parse_element("x*Dx-s", alg), parse_element("y*Dy-s", alg)}));
  auto q = session({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2"});
  q.alpha = "-1";
  q.json = true;
  j = nlohmann::json::parse(call("ann-falpha", q).out);
  CHECK(j["error"]["reason"] == "unsupported-branch");
  CHECK(j["error"]["status"] == 2);
}

TEST_CASE("identical invocations give identical output") {
  auto s = session({"x", "y"}, {"x^3+y^2+x*y^2"});
  CHECK(call("annfs", s).out == call("annfs", s).out);
  s.json = true;
  CHECK(call("bfct", s).out == call("bfct", s).out);
}

TEST_CASE("argv front end and ideal files") {
  CHECK(argv({"bfct", "--ring", "x,y", "--poly", "2*x*y"}).out == "roots: (-1, 2)\n");
  CHECK(argv({"bfct", "--ring", "x,y", "--poly", "2*x*y", "--engine", "slim"}).out == "roots: (-1, 2)\n");
  CHECK(argv({"bfct", "--ring", "x", "--bogus"}).status == kUsage);
  CHECK(argv({"bfct", "--ring", "x", "--poly", "x", "--format", "xml"}).status == kUsage);
  CHECK(argv({}).status == kUsage);
  CHECK(argv({"bfct", "--help"}).status == kOk);
  CHECK(argv({"bfct", "--ring", "x,x", "--poly", "x"}).status == kUsage);

  const std::string path = "test_cli_ideal.txt";
  {
    std::ofstream f(path);
    f << "# two conics\nring: x, y\nx^2-1   # first\n\ny-x\n";
  }
  auto r = argv({"solve0", "--ideal", path});
  CHECK(r.out == "x: x^2-1\ny: y^2-1\nsolution: (-1, -1)\nsolution: (1, 1)\n");
  CHECK(argv({"solve0", "--ideal", path, "--ring", "x,z"}).status == kUsage);
  {
    std::ofstream f(path);
    f << "x^2-1\n";
  }
  CHECK(argv({"solve0", "--ideal", path}).status == kUsage);
  std::remove(path.c_str());
  CHECK(argv({"solve0", "--ideal", "does/not/exist"}).status == kUsage);
}

TEST_CASE("verify filter and report") {
  auto s = session({}, {});
  s.filter = "2*x*y";
  auto r = call("verify", s);
  CHECK(r.status == kOk);
  CHECK(r.out.find("PASS b-function and annihilator of 2*x*y") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  s.filter = "no such case";
  CHECK(call("verify", s).out == "verify: 0 passed, 0 failed, 0 skipped\n");
}
