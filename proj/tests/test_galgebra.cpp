#include <random>

#include "doctest.h"
#include "dmod/errors.hpp"
#include "dmod/parse.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"
#include "oracles.hpp"

using namespace dmod;

namespace {

Poly P(const AlgebraPtr& a, const char* s) { return parse_element(s, a); }

}  // namespace

TEST_CASE("Weyl relation and small products") {
  auto d1 = weyl(std::vector<std::string>{"x"});
  CHECK(P(d1, "Dx*x") == P(d1, "x*Dx+1"));
  CHECK(star_mul(P(d1, "Dx^2"), P(d1, "x^2")) == P(d1, "x^2*Dx^2+4*x*Dx+2"));
  CHECK(lie_bracket(P(d1, "Dx"), P(d1, "x")) == P(d1, "1"));
  CHECK(lie_bracket(P(d1, "x*Dx"), P(d1, "x")) == P(d1, "x"));
  CHECK(skew_bracket(P(d1, "Dx"), P(d1, "x"), 2) == P(d1, "-x*Dx+1"));
}

TEST_CASE("shift algebra relation") {
  auto s1 = weyl_shift({}, 1);
  CHECK(P(s1, "Dt*s") == P(s1, "s*Dt-Dt"));
}

TEST_CASE("gl2 bracket") {
  auto g = weyl_gl({}, 2);
  CHECK(lie_bracket(P(g, "s12"), P(g, "s21")) == P(g, "s11-s22"));
  CHECK(lie_bracket(P(g, "s11"), P(g, "s12")) == P(g, "s12"));
  auto e = weyl_dt_gl(default_names(4), 2);
  CHECK(lie_bracket(P(e, "s12"), P(e, "Dt2")) == P(e, "Dt1"));
  CHECK(lie_bracket(P(e, "s12"), P(e, "Dt1")).is_zero());
  CHECK(lie_bracket(P(e, "Dx1"), P(e, "Dt1")).is_zero());
}

TEST_CASE("make_galgebra checks admissibility and nondegeneracy") {
  TermList one{{Monomial(), Rational(1), 0}};
  CHECK_NOTHROW(make_galgebra({"x", "D"}, {{0, 1, one}}, MonOrder::degrevlex(2)));
  // Dt s = s Dt - Dt
  CHECK_NOTHROW(make_galgebra({"Dt", "s"}, {{0, 1, {{Monomial::variable(0), Rational(1), 0}}}},
                              MonOrder::degrevlex(2)));
  // relation whose tail is larger than x_i x_j
  CHECK_THROWS_AS(make_galgebra({"a", "b"}, {{0, 1, {{Monomial::variable(0, 3), Rational(1), 0}}}},
                                MonOrder::degrevlex(2)),
                  AdmissibilityError);
  // gl2 extension under a block ordering putting Dt1 > Dt2 > everything else
  auto e = weyl_dt_gl(default_names(4), 2);
  std::vector<std::pair<std::vector<int>, MonOrder>> blocks;
  const int n = e->nvars();
  int dt1 = e->index_of("Dt1"), dt2 = e->index_of("Dt2");
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != dt1 && v != dt2) rest.push_back(v);
  blocks.push_back({{dt1, dt2}, MonOrder::lex(2)});
  blocks.push_back({rest, MonOrder::degrevlex(static_cast<int>(rest.size()))});
  CHECK_THROWS_AS(e->with_order(MonOrder::block(n, blocks)), AdmissibilityError);
  CHECK_NOTHROW(e->with_order(MonOrder::elimination(n, std::vector<int>{dt1, dt2})));
  // [b,a] = c, [c,a] = a, [c,b] = 0 violates the Jacobi-like condition
  CHECK_THROWS_AS(make_galgebra({"a", "b", "c"},
                                {{0, 1, {{Monomial::variable(2), Rational(1), 0}}},
                                 {0, 2, {{Monomial::variable(0), Rational(1), 0}}}},
                                MonOrder::degrevlex(3)),
                  NondegeneracyError);
}

TEST_CASE("presets construct and are consistent") {
  auto w2 = weyl(2);
  CHECK(w2->names() == std::vector<std::string>{"x", "y", "Dx", "Dy"});
  CHECK(w2->commute(0, 3));
  CHECK_FALSE(w2->commute(0, 2));
  auto h = weyl_homog(1, {1}, {1});
  CHECK(P(h, "Dx*x") == P(h, "x*Dx+h^2"));
  CHECK_THROWS_AS(weyl_homog(1, {0}, {1}), InvalidArgument);
  auto h2 = weyl_homog(2, {2, 1}, {1, 3});
  CHECK(P(h2, "Dy*y") == P(h2, "y*Dy+h^4"));
  CHECK_NOTHROW(bm_extended(default_names(2), 1));
  CHECK_NOTHROW(bm_extended(default_names(1), 2));
  CHECK_NOTHROW(weyl_gl(default_names(2), 3));
  CHECK_NOTHROW(weyl_dt_gl(default_names(2), 3));
  auto E = bm_extended(default_names(1), 1);
  CHECK(lie_bracket(P(E, "t"), P(E, "s")) == P(E, "t"));
  CHECK(lie_bracket(P(E, "Dt"), P(E, "s")) == P(E, "-Dt"));
}

TEST_CASE("Weyl closed form oracle for a,b <= 6") {
  auto d1 = weyl(std::vector<std::string>{"x"});
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      Poly lhs = star_mul(Poly::monomial(d1, Monomial::variable(1, a)), Poly::monomial(d1, Monomial::variable(0, b)));
      CHECK(lhs == oracle::weyl_closed_form(d1, a, b));
    }
}

TEST_CASE("leading monomial of products and associativity on random triples") {
  std::vector<AlgebraPtr> algs{weyl(2),
                               weyl_s(default_names(2), 1),
                               weyl_shift(default_names(1), 2),
                               weyl_homog(2, {1, 2}, {2, 1}),
                               weyl_gl(default_names(1), 2),
                               weyl_dt_gl(default_names(1), 2),
                               commutative(3),
                               bm_extended(default_names(1), 1)};
  std::mt19937 rng(1234);
  for (const auto& alg : algs) {
    CAPTURE(alg->kind());
    for (int it = 0; it < 100; ++it) {
      Poly a = oracle::random_element(alg, rng, 3, 3);
      Poly b = oracle::random_element(alg, rng, 3, 3);
      Poly c = oracle::random_element(alg, rng, 2, 2);
      Poly ab = star_mul(a, b);
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(ab.lm() == a.lm() * b.lm());
        CHECK(ab.lc() == a.lc() * b.lc());
      }
      CHECK(star_mul(ab, c) == star_mul(a, star_mul(b, c)));
    }
  }
}

TEST_CASE("homogenization round trip") {
  auto d = weyl(1);
  auto h = weyl_homog(d, {1}, {1});
  CHECK(homogenize_weighted(P(d, "x*Dx+1"), h) == P(h, "x*Dx+h^2"));
  CHECK(homogenize_weighted(P(d, "x*Dx"), h) == P(h, "x*Dx"));
  auto m = weyl_malgrange(1, {"x", "y"});
  auto hm = weyl_homog(m, {2, 1, 1}, {1, 2, 2});
  CHECK(homogenize_weighted(P(m, "t-x*y"), hm) == P(hm, "t-x*y"));
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    Poly p = oracle::random_element(m, rng, 4, 3);
    Poly hp = homogenize_weighted(p, hm);
    CHECK(dehomogenize(hp, m) == p);
  }
}

TEST_CASE("homogenized ordering example") {
  auto h = weyl_homog(1, {1}, {1});
  MonOrder ord = homogenized_vw_order(*h, {1});
  Monomial h2 = Monomial::variable(2, 2), xd = Monomial::variable(0) * Monomial::variable(1);
  CHECK(ord.compare(xd, h2) > 0);
  CHECK(ord.is_global());
  CHECK_NOTHROW(h->with_order(ord));
}

TEST_CASE("initial forms") {
  auto m = weyl_malgrange(1, {"x"});
  CHECK(initial_form(P(m, "t-x"), {1, 0}) == P(m, "-x"));
  CHECK(initial_form(P(m, "Dt+x*Dt^2"), {1, 0}) == P(m, "x*Dt^2"));
  CHECK(initial_form(P(m, "t*Dt+3"), {1, 0}) == P(m, "t*Dt+3"));
  CHECK(initial_form(Poly(m), {1, 0}).is_zero());
  CHECK_THROWS_AS(initial_form(P(m, "t"), {0, 0}), InvalidArgument);
}

TEST_CASE("initial form is multiplicative on homogeneous elements; Euler identity") {
  auto m = weyl(2);
  std::vector<std::int64_t> w{1, 2};
  std::mt19937 rng(99);
  Poly euler = P(m, "x*Dx+2*y*Dy");
  for (int it = 0; it < 40; ++it) {
    Poly p = initial_form(oracle::random_element(m, rng, 4, 3), w);
    Poly q = initial_form(oracle::random_element(m, rng, 4, 3), w);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(initial_form(star_mul(p, q), w) == star_mul(p, q));
    std::int64_t wt = vw_weight(*m, p.lm(), w);
    CHECK(star_mul(p, euler) == star_mul(euler + Poly::constant(m, Rational(wt)), p));
  }
}

TEST_CASE("algebra maps") {
  auto a = weyl_s(default_names(1), 1);
  auto shift = AlgebraMap::by_names(a, a, {{"s", P(a, "s+1")}});
  CHECK(shift.is_homomorphism());
  CHECK(apply_map(shift, P(a, "x*Dx-s")) == P(a, "x*Dx-s-1"));
  auto h = weyl_homog(1, {1}, {1});
  auto d = weyl(1);
  auto dehom = AlgebraMap::by_names(h, d, {{"h", P(d, "1")}});
  CHECK(dehom.is_homomorphism());
  CHECK(apply_map(dehom, P(h, "x*Dx+h^2")) == P(d, "x*Dx+1"));
  auto bad = AlgebraMap::by_names(d, d, {{"x", P(d, "Dx")}});
  CHECK_FALSE(bad.is_homomorphism());
  auto m = weyl_malgrange(1, {});
  auto cs = commutative(std::vector<std::string>{"s"});
  Poly tdt = P(m, "t*Dt");
  CHECK(substitute_euler(star_mul(tdt, tdt), 0, 1, cs, 0) == P(cs, "s^2+2*s+1"));
}

TEST_CASE("parser") {
  auto c = commutative(2);
  Poly p = P(c, "-3/4*x*y + 1");
  CHECK(p.size() == 2);
  CHECK(p.lc() == make_rational(-3, 4));
  CHECK_THROWS_AS(P(c, "x^(2)"), ParseError);
  CHECK_THROWS_AS(P(c, "z"), ParseError);
  CHECK_THROWS_AS(P(c, "1/0"), ParseError);
  CHECK(P(c, "(x+y)^2") == P(c, "x^2+2*x*y+y^2"));
  CHECK(to_string(P(c, "x^3 + y^2 + x*y^2")) == "x^3+x*y^2+y^2");
  std::mt19937 rng(8);
  auto w = weyl(2);
  for (int it = 0; it < 50; ++it) {
    Poly r = oracle::random_element(w, rng, 5, 3);
    CHECK(P(w, to_string(r).c_str()) == r);
  }
}
