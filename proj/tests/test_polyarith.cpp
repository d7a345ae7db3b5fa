#include <random>

#include "doctest.h"
#include "dmod/errors.hpp"
#include "dmod/monorder.hpp"
#include "dmod/unipoly.hpp"

using namespace dmod;

namespace {

UniPoly up(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("-3/4") == q(-3, 4));
  CHECK(parse_rational("0/7") == 0);
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("degrevlex and weight orderings") {
  auto dp = MonOrder::degrevlex(2);
  std::vector<int> xy{1, 1}, x2{2, 0};
  CHECK(cmp_monomials(xy, x2, dp) == Ordering::Less);
  auto w = MonOrder::weight_first({-1, 1}, MonOrder::degrevlex(2));
  std::vector<int> t{1, 0}, dt{0, 1};
  CHECK(cmp_monomials(t, dt, w) == Ordering::Less);
  CHECK_FALSE(w.is_global());
  CHECK(dp.is_global());
  std::vector<int> bad{1, 2, 3};
  CHECK_THROWS_AS(cmp_monomials(bad, x2, dp), InvalidArgument);
}

TEST_CASE("lex and block orderings") {
  auto lp = MonOrder::lex(3);
  std::vector<int> a{1, 0, 0}, b{0, 5, 5};
  CHECK(cmp_monomials(a, b, lp) == Ordering::Greater);
  auto blk = MonOrder::block(3, {{{0}, MonOrder::degrevlex(1)}, {{1, 2}, MonOrder::degrevlex(2)}});
  CHECK(cmp_monomials(a, b, blk) == Ordering::Greater);
  std::vector<int> c{0, 2, 0}, d{0, 1, 1};
  CHECK(cmp_monomials(c, d, blk) == Ordering::Greater);
  auto el = MonOrder::elimination(3, std::vector<int>{2});
  std::vector<int> z{0, 0, 1}, big{4, 4, 0};
  CHECK(cmp_monomials(z, big, el) == Ordering::Greater);
}

TEST_CASE("module orderings") {
  auto pot = MonOrder::degrevlex(2).with_priority({1});
  Monomial one, x2 = Monomial::variable(0, 2);
  CHECK(pot.compare(one, 1, x2, 0) > 0);
  CHECK(pot.compare(x2, 0, one, 2) > 0);  // unlisted components compare term-first
  CHECK(pot.compare(one, 0, one, 2) > 0);
  auto top = MonOrder::degrevlex(2);
  CHECK(top.compare(x2, 1, one, 0) > 0);
}

TEST_CASE("orderings are total well-orders on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  std::vector<MonOrder> orders{MonOrder::degrevlex(4), MonOrder::lex(4),
                               MonOrder::weight_first({3, 1, 2, 1}, MonOrder::lex(4)),
                               MonOrder::elimination(4, std::vector<int>{1, 3}),
                               MonOrder::block(4, {{{2, 3}, MonOrder::lex(2)}, {{0, 1}, MonOrder::degrevlex(2)}})};
  for (const auto& ord : orders) {
    CHECK(ord.is_global());
    for (int it = 0; it < 300; ++it) {
      Monomial m[3];
      for (auto& x : m)
        for (int v = 0; v < 4; ++v) x.set(v, e(rng));
      int ab = ord.compare(m[0], m[1]), ba = ord.compare(m[1], m[0]);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (m[0] == m[1]));
      if (ab < 0 && ord.compare(m[1], m[2]) < 0) CHECK(ord.compare(m[0], m[2]) < 0);
      // multiplicative
      CHECK(ord.compare(m[0] * m[2], m[1] * m[2]) == ab);
    }
  }
}

TEST_CASE("rational roots") {
  auto b = unipoly_rational_roots(up({1, 2, 1}));
  CHECK(b.roots.size() == 1);
  CHECK(b.roots.at(q(-1)) == 2);
  CHECK(b.remainder == up({1}));

  b = unipoly_rational_roots(up({1, 1}) * up({3, 2}));
  CHECK(b.roots.at(q(-1)) == 1);
  CHECK(b.roots.at(q(-3, 2)) == 1);
  CHECK(b.poly.leading() == 1);

  b = unipoly_rational_roots(up({1, 0, 1}));
  CHECK(b.roots.empty());
  CHECK(b.remainder == up({1, 0, 1}));
  CHECK_THROWS_AS(unipoly_rational_roots(UniPoly()), InvalidArgument);
}

TEST_CASE("rational roots with large coefficients reconstruct exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30), mult(1, 3);
  for (int it = 0; it < 30; ++it) {
    UniPoly p = UniPoly::constant(q(num(rng) ? num(rng) : 1, 7));
    int k = 1 + it % 5;
    for (int j = 0; j < k; ++j) p = p * UniPoly::linear(q(num(rng), den(rng))).pow(static_cast<unsigned>(mult(rng)));
    if (it % 3 == 0) p = p * up({2, 0, 1});
    auto b = unipoly_rational_roots(p);
    CHECK(b.reconstruct() == p.monic());
    if (it % 3 == 0) CHECK(b.remainder == up({2, 0, 1}));
    else CHECK(b.remainder == up({1}));
  }
}

TEST_CASE("bs transform") {
  CHECK(unipoly_bs_transform(up({0, 0, 1})) == up({1, 2, 1}));
  CHECK(unipoly_bs_transform(up({0, 1})) == up({1, 1}));
  CHECK(unipoly_bs_transform(up({5, 1})) == up({-4, 1}));
  CHECK_THROWS_AS(unipoly_bs_transform(UniPoly()), InvalidArgument);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> v;
    for (int k = 0; k < 1 + it % 6; ++k) v.emplace_back(c(rng));
    v.emplace_back(1 + it % 4);
    UniPoly p(v);
    CHECK(unipoly_bs_transform(unipoly_bs_transform(p)) == p.monic());
  }
}

TEST_CASE("symbolic binomial") {
  CHECK(symbolic_binomial(0) == up({1}));
  CHECK(symbolic_binomial(1) == up({0, 1}));
  CHECK(symbolic_binomial(2) == UniPoly({0, q(-1, 2), q(1, 2)}));
  for (int k = 1; k <= 10; ++k) {
    auto shifted = [](const UniPoly& p) { return p.compose_linear(1, -1); };
    CHECK(symbolic_binomial(k) == shifted(symbolic_binomial(k)) + shifted(symbolic_binomial(k - 1)));
  }
  CHECK(symbolic_binomial(4).eval(6) == 15);
}

TEST_CASE("univariate arithmetic") {
  auto [qq, r] = (up({-1, 0, 1})).divmod(up({1, 1}));
  CHECK(qq == up({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(up({-1, 0, 1}), up({1, 2, 1})) == up({1, 1}));
  CHECK(up({1, 1}).pow(3) == up({1, 3, 3, 1}));
  CHECK(up({0, -3, 1}).to_string() == "s^2-3*s");
}
