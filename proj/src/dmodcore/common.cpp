#include <cctype>
#include <regex>

#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

void check_input_ring(const GAlgebra& ring) {
  if (!ring.is_commutative()) throw InvalidArgument("input polynomials must live in a commutative ring");
  static const std::regex reserved(R"((s|t|h)[0-9]*|s_.*|D.*)");
  for (const auto& name : ring.names())
    if (std::regex_match(name, reserved))
      throw InvalidArgument("variable name '" + name + "' is reserved for derived algebras");
}

Poly partial(const Poly& f, int var) {
  TermList out;
  for (const auto& t : f.terms()) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * e, t.comp});
  }
  return Poly::from_terms(f.algebra(), std::move(out));
}

std::int64_t weighted_degree(const Poly& f, const std::vector<int>& u) {
  std::int64_t best = 0;
  for (const auto& t : f.terms()) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < u.size(); ++k) d += std::int64_t{u[k]} * t.mono[static_cast<int>(k)];
    best = std::max(best, d);
  }
  return best;
}

Poly specialize(const Poly& p, const std::vector<std::pair<int, Rational>>& values, const AlgebraPtr& target) {
  const GAlgebra& alg = *p.algebra();
  for (const auto& [v, c] : values)
    if (!alg.is_central(v)) throw InvalidArgument("only central variables can be specialized");
  TermList out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    Rational c = t.coef;
    for (const auto& [v, value] : values) {
      for (int k = 0; k < m[v]; ++k) c *= value;
      m.set(v, 0);
    }
    out.push_back({m, c, t.comp});
  }
  return transfer(Poly::from_terms(p.algebra(), std::move(out)), target);
}

Poly shift_parameter(const Poly& p, int var, const Rational& c) {
  if (!p.algebra()->is_central(var)) throw InvalidArgument("only central variables can be shifted");
  TermList out;
  for (const auto& t : p.terms()) {
    const int e = t.mono[var];
    // (s + c)^e = sum_k C(e,k) c^(e-k) s^k
    Rational binom = 1;
    for (int k = 0; k <= e; ++k) {
      if (k > 0) binom = binom * (e - k + 1) / k;
      Rational coef = t.coef * binom;
      for (int j = 0; j < e - k; ++j) coef *= c;
      Monomial m = t.mono;
      m.set(var, k);
      out.push_back({m, coef, t.comp});
    }
  }
  return Poly::from_terms(p.algebra(), std::move(out));
}

Poly evaluate_at(const UniPoly& b, const Poly& sigma) {
  const AlgebraPtr& alg = sigma.algebra();
  Poly out(alg);
  // Horner scheme
  for (int k = b.degree(); k >= 0; --k) {
    out = star_mul(out, sigma);
    out += Poly::constant(alg, b.coeff(k));
  }
  return out;
}

}  // namespace dmod
