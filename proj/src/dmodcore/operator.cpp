#include <algorithm>
#include <functional>

#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

int parameter(const SParamAnnihilator& ann) {
  int s = ann.algebra->index_of("s");
  if (s < 0 || ann.f.size() != 1) throw InvalidArgument("expected an annihilator of a single f^s in D_n[s]");
  return s;
}

Poly b_of_s(const SParamAnnihilator& ann, const UniPoly& b) {
  return evaluate_at(b, Poly::variable(ann.algebra, parameter(ann)));
}

// Monomials of total degree d in nvars variables, ascending in the ordering.
std::vector<Monomial> monomials_of_degree(const GAlgebra& alg, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == alg.nvars() - 1) {
      m.set(var, left);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (alg.nvars() == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), [&alg](const Monomial& a, const Monomial& b) { return alg.order().less(a, b); });
  return out;
}

}  // namespace

bool is_bernstein_operator(const Poly& P, const SParamAnnihilator& ann, const UniPoly& b) {
  Poly f = transfer(ann.f.front(), ann.algebra);
  return reduces_to_zero(star_mul(P.reorder(ann.algebra), f) - b_of_s(ann, b), ann.gens);
}

GBasis ann_shifted(const SParamAnnihilator& ann, const DmodOptions& opt) {
  const int s = parameter(ann);
  std::vector<Poly> gens;
  for (const auto& g : ann.gens) gens.push_back(shift_parameter(g, s, Rational(1)));
  return buchberger(gens, ann.algebra, opt.gb);
}

Poly bernstein_operator_nf(const Poly& P, const SParamAnnihilator& ann, const DmodOptions& opt) {
  return normal_form(P.reorder(ann.algebra), ann_shifted(ann, opt));
}

Poly operator_modulo(const SParamAnnihilator& ann, const UniPoly& b, const DmodOptions& opt) {
  const AlgebraPtr& alg = ann.algebra;
  Poly f = transfer(ann.f.front(), alg);
  GBasis K = modulo_kernel({b_of_s(ann, b), f}, ann.gens.gens(), opt.gb);
  AlgebraPtr malg = alg->with_order(alg->order().with_priority({0}));
  GBasis G = buchberger(K.gens(), malg, opt.gb);
  for (const auto& g : G) {
    Poly head = g.component(0);
    if (g.lcomp() != 0 || !head.is_constant() || head.is_zero()) continue;
    Poly P = g.component(1).reorder(alg) * (Rational(-1) / head.lc());
    if (is_bernstein_operator(P, ann, b)) return P;
    if (is_bernstein_operator(-P, ann, b)) return -P;
  }
  throw ComputationError("b(s) does not admit an operator: the kernel has no element with constant first entry");
}

Poly operator_search(const SParamAnnihilator& ann, const UniPoly& b, const DmodOptions& opt) {
  const AlgebraPtr& alg = ann.algebra;
  Poly f = transfer(ann.f.front(), alg);
  GBasis shifted = ann_shifted(ann, opt);
  Poly target = normal_form(b_of_s(ann, b), ann.gens);
  LinearReducer lr(alg);
  std::vector<Monomial> used;
  for (int d = 0; d <= opt.search_cap; ++d) {
    for (const Monomial& m : monomials_of_degree(*alg, d)) {
      bool reducible = std::any_of(shifted.begin(), shifted.end(), [&m](const Poly& g) { return g.lm().divides(m); });
      if (reducible) continue;
      used.push_back(m);
      lr.add(normal_form(star_mul(Poly::monomial(alg, m), f), ann.gens));
    }
    LinReduceResult r = lr.reduce(target);
    if (!r.residue.is_zero()) continue;
    Poly P(alg);
    for (std::size_t i = 0; i < used.size(); ++i)
      if (r.coeffs[i] != 0) P += Poly::monomial(alg, used[i], r.coeffs[i]);
    if (!is_bernstein_operator(P, ann, b)) throw ComputationError("operator search produced an invalid operator");
    return P;
  }
  throw CapExceeded("operator search exceeded the degree cap");
}

Poly operator_lift(const SParamAnnihilator& ann, const UniPoly& b, bool canonical, const DmodOptions& opt) {
  const AlgebraPtr& alg = ann.algebra;
  std::vector<Poly> F{transfer(ann.f.front(), alg)};
  for (const auto& g : ann.gens) F.push_back(g);
  Poly P = lift(F, b_of_s(ann, b), opt.gb).front();
  return canonical ? bernstein_operator_nf(P, ann, opt) : P;
}

}  // namespace dmod
