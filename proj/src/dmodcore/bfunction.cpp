#include <algorithm>

#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

void check_deadline(const GBOptions& opt) {
  if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) throw CapExceeded("time budget exceeded");
}

int parameter_index(const SParamAnnihilator& ann) {
  int s = ann.algebra->index_of("s");
  if (s < 0 || ann.f.size() != 1) throw InvalidArgument("expected an annihilator of a single f^s in D_n[s]");
  return s;
}

}  // namespace

GBasis initial_ideal(const std::vector<Poly>& gens, const std::vector<std::int64_t>& w, const std::vector<int>& u,
                     const std::vector<int>& v, const DmodOptions& opt) {
  if (gens.empty()) throw InvalidArgument("initial_ideal needs generators");
  const AlgebraPtr& base = gens.front().algebra();
  AlgebraPtr homog = weyl_homog(base, u, v);
  AlgebraPtr ordered = homog->with_order(homogenized_vw_order(*homog, w));
  std::vector<Poly> hs;
  for (const auto& g : gens) hs.push_back(homogenize_weighted(g.reorder(base), homog));
  GBasis G = buchberger(hs, ordered, opt.gb);
  std::vector<Poly> ini;
  for (const auto& g : G) ini.push_back(dehomogenize(initial_form(g, w), base));
  return buchberger(ini, base, opt.gb);
}

UniPoly principal_intersect(const GBasis& J, const Poly& sigma_in, const DmodOptions& opt) {
  const AlgebraPtr& alg = J.algebra();
  Poly sigma = sigma_in.reorder(alg);
  if (sigma.is_zero() || sigma.is_constant()) throw InvalidArgument("principal_intersect needs a non-constant element");
  if (J.is_unit()) return UniPoly::constant(1);
  const std::uint64_t lead_support = sigma.lm().support();
  bool divisible = false;
  for (const auto& g : J)
    if (g.lcomp() == 0 && (g.lm().support() & ~lead_support) == 0) divisible = true;
  if (!divisible)
    throw ComputationError("intersection with K[sigma] is zero: no leading monomial divides a power of lm(sigma)");

  LinearReducer lr(alg);
  lr.add(normal_form(Poly::constant(alg, 1), J));
  const Poly r1 = normal_form(sigma, J);
  const bool sigma_reduced = r1 == sigma;
  const bool commutative = alg->is_commutative();
  Poly r = r1;
  Poly power = sigma;  // sigma^i, kept only when sigma is reducible
  for (int i = 1; i <= opt.intersect_cap; ++i) {
    check_deadline(opt.gb);
    if (auto dep = lr.add(r)) {
      std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
      c[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = -(*dep)[static_cast<std::size_t>(j)];
      return UniPoly(std::move(c));
    }
    // r_{i+1} = NF([sigma^i - r_i, r_1] + r_i r_1)
    Poly next(alg);
    if (commutative) {
      next = star_mul(r, r1);
    } else if (sigma_reduced) {
      next = star_mul(r, r1) - lie_bracket(r, r1);
    } else {
      next = lie_bracket(power - r, r1) + star_mul(r, r1);
      power = star_mul(power, sigma);
    }
    r = normal_form(next, J);
  }
  throw CapExceeded("principal intersection cap exceeded: intersection possibly zero");
}

BFunction bfct(const Poly& f, std::vector<int> u, const DmodOptions& opt) {
  const GAlgebra& ring = *f.algebra();
  check_input_ring(ring);
  const int n = ring.nvars();
  if (u.empty()) u.assign(static_cast<std::size_t>(n), 1);
  if (static_cast<int>(u.size()) != n) throw InvalidArgument("weight vector u needs one entry per variable");
  for (int x : u)
    if (x <= 0) throw InvalidArgument("weights u must be positive");
  auto I = malgrange_ideal({f});
  const AlgebraPtr& base = I.front().algebra();
  const auto d = static_cast<int>(weighted_degree(f, u));
  std::vector<int> uh{d}, vh{1};
  for (int x : u) {
    uh.push_back(x);
    vh.push_back(std::max(1, d - x + 1));
  }
  std::vector<std::int64_t> w(static_cast<std::size_t>(n + 1), 0);
  w[0] = 1;
  GBasis G = initial_ideal(I, w, uh, vh, opt);
  Monomial tdt = Monomial::variable(0) * Monomial::variable(n + 1);
  UniPoly b = principal_intersect(G, Poly::monomial(base, tdt), opt);
  return unipoly_rational_roots(unipoly_bs_transform(b));
}

BFunction bfct_ann(const SParamAnnihilator& ann, const DmodOptions& opt) {
  const int s = parameter_index(ann);
  std::vector<Poly> gens = ann.gens.gens();
  gens.push_back(transfer(ann.f.front(), ann.algebra));
  GBasis J = buchberger(gens, ann.algebra, opt.gb);
  return unipoly_rational_roots(principal_intersect(J, Poly::variable(ann.algebra, s), opt));
}

BFunction bfct_ann(const Poly& f, const DmodOptions& opt) { return bfct_ann(sannfs_bm({f}, opt), opt); }

BFunction bfct_ideal(const std::vector<Poly>& gens, const std::vector<std::int64_t>& w, const DmodOptions& opt) {
  if (gens.empty()) throw InvalidArgument("bfct_ideal needs generators");
  const AlgebraPtr& alg = gens.front().algebra();
  const auto& pairs = alg->roles().weyl_pairs;
  if (w.size() != pairs.size()) throw InvalidArgument("weight vector needs one entry per Weyl pair");
  std::vector<int> ones(pairs.size(), 1);
  GBasis G = initial_ideal(gens, w, ones, ones, opt);
  Poly sigma(alg);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (w[k] != 0)
      sigma += Poly::monomial(alg, Monomial::variable(pairs[k].first) * Monomial::variable(pairs[k].second),
                              Rational(static_cast<long>(w[k])));
  return unipoly_rational_roots(principal_intersect(G, sigma, opt));
}

bool check_root(const SParamAnnihilator& ann, const Rational& alpha, const DmodOptions& opt) {
  const int s = parameter_index(ann);
  // i = 0: s + alpha lies in J_0, so s is eliminated by substitution.
  AlgebraPtr dn = weyl(ann.f.front().algebra()->names());
  std::vector<Poly> gens;
  for (const auto& g : ann.gens) gens.push_back(specialize(g, {{s, -alpha}}, dn));
  gens.push_back(transfer(ann.f.front(), dn));
  return !buchberger(gens, dn, opt.gb).is_unit();
}

int root_multiplicity(const SParamAnnihilator& ann, const Rational& alpha, const DmodOptions& opt) {
  const int s = parameter_index(ann);
  if (!check_root(ann, alpha, opt)) return 0;
  const int n = ann.f.front().algebra()->nvars();
  const AlgebraPtr& alg = ann.algebra;
  Poly lin = Poly::variable(alg, s) + Poly::constant(alg, alpha);
  for (int i = 1; i <= n; ++i) {
    std::vector<Poly> gens = ann.gens.gens();
    gens.push_back(transfer(ann.f.front(), alg));
    gens.push_back(pow(lin, static_cast<unsigned>(i + 1)));
    GBasis J = buchberger(gens, alg, opt.gb);
    if (reduces_to_zero(pow(lin, static_cast<unsigned>(i)), J)) return i;
  }
  throw ComputationError("root multiplicity exceeds the number of variables");
}

int min_integer_root(const SParamAnnihilator& ann, const DmodOptions& opt) {
  const int n = ann.f.front().algebra()->nvars();
  for (int a = n - 1; a >= 2; --a)
    if (check_root(ann, Rational(a), opt)) return -a;
  return -1;
}

}  // namespace dmod
