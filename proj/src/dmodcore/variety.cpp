#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

const AlgebraPtr& ring_of(const std::vector<Poly>& fs) {
  if (fs.empty()) throw InvalidArgument("expected at least one polynomial");
  const AlgebraPtr& ring = fs.front().algebra();
  check_input_ring(*ring);
  for (const auto& f : fs)
    if (f.algebra()->names() != ring->names()) throw AlgebraMismatch("polynomials live in different rings");
  return ring;
}

}  // namespace

GBasis bs_ideal(const std::vector<Poly>& fs, const DmodOptions& opt) {
  const AlgebraPtr& ring = ring_of(fs);
  const int n = ring->nvars();
  const int p = static_cast<int>(fs.size());
  SParamAnnihilator ann = sannfs_bm(fs, opt);
  std::vector<Poly> gens = ann.gens.gens();
  Poly prod = Poly::constant(ring, 1);
  for (const auto& f : fs) prod = prod * f;
  gens.push_back(transfer(prod, ann.algebra));
  std::vector<int> drop;
  for (int v = 0; v < 2 * n; ++v) drop.push_back(v);
  return eliminate(gens, drop, opt.gb, commutative(parameter_names("s", p)));
}

SParamAnnihilator sannfs_var(const std::vector<Poly>& fs, const DmodOptions& opt) {
  const AlgebraPtr& ring = ring_of(fs);
  const int n = ring->nvars();
  const int r = static_cast<int>(fs.size());
  AlgebraPtr E = weyl_dt_gl(ring->names(), r);
  const int dt0 = 2 * n, s0 = 2 * n + r;
  std::vector<Poly> gens;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gens.push_back(Poly::variable(E, s0 + i * r + j) +
                     star_mul(transfer(fs[static_cast<std::size_t>(j)], E), Poly::variable(E, dt0 + i)));
  for (int m = 0; m < n; ++m) {
    Poly g = Poly::variable(E, n + m);
    for (int k = 0; k < r; ++k)
      g += star_mul(transfer(partial(fs[static_cast<std::size_t>(k)], m), E), Poly::variable(E, dt0 + k));
    gens.push_back(g);
  }
  std::vector<int> drop;
  for (int k = 0; k < r; ++k) drop.push_back(dt0 + k);
  AlgebraPtr target = weyl_gl(ring->names(), r);
  return {target, eliminate(gens, drop, opt.gb, target), fs};
}

int variety_codim(const std::vector<Poly>& fs) {
  const AlgebraPtr& ring = ring_of(fs);
  int dim = lt_dimension(buchberger(fs, ring));
  if (dim < 0) throw InvalidArgument("the polynomials define the empty variety");
  return ring->nvars() - dim;
}

BFunction bfct_var(const SParamAnnihilator& ann, const DmodOptions& opt) {
  const AlgebraPtr& alg = ann.algebra;
  const int r = static_cast<int>(ann.f.size());
  std::vector<Poly> gens = ann.gens.gens();
  for (const auto& f : ann.f) gens.push_back(transfer(f, alg));
  GBasis J = buchberger(gens, alg, opt.gb);
  Poly sigma(alg);
  for (int i = 0; i < r; ++i) sigma += Poly::variable(alg, gl_name(i, i, r));
  return unipoly_rational_roots(principal_intersect(J, sigma, opt));
}

BFunction bfct_var(const std::vector<Poly>& fs, std::optional<int> codim, const DmodOptions& opt) {
  BFunction b = bfct_var(sannfs_var(fs, opt), opt);
  if (!codim) return b;
  return unipoly_rational_roots(b.poly.compose_linear(Rational(1), Rational(1 - *codim)));
}

}  // namespace dmod
