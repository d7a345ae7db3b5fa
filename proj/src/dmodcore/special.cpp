#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

std::vector<Poly> derivations(const AlgebraPtr& dn, int n) {
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) out.push_back(Poly::variable(dn, n + i));
  return out;
}

GBasis substituted(const Poly& f, const Rational& alpha, const DmodOptions& opt) {
  SParamAnnihilator ann = sannfs_bm({f}, opt);
  AlgebraPtr dn = weyl(f.algebra()->names());
  const int s = ann.algebra->index_of("s");
  std::vector<Poly> gens;
  for (const auto& g : ann.gens) gens.push_back(specialize(g, {{s, alpha}}, dn));
  return buchberger(gens, dn, opt.gb);
}

}  // namespace

GBasis ann_poly(const Poly& g, const DmodOptions& opt) {
  check_input_ring(*g.algebra());
  const int n = g.algebra()->nvars();
  AlgebraPtr dn = weyl(g.algebra()->names());
  if (g.is_zero()) return GBasis(dn, {Poly::constant(dn, 1)}, true);
  return modulo_kernel({transfer(g, dn)}, derivations(dn, n), opt.gb);
}

GBasis ann_falpha(const Poly& f, const Rational& alpha, const DmodOptions& opt) {
  check_input_ring(*f.algebra());
  if (f.is_constant()) throw InvalidArgument("ann_falpha needs a non-constant polynomial");
  const int n = f.algebra()->nvars();
  AlgebraPtr dn = weyl(f.algebra()->names());
  if (alpha == 0) return buchberger(derivations(dn, n), dn, opt.gb);
  if (is_integer(alpha) && alpha > 0) return ann_poly(pow(f, static_cast<unsigned>(alpha.get_num().get_ui())), opt);
  if (is_integer(alpha) && alpha >= -(n - 1)) {
    SParamAnnihilator ann = sannfs_bm({f}, opt);
    const int mu = min_integer_root(ann, opt);
    if (alpha > mu) throw UnsupportedBranch("requires SST Alg. 5.3.15 syzygy branch");
  }
  return substituted(f, alpha, opt);
}

GBasis ann_rat(const Poly& g, const Poly& f, const DmodOptions& opt) {
  check_input_ring(*g.algebra());
  if (f.is_zero()) throw InvalidArgument("ann_rat needs a non-zero denominator");
  if (f.is_constant()) return ann_poly(g, opt);
  AlgebraPtr dn = weyl(g.algebra()->names());
  if (g.is_zero()) return GBasis(dn, {Poly::constant(dn, 1)}, true);
  GBasis inverse;
  try {
    inverse = ann_falpha(f, Rational(-1), opt);
  } catch (const UnsupportedBranch&) {
    throw UnsupportedBranch("denominator has integer root < -1: requires SST Alg. 5.3.15 syzygy branch");
  }
  return modulo_kernel({transfer(g, dn)}, inverse.gens(), opt.gb);
}

}  // namespace dmod
