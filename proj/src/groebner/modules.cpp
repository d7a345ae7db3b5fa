#include <algorithm>
#include <bit>
#include <unordered_map>

#include "dmod/errors.hpp"
#include "dmod/groebner.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

AlgebraPtr subalgebra(const AlgebraPtr& alg, const std::vector<int>& keep) {
  std::vector<int> pos(static_cast<std::size_t>(alg->nvars()), -1);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    int v = keep[k];
    if (v < 0 || v >= alg->nvars() || pos[static_cast<std::size_t>(v)] >= 0)
      throw InvalidArgument("invalid subalgebra variable list");
    if (k > 0 && v < keep[k - 1]) throw InvalidArgument("subalgebra variables must be increasing");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
    names.push_back(alg->name(v));
  }
  auto remap = [&](const Monomial& m) {
    Monomial r;
    for (int v = 0; v < alg->nvars(); ++v)
      if (m[v]) {
        if (pos[static_cast<std::size_t>(v)] < 0) return std::optional<Monomial>();
        r.set(pos[static_cast<std::size_t>(v)], m[v]);
      }
    return std::optional<Monomial>(r);
  };
  std::vector<Relation> rels;
  for (const auto& r : alg->relations()) {
    int i = pos[static_cast<std::size_t>(r.i)], j = pos[static_cast<std::size_t>(r.j)];
    if (i < 0 || j < 0) continue;
    Relation nr{i, j, {}};
    for (const auto& t : r.d) {
      auto m = remap(t.mono);
      if (!m)
        throw InvalidArgument("variables " + alg->name(r.i) + ", " + alg->name(r.j) +
                              " do not span a subalgebra with the kept variables");
      nr.d.push_back({*m, t.coef, 0});
    }
    rels.push_back(std::move(nr));
  }
  const auto& ro = alg->roles();
  VarRoles roles;
  auto at = [&](int v) { return v < 0 ? -1 : pos[static_cast<std::size_t>(v)]; };
  for (auto [x, d] : ro.weyl_pairs)
    if (at(x) >= 0 && at(d) >= 0) roles.weyl_pairs.push_back({at(x), at(d)});
  for (int v : ro.dt)
    if (at(v) >= 0) roles.dt.push_back(at(v));
  for (int v : ro.s)
    if (at(v) >= 0) roles.s.push_back(at(v));
  roles.h = at(ro.h);
  const int n = static_cast<int>(names.size());
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(n), std::move(roles), "sub");
}

GBasis eliminate(const std::vector<Poly>& gens, const std::vector<int>& drop, const GBOptions& opt,
                 AlgebraPtr target) {
  if (gens.empty()) throw InvalidArgument("eliminate needs generators");
  const AlgebraPtr& alg = gens.front().algebra();
  std::uint64_t dropmask = 0;
  for (int v : drop) dropmask |= std::uint64_t{1} << v;
  std::vector<int> keep;
  for (int v = 0; v < alg->nvars(); ++v)
    if (!(dropmask >> v & 1u)) keep.push_back(v);
  AlgebraPtr sub = subalgebra(alg, keep);
  if (!target) target = sub;
  AlgebraPtr elim = alg->with_order(MonOrder::elimination(alg->nvars(), drop));
  GBasis G = buchberger(gens, elim, opt);
  std::vector<Poly> inter;
  for (const auto& g : G)
    if ((g.support() & dropmask) == 0) inter.push_back(transfer(g, target));
  if (inter.empty()) return GBasis(target, {}, true);
  return buchberger(inter, target, opt);
}

GBasis modulo_kernel(const std::vector<Poly>& F, const std::vector<Poly>& G, const GBOptions& opt) {
  if (F.empty()) throw InvalidArgument("modulo_kernel needs at least one image");
  const AlgebraPtr& alg = F.front().algebra();
  const int k = static_cast<int>(F.size());
  std::vector<Poly> vecs;
  for (int j = 0; j < k; ++j) {
    const Poly& f = F[static_cast<std::size_t>(j)];
    if (f.max_component() > 0) throw InvalidArgument("modulo_kernel images must be ring elements");
    vecs.push_back(f.reorder(alg) + Poly::constant(alg, 1, j + 1));
  }
  for (const auto& g : G)
    if (!g.is_zero()) vecs.push_back(g.reorder(alg));
  AlgebraPtr malg = alg->with_order(alg->order().with_priority({0}));
  GBasis gb = buchberger(vecs, malg, opt);
  std::vector<Poly> kernel;
  for (const auto& g : gb)
    if (g.lcomp() != 0) kernel.push_back(g.reorder(alg).shift_components(-1));
  if (kernel.empty()) return GBasis(alg, {}, true, k);
  return reduce_gb(GBasis(alg, std::move(kernel), false, k));
}

GBasis syzygies(const std::vector<Poly>& F, const GBOptions& opt) { return modulo_kernel(F, {}, opt); }

std::vector<Poly> lift(const std::vector<Poly>& F, const Poly& target, const GBOptions& opt) {
  if (F.empty()) throw InvalidArgument("lift needs generators");
  const AlgebraPtr& alg = F.front().algebra();
  const int k = static_cast<int>(F.size());
  std::vector<Poly> vecs;
  for (int j = 0; j < k; ++j) vecs.push_back(F[static_cast<std::size_t>(j)].reorder(alg) + Poly::constant(alg, 1, j + 1));
  AlgebraPtr malg = alg->with_order(alg->order().with_priority({0}));
  GBOptions o = opt;
  o.keep_lead_components = {0};
  GBasis gb = buchberger(vecs, malg, o);
  Poly r = normal_form(target.reorder(malg), gb);
  if (!r.component(0).is_zero()) throw ComputationError("lift target is not in the ideal");
  std::vector<Poly> a;
  for (int j = 0; j < k; ++j) a.push_back(-r.component(j + 1).reorder(alg));
  Poly check(alg);
  for (int j = 0; j < k; ++j) check += star_mul(a[static_cast<std::size_t>(j)], F[static_cast<std::size_t>(j)].reorder(alg));
  if (check != target.reorder(alg)) throw ComputationError("lift verification failed");
  return a;
}

namespace {

int krull_dim(std::uint64_t allowed, const std::vector<std::uint64_t>& leads,
              std::unordered_map<std::uint64_t, int>& memo) {
  auto it = memo.find(allowed);
  if (it != memo.end()) return it->second;
  const std::uint64_t* pick = nullptr;
  for (const auto& m : leads)
    if ((m & ~allowed) == 0 && (!pick || std::popcount(m) < std::popcount(*pick))) pick = &m;
  int best;
  if (!pick) {
    best = std::popcount(allowed);
  } else {
    best = -1;
    std::uint64_t m = *pick;
    while (m) {
      std::uint64_t bit = m & (~m + 1);
      best = std::max(best, krull_dim(allowed & ~bit, leads, memo));
      m &= m - 1;
    }
  }
  memo.emplace(allowed, best);
  return best;
}

}  // namespace

int lt_dimension(const GBasis& G) {
  const int n = G.algebra()->nvars();
  std::vector<std::uint64_t> leads;
  for (const auto& g : G)
    if (!g.is_zero()) leads.push_back(g.lm().support());
  for (const auto& m : leads)
    if (m == 0) return -1;  // unit ideal: empty quotient
  std::unordered_map<std::uint64_t, int> memo;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return krull_dim(all, leads, memo);
}

}  // namespace dmod
