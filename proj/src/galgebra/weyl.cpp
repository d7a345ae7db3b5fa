#include "dmod/weyl.hpp"

#include <algorithm>
#include <unordered_map>

#include "dmod/errors.hpp"

namespace dmod {

std::int64_t vw_weight(const GAlgebra& alg, const Monomial& m, const std::vector<std::int64_t>& w) {
  const auto& pairs = alg.roles().weyl_pairs;
  if (w.size() != pairs.size()) throw InvalidArgument("weight vector needs one entry per Weyl pair");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) s += w[k] * (std::int64_t{m[pairs[k].second]} - m[pairs[k].first]);
  return s;
}

Poly homogenize_weighted(const Poly& p, const AlgebraPtr& homog) {
  const auto& roles = homog->roles();
  if (roles.h < 0) throw InvalidArgument("target is not a homogenized algebra");
  if (p.algebra()->nvars() != roles.h) throw AlgebraMismatch("homogenization target does not match");
  for (int v = 0; v < roles.h; ++v)
    if (p.algebra()->name(v) != homog->name(v)) throw AlgebraMismatch("homogenization target does not match");
  auto deg = [&](const Monomial& m) {
    std::int64_t d = 0;
    for (int v = 0; v < roles.h; ++v) d += std::int64_t{roles.hom_weights[static_cast<std::size_t>(v)]} * m[v];
    return d;
  };
  std::int64_t top = 0;
  for (const auto& t : p.terms()) top = std::max(top, deg(t.mono));
  TermList out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(roles.h, static_cast<int>(top - deg(t.mono)));
    out.push_back({m, t.coef, t.comp});
  }
  return Poly::from_terms(homog, std::move(out));
}

Poly dehomogenize(const Poly& p, const AlgebraPtr& base) {
  int h = p.algebra()->roles().h;
  if (h < 0) throw InvalidArgument("not a homogenized algebra");
  if (base->nvars() != h) throw AlgebraMismatch("dehomogenization target does not match");
  TermList out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(h, 0);
    out.push_back({m, t.coef, t.comp});
  }
  return Poly::from_terms(base, std::move(out));
}

Poly initial_form(const Poly& p, const std::vector<std::int64_t>& w) {
  bool nonzero = false;
  for (auto x : w) {
    if (x < 0) throw InvalidArgument("initial form weights must be non-negative");
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) throw InvalidArgument("initial form weight vector is zero");
  if (p.is_zero()) return p;
  const GAlgebra& alg = *p.algebra();
  std::int64_t best = vw_weight(alg, p.terms().front().mono, w);
  for (const auto& t : p.terms()) best = std::max(best, vw_weight(alg, t.mono, w));
  TermList out;
  for (const auto& t : p.terms())
    if (vw_weight(alg, t.mono, w) == best) out.push_back(t);
  return Poly::from_sorted(p.algebra(), std::move(out));
}

MonOrder homogenized_vw_order(const GAlgebra& homog, const std::vector<std::int64_t>& w) {
  const auto& roles = homog.roles();
  if (roles.h < 0) throw InvalidArgument("not a homogenized algebra");
  const int n = homog.nvars();
  if (w.size() != roles.weyl_pairs.size()) throw InvalidArgument("weight vector needs one entry per Weyl pair");
  std::vector<std::int64_t> uv(roles.hom_weights.begin(), roles.hom_weights.end());
  std::vector<std::int64_t> vw(static_cast<std::size_t>(n), 0), deg(static_cast<std::size_t>(n), 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    vw[static_cast<std::size_t>(roles.weyl_pairs[k].first)] = -w[k];
    vw[static_cast<std::size_t>(roles.weyl_pairs[k].second)] = w[k];
  }
  deg[static_cast<std::size_t>(roles.h)] = 0;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != roles.h) rest.push_back(v);
  std::vector<OrderStage> stages{{OrderStage::Kind::Weight, uv, {}},
                                 {OrderStage::Kind::Weight, vw, {}},
                                 {OrderStage::Kind::Weight, deg, {}},
                                 {OrderStage::Kind::RevLex, {}, rest}};
  return MonOrder::from_stages(n, std::move(stages), "homog(-w,w)");
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->nvars()) throw InvalidArgument("one image per source variable");
  for (const auto& img : images_) {
    if (!img.algebra()->same_ring(*target_)) throw AlgebraMismatch("image outside the target algebra");
    if (img.max_component() > 0) throw InvalidArgument("images must be ring elements");
  }
  for (auto& img : images_) img = img.reorder(target_);
  monotone_ = true;
  int last = -1;
  for (const auto& img : images_) {
    int idx = -1;
    if (img.size() == 1 && img.lc() == 1 && img.lm().total_degree() == 1) idx = img.lm().max_var();
    simple_.push_back(idx);
    if (idx < 0 || idx <= last) monotone_ = false;
    last = idx;
  }
}

AlgebraMap AlgebraMap::by_names(AlgebraPtr source, AlgebraPtr target, const std::map<std::string, Poly>& overrides) {
  std::vector<Poly> images;
  for (int v = 0; v < source->nvars(); ++v) {
    auto it = overrides.find(source->name(v));
    if (it != overrides.end()) {
      images.push_back(it->second);
      continue;
    }
    int k = target->index_of(source->name(v));
    if (k < 0) throw AlgebraMismatch("target has no variable '" + source->name(v) + "'");
    images.push_back(Poly::variable(target, k));
  }
  return AlgebraMap(std::move(source), std::move(target), std::move(images));
}

bool AlgebraMap::is_homomorphism() const {
  const int n = source_->nvars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      TermList d;
      for (const auto& r : source_->relations())
        if (r.i == i && r.j == j) d = r.d;
      Poly dimg = apply_map(*this, Poly::from_terms(source_, d));
      const Poly& xi = images_[static_cast<std::size_t>(i)];
      const Poly& xj = images_[static_cast<std::size_t>(j)];
      if (star_mul(xj, xi) - star_mul(xi, xj) != dimg) return false;
    }
  return true;
}

Poly apply_map(const AlgebraMap& m, const Poly& p) {
  if (!p.algebra()->same_ring(*m.source_)) throw AlgebraMismatch("polynomial is not in the map's source");
  if (m.monotone_) {
    TermList out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Monomial r;
      for (int v = 0; v < m.source_->nvars(); ++v)
        if (t.mono[v]) r.set(m.simple_[static_cast<std::size_t>(v)], t.mono[v]);
      out.push_back({r, t.coef, t.comp});
    }
    return Poly::from_terms(m.target_, std::move(out));
  }
  std::map<std::pair<int, int>, Poly> powers;
  auto power = [&](int v, int e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Poly r = e == 1 ? m.images_[static_cast<std::size_t>(v)]
                    : star_mul(m.images_[static_cast<std::size_t>(v)], powers.at({v, e - 1}));
    return powers.emplace(key, std::move(r)).first->second;
  };
  Poly out(m.target_);
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(m.target_, t.coef, 0);
    for (int v = 0; v < m.source_->nvars(); ++v) {
      int e = t.mono[v];
      if (!e) continue;
      for (int k = 1; k < e; ++k) power(v, k);
      acc = star_mul(acc, power(v, e));
      if (acc.is_zero()) break;
    }
    if (t.comp) acc = acc.with_component(t.comp);
    out += acc;
  }
  return out;
}

Poly substitute_euler(const Poly& p, int t, int dt, const AlgebraPtr& target, int s) {
  const GAlgebra& src = *p.algebra();
  Poly out(target);
  std::vector<int> into(static_cast<std::size_t>(src.nvars()), -1);
  for (int v = 0; v < src.nvars(); ++v) {
    if (v == t || v == dt) continue;
    into[static_cast<std::size_t>(v)] = target->index_of(src.name(v));
    if (into[static_cast<std::size_t>(v)] < 0) throw AlgebraMismatch("target has no variable '" + src.name(v) + "'");
  }
  Poly s_poly = Poly::variable(target, s);
  for (const auto& term : p.terms()) {
    int a = term.mono[t];
    if (term.mono[dt] != a) throw InvalidArgument("term is not a polynomial in t*Dt");
    Monomial rest;
    for (int v = 0; v < src.nvars(); ++v)
      if (into[static_cast<std::size_t>(v)] >= 0 && term.mono[v]) rest.set(into[static_cast<std::size_t>(v)], term.mono[v]);
    Poly factor = Poly::monomial(target, rest, term.coef);
    for (int k = 0; k < a; ++k) factor = star_mul(-s_poly - Poly::constant(target, Rational(1 + k)), factor);
    out += factor;
  }
  return out;
}

}  // namespace dmod

namespace dmod {

Poly transfer(const Poly& p, const AlgebraPtr& target) {
  const GAlgebra& src = *p.algebra();
  if (src.same_ring(*target)) return p.reorder(target);
  std::vector<int> idx(static_cast<std::size_t>(src.nvars()), -1);
  const std::uint64_t used = p.support();
  bool monotone = true;
  int last = -1;
  for (int v = 0; v < src.nvars(); ++v) {
    idx[static_cast<std::size_t>(v)] = target->index_of(src.name(v));
    if (!(used >> v & 1u)) continue;
    if (idx[static_cast<std::size_t>(v)] < 0) throw AlgebraMismatch("target has no variable '" + src.name(v) + "'");
    if (idx[static_cast<std::size_t>(v)] <= last) monotone = false;
    last = idx[static_cast<std::size_t>(v)];
  }
  if (monotone) {
    TermList out;
    for (const auto& t : p.terms()) {
      Monomial m;
      for (int v = 0; v < src.nvars(); ++v)
        if (t.mono[v]) m.set(idx[static_cast<std::size_t>(v)], t.mono[v]);
      out.push_back({m, t.coef, t.comp});
    }
    return Poly::from_terms(target, std::move(out));
  }
  Poly out(target);
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(target, t.coef);
    for (int v = 0; v < src.nvars(); ++v)
      if (t.mono[v])
        acc = star_mul(acc, Poly::monomial(target, Monomial::variable(idx[static_cast<std::size_t>(v)], t.mono[v])));
    if (t.comp) acc = acc.with_component(t.comp);
    out += acc;
  }
  return out;
}

}  // namespace dmod
