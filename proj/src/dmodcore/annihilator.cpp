#include <algorithm>
#include <functional>
#include <map>

#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

namespace {

const GAlgebra& input_ring_of(const std::vector<Poly>& fs) {
  if (fs.empty()) throw InvalidArgument("at least one polynomial is required");
  const GAlgebra& ring = *fs.front().algebra();
  check_input_ring(ring);
  for (const auto& f : fs) {
    if (!f.algebra()->same_ring(ring)) throw AlgebraMismatch("input polynomials live in different rings");
    if (f.is_constant()) throw InvalidArgument("input polynomial must be non-constant");
  }
  return ring;
}

SParamAnnihilator finish(AlgebraPtr alg, const std::vector<Poly>& gens, const std::vector<Poly>& fs,
                         const DmodOptions& opt) {
  return {alg, buchberger(gens, alg, opt.gb), fs};
}

}  // namespace

std::vector<Poly> malgrange_ideal(const std::vector<Poly>& fs) {
  const GAlgebra& ring = input_ring_of(fs);
  const int p = static_cast<int>(fs.size()), n = ring.nvars();
  AlgebraPtr w = weyl_malgrange(p, ring.names());
  // t_j = j, x_i = p + i, Dt_j = p + n + j, D_i = 2p + n + i
  std::vector<Poly> out;
  for (int j = 0; j < p; ++j) out.push_back(Poly::variable(w, j) - transfer(fs[static_cast<std::size_t>(j)], w));
  for (int i = 0; i < n; ++i) {
    Poly g = Poly::variable(w, 2 * p + n + i);
    for (int j = 0; j < p; ++j)
      g += transfer(partial(fs[static_cast<std::size_t>(j)], i), w) * Poly::variable(w, p + n + j);
    out.push_back(g);
  }
  return out;
}

std::vector<Poly> bm_generators(const std::vector<Poly>& fs) {
  const GAlgebra& ring = input_ring_of(fs);
  const int p = static_cast<int>(fs.size()), n = ring.nvars();
  AlgebraPtr sh = weyl_shift(ring.names(), p);
  // x_i = i, D_i = n + i, Dt_j = 2n + j, s_j = 2n + p + j
  std::vector<Poly> out;
  for (int j = 0; j < p; ++j)
    out.push_back(Poly::variable(sh, 2 * n + p + j) +
                  transfer(fs[static_cast<std::size_t>(j)], sh) * Poly::variable(sh, 2 * n + j));
  for (int i = 0; i < n; ++i) {
    Poly g = Poly::variable(sh, n + i);
    for (int j = 0; j < p; ++j)
      g += transfer(partial(fs[static_cast<std::size_t>(j)], i), sh) * Poly::variable(sh, 2 * n + j);
    out.push_back(g);
  }
  return out;
}

SParamAnnihilator sannfs_bm(const std::vector<Poly>& fs, const DmodOptions& opt) {
  const GAlgebra& ring = input_ring_of(fs);
  const int p = static_cast<int>(fs.size()), n = ring.nvars();
  auto gens = bm_generators(fs);
  std::vector<int> dts;
  for (int j = 0; j < p; ++j) dts.push_back(2 * n + j);
  AlgebraPtr target = weyl_s(ring.names(), p);
  GBasis G = eliminate(gens, dts, opt.gb, target);
  return {target, G, fs};
}

SParamAnnihilator sannfs_log(const Poly& f, const DmodOptions& opt) { return ann_upto_k(f, 1, opt); }

Integer Partition::multiplicity_factorial() const {
  Integer out = 1;
  std::size_t k = 0;
  while (k < parts.size()) {
    std::size_t l = k;
    while (l < parts.size() && parts[l] == parts[k]) ++l;
    for (std::size_t m = 2; m <= l - k; ++m) out *= static_cast<unsigned long>(m);
    k = l;
  }
  return out;
}

std::vector<Partition> partitions(const std::vector<int>& beta, int length) {
  std::vector<Partition> out;
  if (length <= 0) return out;
  std::vector<std::vector<int>> parts;
  // Parts are chosen non-increasing (lexicographically), each non-zero and
  // bounded by the remaining vector.
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> rest, int left) {
    if (left == 0) {
      if (std::all_of(rest.begin(), rest.end(), [](int e) { return e == 0; }))
        out.push_back({parts, beta});
      return;
    }
    std::vector<int> cand(rest.size(), 0);
    // enumerate all vectors 0 <= cand <= rest
    std::function<void(std::size_t)> pick = [&](std::size_t k) {
      if (k == cand.size()) {
        if (std::all_of(cand.begin(), cand.end(), [](int e) { return e == 0; })) return;
        if (!parts.empty() && parts.back() < cand) return;
        std::vector<int> r = rest;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= cand[i];
        parts.push_back(cand);
        rec(r, left - 1);
        parts.pop_back();
        return;
      }
      for (int e = 0; e <= rest[k]; ++e) {
        cand[k] = e;
        pick(k + 1);
      }
      cand[k] = 0;
    };
    pick(0);
  };
  rec(beta, length);
  return out;
}

Poly formula_fs(const Poly& f, const std::vector<int>& beta, const AlgebraPtr& xs_ring) {
  const int n = static_cast<int>(beta.size());
  const int s_index = n;
  Poly fr = transfer(f, xs_ring);
  int total = 0;
  Integer beta_fact = 1;
  for (int e : beta) {
    total += e;
    for (int k = 2; k <= e; ++k) beta_fact *= k;
  }
  if (total == 0) return Poly::constant(xs_ring, 1);
  // Delta^sigma(f) = d^sigma f / sigma!
  std::map<std::vector<int>, Poly> delta;
  auto delta_of = [&](const std::vector<int>& sigma) -> const Poly& {
    auto it = delta.find(sigma);
    if (it != delta.end()) return it->second;
    Poly d = fr;
    Integer fact = 1;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < sigma[static_cast<std::size_t>(i)]; ++e) {
        d = partial(d, i);
        fact *= e + 1;
      }
    return delta.emplace(sigma, d * make_rational(Integer(1), fact)).first->second;
  };
  Poly out(xs_ring);
  Poly s = Poly::variable(xs_ring, s_index);
  for (int k = 1; k <= total; ++k) {
    Poly inner(xs_ring);
    for (const auto& sigma : partitions(beta, k)) {
      Poly prod = Poly::constant(xs_ring, make_rational(Integer(1), sigma.multiplicity_factorial()));
      for (const auto& part : sigma.parts) prod = prod * delta_of(part);
      inner += prod;
    }
    if (inner.is_zero()) continue;
    // falling factorial s(s-1)..(s-k+1)
    Poly falling = Poly::constant(xs_ring, 1);
    for (int j = 0; j < k; ++j) falling = falling * (s - Poly::constant(xs_ring, j));
    out += falling * inner * pow(fr, static_cast<unsigned>(total - k));
  }
  return out * Rational(beta_fact);
}

SParamAnnihilator ann_upto_k(const Poly& f, int k, const DmodOptions& opt) {
  if (k < 1) throw InvalidArgument("order bound k must be at least 1");
  const GAlgebra& ring = input_ring_of({f});
  const int n = ring.nvars();
  AlgebraPtr xs = action_ring(ring, 1);
  AlgebraPtr target = weyl_s(ring.names(), 1);
  // all beta with |beta| <= k, ascending in |beta|
  std::vector<std::vector<int>> betas;
  for (int d = 0; d <= k; ++d) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        cur[static_cast<std::size_t>(i)] = left;
        betas.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[static_cast<std::size_t>(i)] = e;
        rec(i + 1, left - e);
      }
    };
    rec(0, d);
  }
  Poly fr = transfer(f, xs);
  std::vector<Poly> images;
  for (const auto& beta : betas) {
    int order = 0;
    for (int e : beta) order += e;
    images.push_back(formula_fs(f, beta, xs) * pow(fr, static_cast<unsigned>(k - order)));
  }
  GBasis syz = syzygies(images, opt.gb);
  std::vector<Poly> ops;
  for (const auto& row : syz) {
    Poly op(target);
    for (std::size_t b = 0; b < betas.size(); ++b) {
      Poly coef = row.component(static_cast<int>(b));
      if (coef.is_zero()) continue;
      Poly d = Poly::constant(target, 1);
      for (int i = 0; i < n; ++i)
        if (betas[b][static_cast<std::size_t>(i)] > 0)
          d = d * pow(Poly::variable(target, n + i), static_cast<unsigned>(betas[b][static_cast<std::size_t>(i)]));
      op += transfer(coef, target) * d;
    }
    if (!op.is_zero()) ops.push_back(op);
  }
  return finish(target, ops, {f}, opt);
}

}  // namespace dmod
