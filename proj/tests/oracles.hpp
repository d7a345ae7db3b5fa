#pragma once

// Independent reference implementations used by the tests.

#include <random>

#include "dmod/poly.hpp"

namespace oracle {

using namespace dmod;

inline Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// D^a x^b = sum_k k! C(a,k) C(b,k) x^(b-k) D^(a-k) in the first Weyl algebra
// (x = variable 0, D = variable 1).
inline Poly weyl_closed_form(const AlgebraPtr& d1, int a, int b) {
  TermList terms;
  for (int k = 0; k <= std::min(a, b); ++k) {
    Monomial m = Monomial::variable(0, b - k) * Monomial::variable(1, a - k);
    terms.push_back({m, Rational(factorial(k) * binomial(a, k) * binomial(b, k)), 0});
  }
  return Poly::from_terms(d1, terms);
}

template <class Rng>
Poly random_element(const AlgebraPtr& alg, Rng& rng, int nterms, int maxdeg, int coeff = 5) {
  std::uniform_int_distribution<int> var(0, alg->nvars() - 1), deg(0, maxdeg), c(-coeff, coeff);
  TermList terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m;
    int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      int v = var(rng);
      m.set(v, m[v] + 1);
    }
    int cc = c(rng);
    if (cc == 0) cc = 1;
    terms.push_back({m, Rational(cc), 0});
  }
  return Poly::from_terms(alg, terms);
}

}  // namespace oracle

#include <map>

namespace oracle {

// Commutative polynomials as exponent vector -> coefficient, independent of
// the engine's data structures. Ordering: degree reverse lexicographic.
struct DrlLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] > b[k];
    return false;
  }
};
using NaivePoly = std::map<std::vector<int>, Rational, DrlLess>;

inline void naive_add(NaivePoly& p, const std::vector<int>& m, const Rational& c) {
  Rational& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

inline NaivePoly naive_mul_term(const NaivePoly& p, const std::vector<int>& m, const Rational& c) {
  NaivePoly r;
  for (const auto& [e, a] : p) {
    auto x = e;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += m[k];
    naive_add(r, x, a * c);
  }
  return r;
}

inline bool naive_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline NaivePoly naive_reduce(NaivePoly f, const std::vector<NaivePoly>& G) {
  NaivePoly rest;
  while (!f.empty()) {
    auto [m, c] = *f.rbegin();
    bool hit = false;
    for (const auto& g : G) {
      const auto& [gm, gc] = *g.rbegin();
      if (!naive_divides(gm, m)) continue;
      std::vector<int> q(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) q[k] = m[k] - gm[k];
      for (const auto& [e, a] : naive_mul_term(g, q, -c / gc)) naive_add(f, e, a);
      hit = true;
      break;
    }
    if (!hit) {
      rest[m] = c;
      f.erase(m);
    }
  }
  return rest;
}

// Reduced Groebner basis by the textbook algorithm (all pairs, no criteria).
inline std::vector<NaivePoly> naive_buchberger(std::vector<NaivePoly> G) {
  std::erase_if(G, [](const NaivePoly& p) { return p.empty(); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j});
  auto monic = [](NaivePoly& p) {
    Rational lc = p.rbegin()->second;
    for (auto& [e, c] : p) c /= lc;
  };
  for (auto& g : G) monic(g);
  auto lcm_degree = [&G](const std::pair<std::size_t, std::size_t>& pr) {
    const auto& a = G[pr.first].rbegin()->first;
    const auto& b = G[pr.second].rbegin()->first;
    int d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) d += std::max(a[k], b[k]);
    return d;
  };
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const auto& p, const auto& q) { return lcm_degree(p) < lcm_degree(q); });
    auto [i, j] = *best;
    pairs.erase(best);
    const auto a = G[i].rbegin()->first;
    const auto b = G[j].rbegin()->first;
    bool coprime = true;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0 && b[k] > 0) coprime = false;
    if (coprime) continue;
    std::vector<int> qa(a.size()), qb(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      int l = std::max(a[k], b[k]);
      qa[k] = l - a[k];
      qb[k] = l - b[k];
    }
    NaivePoly s = naive_mul_term(G[i], qa, 1);
    for (const auto& [e, c] : naive_mul_term(G[j], qb, -1)) naive_add(s, e, c);
    NaivePoly r = naive_reduce(s, G);
    if (r.empty()) continue;
    monic(r);
    G.push_back(r);
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1});
  }
  // minimize, then reduce tails and normalize
  std::vector<NaivePoly> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t o = 0; o < G.size() && !redundant; ++o) {
      if (o == k) continue;
      const auto& mo = G[o].rbegin()->first;
      const auto& mk = G[k].rbegin()->first;
      if (naive_divides(mo, mk) && (mo != mk || o < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::vector<NaivePoly> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<NaivePoly> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(minimal[o]);
    NaivePoly p = naive_reduce(minimal[k], others);
    Rational lc = p.rbegin()->second;
    for (auto& [e, c] : p) c /= lc;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const NaivePoly& a, const NaivePoly& b) { return DrlLess{}(a.rbegin()->first, b.rbegin()->first); });
  return out;
}

inline NaivePoly to_naive(const Poly& p) {
  NaivePoly r;
  const int n = p.algebra()->nvars();
  for (const auto& t : p.terms()) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = t.mono[k];
    naive_add(r, e, t.coef);
  }
  return r;
}

}  // namespace oracle
