#include "multable.hpp"

#include <algorithm>
#include <numeric>

#include "dmod/errors.hpp"

namespace dmod::detail {

namespace {

Monomial restrict_to(const Monomial& m, std::uint64_t mask) {
  Monomial r;
  while (mask) {
    int v = __builtin_ctzll(mask);
    if (m[v]) r.set(v, m[v]);
    mask &= mask - 1;
  }
  return r;
}

Monomial drop(const Monomial& m, std::uint64_t mask) {
  Monomial r = m;
  while (mask) {
    int v = __builtin_ctzll(mask);
    if (m[v]) r.set(v, 0);
    mask &= mask - 1;
  }
  return r;
}

std::uint64_t key(int j, int a, int i, int b) {
  return (std::uint64_t(j) << 56) | (std::uint64_t(i) << 48) | (std::uint64_t(a) << 24) | std::uint64_t(b);
}

}  // namespace

MulTable::MulTable(int nvars, std::vector<Relation> relations)
    : n_(nvars),
      d_(static_cast<std::size_t>(nvars), std::vector<const TermList*>(static_cast<std::size_t>(nvars), nullptr)),
      lower_(static_cast<std::size_t>(nvars), 0),
      upper_(static_cast<std::size_t>(nvars), 0) {
  for (auto& r : relations) {
    if (r.i > r.j) throw InvalidArgument("relation indices must satisfy i < j");
    if (r.i < 0 || r.j >= nvars || r.i == r.j) throw InvalidArgument("relation index out of range");
    // merge duplicate monomials, drop zeros
    Acc acc;
    for (auto& t : r.d) {
      if (t.mono.max_var() >= nvars) throw InvalidArgument("relation uses an unknown variable");
      acc[t.mono] += t.coef;
    }
    r.d.clear();
    for (auto& [m, c] : acc)
      if (sgn(c) != 0) r.d.push_back({m, c, 0});
    std::sort(r.d.begin(), r.d.end(), [nvars](const Term& x, const Term& y) {
      return x.mono.exponents(nvars) < y.mono.exponents(nvars);
    });
    if (!r.d.empty()) relations_.push_back(std::move(r));
  }
  std::sort(relations_.begin(), relations_.end(),
            [](const Relation& x, const Relation& y) { return std::pair(x.j, x.i) < std::pair(y.j, y.i); });
  for (const auto& r : relations_) {
    if (d_[r.j][r.i]) throw InvalidArgument("duplicate relation");
    d_[r.j][r.i] = &r.d;
    lower_[r.j] |= std::uint64_t{1} << r.i;
    upper_[r.i] |= std::uint64_t{1} << r.j;
  }
  // Blocks: union-find over noncentral variables.
  std::vector<int> parent(static_cast<std::size_t>(nvars));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& r : relations_) {
    unite(r.i, r.j);
    for (const auto& t : r.d) {
      std::uint64_t s = t.mono.support();
      while (s) {
        int v = __builtin_ctzll(s);
        if (!is_central(v)) unite(r.i, v);
        s &= s - 1;
      }
    }
  }
  std::vector<int> slot(static_cast<std::size_t>(nvars), -1);
  for (int v = 0; v < nvars; ++v) {
    if (is_central(v)) continue;
    int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(blocks_.size());
      blocks_.push_back(0);
      block_vars_.emplace_back();
    }
    blocks_[slot[root]] |= std::uint64_t{1} << v;
    block_vars_[slot[root]].push_back(v);
  }
}

bool MulTable::same_relations(const MulTable& o) const {
  if (n_ != o.n_ || relations_.size() != o.relations_.size()) return false;
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    const auto& x = relations_[k];
    const auto& y = o.relations_[k];
    if (x.i != y.i || x.j != y.j || x.d.size() != y.d.size()) return false;
    for (std::size_t t = 0; t < x.d.size(); ++t)
      if (x.d[t].mono != y.d[t].mono || x.d[t].coef != y.d[t].coef) return false;
  }
  return true;
}

bool MulTable::commute(int i, int j) const {
  if (i == j) return true;
  if (i > j) std::swap(i, j);
  return d_[j][i] == nullptr;
}

TermList MulTable::drain(Acc& acc, const Monomial& leading) {
  TermList out;
  out.reserve(acc.size());
  auto it = acc.find(leading);
  if (it != acc.end()) {
    out.push_back({it->first, it->second, 0});
    acc.erase(it);
  }
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c), 0});
  return out;
}

MulTable::Shared MulTable::pair_power(int j, int a, int i, int b) const {
  const auto k = key(j, a, i, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  Monomial lead = Monomial::variable(i, b) * Monomial::variable(j, a);
  Acc acc;
  if (a == 1 && b == 1) {
    acc[lead] += 1;
    for (const auto& t : *d_[j][i]) acc[t.mono] += t.coef;
  } else if (b > 1) {
    auto prev = pair_power(j, a, i, b - 1);
    Monomial xi = Monomial::variable(i);
    for (const auto& t : *prev) mul_generic(t.mono, xi, t.coef, acc);
  } else {
    auto prev = pair_power(j, a - 1, i, 1);
    Monomial xj = Monomial::variable(j);
    for (const auto& t : *prev) mul_generic(xj, t.mono, t.coef, acc);
  }
  auto result = std::make_shared<const TermList>(drain(acc, lead));
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(k, result).first->second;
}

void MulTable::mul_generic(const Monomial& A, const Monomial& B, const Rational& c, Acc& out) const {
  if (B.is_one() || A.is_one() || trivial(A.support(), B.support())) {
    out[A * B] += c;
    return;
  }
  int i = B.min_var();
  int b = B[i];
  Monomial rest = B;
  rest.set(i, 0);
  if (rest.is_one()) {
    mul_var_pow(A, i, b, c, out);
    return;
  }
  Acc tmp;
  mul_var_pow(A, i, b, Rational(1), tmp);
  for (const auto& [m, cm] : tmp)
    if (sgn(cm) != 0) mul_generic(m, rest, c * cm, out);
}

void MulTable::mul_var_pow(const Monomial& A, int i, int b, const Rational& c, Acc& out) const {
  std::uint64_t above = A.support() & ~((std::uint64_t{2} << i) - 1);
  if ((above & upper_[i]) == 0) {
    out[A * Monomial::variable(i, b)] += c;
    return;
  }
  int j = A.max_var();
  int a = A[j];
  Monomial rest = A;
  rest.set(j, 0);
  if (commute(i, j)) {
    mul_generic(rest, Monomial::variable(i, b) * Monomial::variable(j, a), c, out);
    return;
  }
  auto p = pair_power(j, a, i, b);
  for (const auto& t : *p) mul_generic(rest, t.mono, c * t.coef, out);
}

TermList MulTable::block_product(int block, const Monomial& a, const Monomial& b) const {
  const auto& vars = block_vars_[block];
  if (vars.size() == 2) {
    int i = vars[0], j = vars[1];
    auto p = pair_power(j, a[j], i, b[i]);
    Monomial outer = Monomial::variable(i, a[i]) * Monomial::variable(j, b[j]);
    TermList r;
    r.reserve(p->size());
    for (const auto& t : *p) r.push_back({t.mono * outer, t.coef, 0});
    return r;
  }
  Acc acc;
  Monomial ak = restrict_to(a, blocks_[block]);
  Monomial bk = restrict_to(b, blocks_[block]);
  mul_generic(ak, bk, Rational(1), acc);
  return drain(acc, ak * bk);
}

void MulTable::multiply(const Monomial& a, const Monomial& b, const Rational& c, int comp, TermList& out,
                        bool include_leading) const {
  const std::uint64_t sa = a.support(), sb = b.support();
  if (trivial(sa, sb)) {
    if (include_leading) out.push_back({a * b, c, comp});
    return;
  }
  // Collect the nontrivial block factors.
  TermList factors[kMaxVars / 2];
  int nf = 0;
  std::uint64_t used = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    std::uint64_t m = blocks_[k];
    if (!(sa & m) || !(sb & m) || trivial(sa & m, sb & m)) continue;
    factors[nf++] = block_product(static_cast<int>(k), a, b);
    used |= m;
  }
  Monomial base = drop(a, used) * drop(b, used);
  // Expand base * prod factors; index vector over factor terms.
  int idx[kMaxVars / 2] = {0};
  while (true) {
    bool all_lead = true;
    for (int f = 0; f < nf; ++f) all_lead = all_lead && idx[f] == 0;
    if (include_leading || !all_lead) {
      Monomial m = base;
      Rational coef = c;
      for (int f = 0; f < nf; ++f) {
        const Term& t = factors[f][static_cast<std::size_t>(idx[f])];
        m *= t.mono;
        coef *= t.coef;
      }
      out.push_back({m, std::move(coef), comp});
    }
    int f = 0;
    for (; f < nf; ++f) {
      if (++idx[f] < static_cast<int>(factors[f].size())) break;
      idx[f] = 0;
    }
    if (f == nf) break;
  }
}

}  // namespace dmod::detail
