#include <algorithm>
#include <set>

#include "dmod/errors.hpp"
#include "dmod/groebner.hpp"
#include "reducer.hpp"

namespace dmod {

using detail::graded_degree;
using detail::Reducer;

GBasis::GBasis(AlgebraPtr alg, std::vector<Poly> gens, bool reduced, int rank)
    : alg_(std::move(alg)), gens_(std::move(gens)), reduced_(reduced), rank_(rank) {}

bool GBasis::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero() && g.max_component() == 0 && rank_ == 1) return true;
  return false;
}

namespace {

GBasis reduce_basis(const GBasis& G, bool known_gb);

void check_inputs(const std::vector<Poly>& gens, const AlgebraPtr& alg) {
  for (const auto& g : gens)
    if (!g.algebra()->same_ring(*alg)) throw AlgebraMismatch("generators belong to different algebras");
  if (!alg->order().is_global()) throw OrderingError("ordering " + alg->order().description() + " is not global");
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int comp;
  std::int64_t sugar;
  std::size_t weight;
  bool commutator;
};

class Engine {
 public:
  Engine(AlgebraPtr alg, const GBOptions& opt, bool module_mode)
      : alg_(std::move(alg)),
        opt_(opt),
        module_(module_mode),
        red_(alg_, opt.strategy == GBOptions::Strategy::Slim),
        grading_(alg_->order().grading()) {}

  void add_input(const Poly& g) {
    std::int64_t sugar = 0;
    for (const auto& t : g.terms()) sugar = std::max(sugar, graded_degree(t.mono, grading_));
    Poly h = red_.reduce(g, opt_.tail_reduce, &sugar);
    if (!h.is_zero()) insert(h.monic(), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      if (opt_.deadline && std::chrono::steady_clock::now() > *opt_.deadline)
        throw CapExceeded("time budget exceeded during a Groebner basis computation");
      Pair p = pop();
      const Poly& f = red_.poly(p.i);
      const Poly& g = red_.poly(p.j);
      Poly s(alg_);
      if (p.commutator) {
        s = lie_bracket(f, g);
      } else {
        s = mul_term_left(p.lcm / f.lm(), Rational(1), f) - mul_term_left(p.lcm / g.lm(), Rational(1), g);
      }
      if (s.is_zero()) continue;
      std::int64_t sugar = p.sugar;
      Poly h = red_.reduce(s, opt_.tail_reduce, &sugar);
      if (h.is_zero()) continue;
      if (!opt_.keep_lead_components.empty() &&
          std::find(opt_.keep_lead_components.begin(), opt_.keep_lead_components.end(), h.lcomp()) ==
              opt_.keep_lead_components.end())
        continue;
      insert(h.monic(), sugar);
    }
  }

  std::vector<Poly> basis() const {
    std::vector<Poly> out;
    for (int id : basis_) out.push_back(red_.poly(id));
    return out;
  }

 private:
  void insert(const Poly& h, std::int64_t sugar) {
    if (opt_.degree_cap > 0 && h.degree() > opt_.degree_cap)
      throw CapExceeded("degree cap " + std::to_string(opt_.degree_cap) + " exceeded (element of degree " +
                        std::to_string(h.degree()) + ")");
    int id = red_.add(h, sugar);
    if (opt_.criteria) update(id);
    else {
      for (int g : basis_)
        if (red_.poly(g).lcomp() == h.lcomp()) pairs_.push_back(make_pair(g, id, false));
      basis_.push_back(id);
    }
  }

  bool coprime_commutator(int a, int b) const {
    const Poly& f = red_.poly(a);
    const Poly& g = red_.poly(b);
    return !module_ && f.lm().coprime(g.lm());
  }

  Pair make_pair(int a, int b, bool use_criteria) const {
    const Poly& f = red_.poly(a);
    const Poly& g = red_.poly(b);
    Pair p{a, b, f.lm().lcm(g.lm()), f.lcomp(), 0, red_.weight(a) + red_.weight(b), false};
    if (use_criteria && coprime_commutator(a, b)) {
      p.commutator = true;
      p.sugar = red_.sugar(a) + red_.sugar(b);
    } else {
      p.sugar = std::max(red_.sugar(a) + graded_degree(p.lcm / f.lm(), grading_),
                         red_.sugar(b) + graded_degree(p.lcm / g.lm(), grading_));
    }
    return p;
  }

  // Gebauer-Moeller update; coprime pairs become commutator pairs unless
  // the algebra is commutative on the variables involved.
  void update(int h) {
    const Poly& hp = red_.poly(h);
    const Monomial& hl = hp.lm();
    std::vector<Pair> C;
    for (int g : basis_)
      if (red_.poly(g).lcomp() == hp.lcomp()) C.push_back(make_pair(g, h, true));
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool keep = true;
      if (!coprime_commutator(p.i, p.j)) {
        for (std::size_t l = k + 1; l < C.size() && keep; ++l)
          if (C[l].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      if (p.comp == hp.lcomp() && hl.divides(p.lcm)) {
        Monomial l1 = red_.poly(p.i).lm().lcm(hl);
        Monomial l2 = red_.poly(p.j).lm().lcm(hl);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_.swap(kept);
    for (auto& p : D) {
      if (p.commutator) {
        std::uint64_t vars = red_.poly(p.i).support() | red_.poly(p.j).support();
        if (alg_->commutative_on(vars)) continue;
      }
      pairs_.push_back(std::move(p));
    }
    std::vector<int> nb;
    for (int g : basis_)
      if (!(red_.poly(g).lcomp() == hp.lcomp() && hl.divides(red_.poly(g).lm()))) nb.push_back(g);
      else red_.set_active(g, false);
    nb.push_back(h);
    basis_.swap(nb);
  }

  Pair pop() {
    const MonOrder& ord = alg_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      bool better;
      if (a.sugar != b.sugar) better = a.sugar < b.sugar;
      else if (opt_.strategy == GBOptions::Strategy::Slim && a.weight != b.weight) better = a.weight < b.weight;
      else {
        int c = ord.compare(a.lcm, a.comp, b.lcm, b.comp);
        better = c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i));
      }
      if (better) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  AlgebraPtr alg_;
  GBOptions opt_;
  bool module_;
  Reducer red_;
  std::vector<std::int64_t> grading_;
  std::vector<int> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

GBasis buchberger(const std::vector<Poly>& gens, const GBOptions& opt) {
  if (gens.empty()) throw InvalidArgument("buchberger needs at least one generator to fix the algebra");
  return buchberger(gens, gens.front().algebra(), opt);
}

GBasis buchberger(const std::vector<Poly>& gens, const AlgebraPtr& alg, const GBOptions& opt) {
  check_inputs(gens, alg);
  int rank = 1;
  bool module_mode = false;
  std::vector<Poly> moved;
  for (const auto& g : gens) {
    if (g.max_component() > 0) module_mode = true;
    rank = std::max(rank, g.max_component() + 1);
    if (!g.is_zero()) moved.push_back(g.algebra()->compatible(*alg) ? g : g.reorder(alg));
  }
  // inputs in ascending order of leading terms
  std::stable_sort(moved.begin(), moved.end(), [&alg](const Poly& a, const Poly& b) {
    return alg->order().compare(a.lm(), a.lcomp(), b.lm(), b.lcomp()) < 0;
  });
  Engine eng(alg, opt, module_mode);
  for (const auto& g : moved) eng.add_input(g);
  eng.run();
  GBasis raw(alg, eng.basis(), false, rank);
  GBasis red = reduce_basis(raw, true);
  if (opt.degree_cap > 0)
    for (const auto& g : red)
      if (g.degree() > opt.degree_cap) throw CapExceeded("degree cap exceeded in the reduced basis");
  return red;
}

namespace {

GBasis reduce_basis(const GBasis& G, bool known_gb) {
  const AlgebraPtr& alg = G.algebra();
  const MonOrder& ord = alg->order();
  std::vector<Poly> gens;
  for (const auto& g : G.gens())
    if (!g.is_zero()) gens.push_back(g.algebra()->compatible(*alg) ? g : g.reorder(alg));
  std::stable_sort(gens.begin(), gens.end(), [&ord](const Poly& a, const Poly& b) {
    return ord.compare(a.lm(), a.lcomp(), b.lm(), b.lcomp()) < 0;
  });
  // Interreduce leading terms; on a Groebner basis this only drops elements.
  auto less = [&ord](const Poly& a, const Poly& b) { return ord.compare(a.lm(), a.lcomp(), b.lm(), b.lcomp()) < 0; };
  std::vector<Poly> minimal;
  std::vector<Poly> queue(gens.rbegin(), gens.rend());  // largest first, pop from the back
  while (!queue.empty()) {
    Poly g = std::move(queue.back());
    queue.pop_back();
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.lcomp() == g.lcomp() && m.lm().divides(g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) {
      minimal.push_back(g.monic());
      continue;
    }
    if (known_gb) continue;
    Poly r = normal_form(g, minimal);
    if (r.is_zero()) continue;
    for (auto it = minimal.begin(); it != minimal.end();)
      if (it->lcomp() == r.lcomp() && r.lm().divides(it->lm())) {
        queue.push_back(*it);
        it = minimal.erase(it);
      } else {
        ++it;
      }
    queue.push_back(std::move(r));
    std::sort(queue.begin(), queue.end(), [&less](const Poly& a, const Poly& b) { return less(b, a); });
  }
  std::sort(minimal.begin(), minimal.end(), less);
  Reducer red(alg, false);
  std::vector<Poly> out;
  for (const auto& g : minimal) {
    // tail terms are below lm(g), so only earlier elements can reduce them
    TermList tail(g.terms().begin() + 1, g.terms().end());
    Poly t = red.reduce(Poly::from_sorted(alg, std::move(tail)), true);
    TermList terms{g.lead()};
    terms.insert(terms.end(), t.terms().begin(), t.terms().end());
    Poly r = Poly::from_sorted(alg, std::move(terms));
    red.add(r);
    out.push_back(std::move(r));
  }
  return GBasis(alg, std::move(out), true, G.rank());
}

}  // namespace

GBasis reduce_gb(const GBasis& G) { return reduce_basis(G, false); }

bool is_groebner_basis(const std::vector<Poly>& G) {
  if (G.empty()) return true;
  const AlgebraPtr& alg = G.front().algebra();
  Reducer red(alg, false);
  std::vector<Poly> gs;
  for (const auto& g : G)
    if (!g.is_zero()) {
      gs.push_back(g.monic());
      red.add(gs.back());
    }
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].lcomp() != gs[j].lcomp()) continue;
      Monomial l = gs[i].lm().lcm(gs[j].lm());
      Poly s = mul_term_left(l / gs[i].lm(), Rational(1), gs[i]) - mul_term_left(l / gs[j].lm(), Rational(1), gs[j]);
      if (!red.reduce(s, false).is_zero()) return false;
    }
  return true;
}

Poly normal_form(const Poly& f, const GBasis& G) {
  const AlgebraPtr& alg = G.algebra();
  if (!alg) return f;
  if (!alg->order().is_global()) throw OrderingError("normal form needs a global ordering");
  Reducer red(alg, false);
  for (const auto& g : G.gens())
    if (!g.is_zero()) red.add(g.lc() == 1 ? g : g.monic());
  Poly ff = f.algebra()->compatible(*alg) ? f : f.reorder(alg);
  return red.reduce(ff, true);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
  if (G.empty()) return f;
  return normal_form(f, GBasis(G.front().algebra(), G, false));
}

bool reduces_to_zero(const Poly& f, const GBasis& G) { return normal_form(f, G).is_zero(); }

bool ideal_contains(const GBasis& G, const std::vector<Poly>& elems) {
  for (const auto& e : elems)
    if (!reduces_to_zero(e, G)) return false;
  return true;
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const GBOptions& opt) {
  auto nz = [](const std::vector<Poly>& v) {
    std::vector<Poly> o;
    for (const auto& p : v)
      if (!p.is_zero()) o.push_back(p);
    return o;
  };
  auto A = nz(a), B = nz(b);
  if (A.empty() || B.empty()) return A.empty() && B.empty();
  GBasis ga = buchberger(A, opt), gb = buchberger(B, A.front().algebra(), opt);
  return ideal_contains(ga, B) && ideal_contains(gb, A);
}

}  // namespace dmod
