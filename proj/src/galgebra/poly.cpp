#include "dmod/poly.hpp"

#include <algorithm>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

void sort_and_combine(const MonOrder& ord, TermList& terms) {
  std::sort(terms.begin(), terms.end(), [&ord](const Term& x, const Term& y) {
    return ord.compare(x.mono, x.comp, y.mono, y.comp) > 0;
  });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::size_t k = r + 1;
    while (k < terms.size() && terms[k].comp == terms[r].comp && terms[k].mono == terms[r].mono) {
      terms[r].coef += terms[k].coef;
      ++k;
    }
    if (sgn(terms[r].coef) != 0) {
      if (w != r) terms[w] = std::move(terms[r]);
      ++w;
    }
    r = k;
  }
  terms.resize(w);
}

}  // namespace

void require_same_algebra(const Poly& a, const Poly& b) {
  if (a.algebra() == b.algebra()) return;
  if (!a.algebra() || !b.algebra() || !a.algebra()->compatible(*b.algebra()))
    throw AlgebraMismatch("operands belong to different algebras");
}

TermList merge_terms(const MonOrder& ord, const TermList& a, const TermList& b, const Rational& scale) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, a[i].comp, b[j].mono, b[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, b[j].coef * scale, b[j].comp});
      ++j;
    } else {
      Rational s = a[i].coef + b[j].coef * scale;
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s), a[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, b[j].coef * scale, b[j].comp});
  return out;
}

Poly Poly::from_terms(AlgebraPtr alg, TermList terms) {
  Poly p(std::move(alg));
  for (const auto& t : terms)
    if (t.mono.max_var() >= p.alg_->nvars()) throw InvalidArgument("term uses a variable outside the algebra");
  sort_and_combine(p.alg_->order(), terms);
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_sorted(AlgebraPtr alg, TermList terms) {
  Poly p(std::move(alg));
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::constant(AlgebraPtr alg, const Rational& c, int comp) {
  Poly p(std::move(alg));
  if (sgn(c) != 0) p.terms_.push_back({Monomial(), c, comp});
  return p;
}

Poly Poly::variable(AlgebraPtr alg, int index) {
  if (index < 0 || index >= alg->nvars()) throw InvalidArgument("variable index out of range");
  return monomial(std::move(alg), Monomial::variable(index));
}

Poly Poly::variable(AlgebraPtr alg, std::string_view name) {
  int k = alg->index_of(name);
  if (k < 0) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(alg), k);
}

Poly Poly::monomial(AlgebraPtr alg, const Monomial& m, const Rational& c, int comp) {
  if (m.max_var() >= alg->nvars()) throw InvalidArgument("monomial uses a variable outside the algebra");
  Poly p(std::move(alg));
  if (sgn(c) != 0) p.terms_.push_back({m, c, comp});
  return p;
}

const Term& Poly::lead() const {
  if (terms_.empty()) throw InvalidArgument("zero has no leading term");
  return terms_.front();
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

int Poly::max_component() const {
  int c = -1;
  for (const auto& t : terms_) c = std::max(c, t.comp);
  return c;
}

std::uint64_t Poly::support() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Poly p = *this;
  if (p.lc() == 1) return p;
  Rational inv = 1 / p.lc();
  for (auto& t : p.terms_) t.coef *= inv;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_algebra(*this, o);
  return from_sorted(alg_, merge_terms(alg_->order(), terms_, o.terms_, Rational(1)));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_algebra(*this, o);
  return from_sorted(alg_, merge_terms(alg_->order(), terms_, o.terms_, Rational(-1)));
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }

Poly Poly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Poly(alg_);
  Poly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!alg_->same_ring(*o.alg_)) return false;
  if (!alg_->compatible(*o.alg_)) return reorder(o.alg_) == o;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& x = terms_[k];
    const auto& y = o.terms_[k];
    if (x.comp != y.comp || x.mono != y.mono || x.coef != y.coef) return false;
  }
  return true;
}

Poly Poly::reorder(AlgebraPtr alg) const {
  if (!alg_->same_ring(*alg)) throw AlgebraMismatch("reorder needs the same variables and relations");
  return from_terms(std::move(alg), terms_);
}

Poly Poly::component(int k) const {
  TermList out;
  for (const auto& t : terms_)
    if (t.comp == k) out.push_back({t.mono, t.coef, 0});
  return from_sorted(alg_, std::move(out));
}

Poly Poly::with_component(int k) const {
  TermList out = terms_;
  for (auto& t : out) t.comp = k;
  return from_terms(alg_, std::move(out));
}

Poly Poly::shift_components(int offset) const {
  TermList out = terms_;
  for (auto& t : out) t.comp += offset;
  return from_terms(alg_, std::move(out));
}

Poly star_mul(const Poly& a, const Poly& b) {
  require_same_algebra(a, b);
  const GAlgebra& alg = *a.algebra();
  TermList out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    if (s.comp != 0) throw InvalidArgument("left factor must be a ring element");
    for (const auto& t : b.terms()) alg.multiply(s.mono, t.mono, s.coef * t.coef, t.comp, out);
  }
  return Poly::from_terms(b.algebra(), std::move(out));
}

Poly mul_term_left(const Monomial& m, const Rational& c, const Poly& g) {
  const GAlgebra& alg = *g.algebra();
  TermList lead;
  TermList corr;
  lead.reserve(g.size());
  for (const auto& t : g.terms()) {
    Rational cc = c * t.coef;
    alg.multiply(m, t.mono, cc, t.comp, corr, false);
    lead.push_back({m * t.mono, std::move(cc), t.comp});
  }
  if (corr.empty()) return Poly::from_sorted(g.algebra(), std::move(lead));
  Poly pc = Poly::from_terms(g.algebra(), std::move(corr));
  return Poly::from_sorted(g.algebra(), merge_terms(alg.order(), lead, pc.terms(), Rational(1)));
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.algebra(), 1);
  for (unsigned k = 0; k < e; ++k) r = star_mul(r, a);
  return r;
}

Poly lie_bracket(const Poly& a, const Poly& b) {
  require_same_algebra(a, b);
  const GAlgebra& alg = *a.algebra();
  TermList out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      if (alg.monomials_commute(s.mono, t.mono)) continue;
      Rational c = s.coef * t.coef;
      alg.multiply(s.mono, t.mono, c, 0, out, false);
      alg.multiply(t.mono, s.mono, -c, 0, out, false);
    }
  }
  return Poly::from_terms(a.algebra(), std::move(out));
}

Poly skew_bracket(const Poly& a, const Poly& b, const Rational& k) {
  if (k == 1) return lie_bracket(a, b);
  return star_mul(a, b) - star_mul(b, a) * k;
}

std::string monomial_string(const GAlgebra& alg, const Monomial& m) {
  std::string out;
  for (int v = 0; v < alg.nvars(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += "*";
    out += alg.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

namespace {

std::string render_terms(const GAlgebra& alg, const TermList& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    std::string mono = monomial_string(alg, t.mono);
    Rational a = abs(t.coef);
    std::string body;
    if (mono.empty()) body = a.get_str();
    else if (a == 1) body = mono;
    else body = a.get_str() + "*" + mono;
    if (out.empty()) out = (sgn(t.coef) < 0 ? "-" : "") + body;
    else out += (sgn(t.coef) < 0 ? "-" : "+") + body;
  }
  return out;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.max_component() > 0) return to_string(p, p.max_component() + 1);
  return render_terms(*p.algebra(), p.terms());
}

std::string to_string(const Poly& p, int rank) {
  std::string out = "[";
  for (int k = 0; k < rank; ++k) {
    if (k) out += ", ";
    out += render_terms(*p.algebra(), p.component(k).terms());
  }
  return out + "]";
}

}  // namespace dmod
