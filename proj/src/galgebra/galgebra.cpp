#include "dmod/galgebra.hpp"

#include <set>

#include "dmod/errors.hpp"
#include "dmod/poly.hpp"
#include "multable.hpp"

namespace dmod {

namespace {

void check_admissible(const std::vector<std::string>& names, const detail::MulTable& table, const MonOrder& ord) {
  for (const auto& r : table.relations()) {
    const Monomial* lead = nullptr;
    for (const auto& t : r.d)
      if (!lead || ord.compare(t.mono, *lead) > 0) lead = &t.mono;
    Monomial xij = Monomial::variable(r.i) * Monomial::variable(r.j);
    if (lead && ord.compare(*lead, xij) >= 0) {
      throw AdmissibilityError("relation for (" + names[static_cast<std::size_t>(r.i)] + ", " +
                               names[static_cast<std::size_t>(r.j)] + ") has leading monomial not below " +
                               names[static_cast<std::size_t>(r.i)] + "*" + names[static_cast<std::size_t>(r.j)] +
                               " under ordering " + ord.description());
    }
  }
}

Poly relation_poly(const AlgebraPtr& alg, int i, int j) {
  TermList terms;
  for (const auto& r : alg->relations())
    if (r.i == i && r.j == j) terms = r.d;
  return Poly::from_terms(alg, std::move(terms));
}

void check_nondegenerate(const AlgebraPtr& alg) {
  const int n = alg->nvars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (alg->commute(i, j) && alg->commute(i, k) && alg->commute(j, k)) continue;
        Poly xi = Poly::variable(alg, i), xj = Poly::variable(alg, j), xk = Poly::variable(alg, k);
        Poly dij = relation_poly(alg, i, j), dik = relation_poly(alg, i, k), djk = relation_poly(alg, j, k);
        Poly ndc = lie_bracket(dij, xk) + lie_bracket(xj, dik) + lie_bracket(djk, xi);
        if (!ndc.is_zero())
          throw NondegeneracyError("nondegeneracy fails for the triple (" + alg->name(i) + ", " + alg->name(j) + ", " +
                                   alg->name(k) + ")");
      }
}

}  // namespace

AlgebraPtr GAlgebra::make(std::vector<std::string> names, std::vector<Relation> relations, MonOrder ord,
                          VarRoles roles, std::string kind) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw InvalidArgument("too many variables");
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(s).second) throw InvalidArgument("duplicate variable name '" + s + "'");
  }
  if (ord.nvars() != static_cast<int>(names.size()))
    throw InvalidArgument("ordering size does not match the number of variables");
  auto table = std::make_shared<const detail::MulTable>(static_cast<int>(names.size()), std::move(relations));
  check_admissible(names, *table, ord);
  std::shared_ptr<GAlgebra> alg(new GAlgebra());
  alg->names_ = std::move(names);
  alg->mul_ = std::move(table);
  alg->order_ = std::move(ord);
  alg->roles_ = std::move(roles);
  alg->kind_ = std::move(kind);
  check_nondegenerate(alg);
  return alg;
}

AlgebraPtr GAlgebra::with_order(MonOrder ord) const {
  if (ord.nvars() != nvars()) throw InvalidArgument("ordering size does not match the number of variables");
  check_admissible(names_, *mul_, ord);
  std::shared_ptr<GAlgebra> alg(new GAlgebra(*this));
  alg->order_ = std::move(ord);
  return alg;
}

AlgebraPtr GAlgebra::with_roles(VarRoles roles) const {
  std::shared_ptr<GAlgebra> alg(new GAlgebra(*this));
  alg->roles_ = std::move(roles);
  return alg;
}

int GAlgebra::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  return -1;
}

const std::vector<Relation>& GAlgebra::relations() const { return mul_->relations(); }

bool GAlgebra::commute(int i, int j) const { return mul_->commute(i, j); }

bool GAlgebra::is_commutative() const { return mul_->is_commutative(); }

bool GAlgebra::commutative_on(std::uint64_t vars) const {
  return mul_->trivial(vars, vars);
}

bool GAlgebra::is_central(int v) const { return mul_->is_central(v); }

bool GAlgebra::monomials_commute(const Monomial& a, const Monomial& b) const {
  auto sa = a.support(), sb = b.support();
  return mul_->trivial(sa, sb) && mul_->trivial(sb, sa);
}

void GAlgebra::multiply(const Monomial& a, const Monomial& b, const Rational& c, int comp, TermList& out,
                        bool include_leading) const {
  mul_->multiply(a, b, c, comp, out, include_leading);
}

bool GAlgebra::same_ring(const GAlgebra& o) const {
  return names_ == o.names_ && (mul_ == o.mul_ || mul_->same_relations(*o.mul_));
}

bool GAlgebra::compatible(const GAlgebra& o) const { return same_ring(o) && order_ == o.order_; }

}  // namespace dmod
