#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmod/galgebra.hpp"

namespace dmod {

// Element of a G-algebra (all components 0) or of a free module over it.
// Terms are strictly descending in the algebra's ordering.
class Poly {
 public:
  explicit Poly(AlgebraPtr alg) : alg_(std::move(alg)) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Poly from_terms(AlgebraPtr alg, TermList terms);
  // Caller guarantees canonical form.
  static Poly from_sorted(AlgebraPtr alg, TermList terms);
  static Poly constant(AlgebraPtr alg, const Rational& c, int comp = 0);
  static Poly variable(AlgebraPtr alg, int index);
  static Poly variable(AlgebraPtr alg, std::string_view name);
  static Poly monomial(AlgebraPtr alg, const Monomial& m, const Rational& c = 1, int comp = 0);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const;
  const Monomial& lm() const { return lead().mono; }
  const Rational& lc() const { return lead().coef; }
  int lcomp() const { return lead().comp; }
  bool is_constant() const;
  // Maximal total degree of a term; -1 for zero.
  int degree() const;
  int max_component() const;
  // Union of the supports of all terms.
  std::uint64_t support() const;

  Poly monic() const;
  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Rational& c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Same ring under another ordering; terms are re-sorted.
  Poly reorder(AlgebraPtr alg) const;
  // Terms of component k, moved to component 0.
  Poly component(int k) const;
  Poly with_component(int k) const;
  Poly shift_components(int offset) const;

 private:
  AlgebraPtr alg_;
  TermList terms_;
};

// Product in the algebra; a must have all components 0, the result carries
// the components of b.
Poly star_mul(const Poly& a, const Poly& b);
inline Poly operator*(const Poly& a, const Poly& b) { return star_mul(a, b); }
// c * m * g
Poly mul_term_left(const Monomial& m, const Rational& c, const Poly& g);
Poly pow(const Poly& a, unsigned e);

// ab - ba, computed from the correction terms only (the commutative
// products cancel for Lie-type relations).
Poly lie_bracket(const Poly& a, const Poly& b);
// ab - k ba
Poly skew_bracket(const Poly& a, const Poly& b, const Rational& k);

// Singular-style rendering, e.g. "2*x*y*Dx-3*x^2*Dy". Module elements are
// rendered as "[p1, p2, ...]" over components 0..rank-1.
std::string to_string(const Poly& p);
std::string to_string(const Poly& p, int rank);
std::string monomial_string(const GAlgebra& alg, const Monomial& m);

void require_same_algebra(const Poly& a, const Poly& b);

// Merge-adds two canonical term lists: a + scale * b.
TermList merge_terms(const MonOrder& ord, const TermList& a, const TermList& b, const Rational& scale);

}  // namespace dmod
