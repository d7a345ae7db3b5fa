#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmod/groebner.hpp"
#include "dmod/unipoly.hpp"

namespace dmod {

// Inputs f are elements of a commutative algebra whose variable names are
// the x variables of every derived Weyl-type algebra.

struct DmodOptions {
  GBOptions gb;
  // Largest degree tried by principal_intersect.
  int intersect_cap = 60;
  // Largest operator degree tried by operator_search.
  int search_cap = 12;
};

struct SParamAnnihilator {
  AlgebraPtr algebra;     // weyl_s(x, p) or weyl_gl(x, r)
  GBasis gens;            // reduced Groebner basis
  std::vector<Poly> f;    // f_1..f_p in the input ring
};

struct BernsteinData {
  BFunction b;
  std::optional<Poly> op;
  std::string method;
};

// ---- helpers on input polynomials

// Rejects non-commutative input rings and variable names that clash with the
// derived algebras (s.., t.., h, D.., s_i_j).
void check_input_ring(const GAlgebra& ring);
Poly partial(const Poly& f, int var);
// deg of f with weight u on the variables.
std::int64_t weighted_degree(const Poly& f, const std::vector<int>& u);
// Substitutes values for central variables (by index of p's algebra) and
// moves the result into target by names.
Poly specialize(const Poly& p, const std::vector<std::pair<int, Rational>>& values, const AlgebraPtr& target);
// p with the central variable `var` replaced by var + c.
Poly shift_parameter(const Poly& p, int var, const Rational& c);
// b(sigma) computed with star products.
Poly evaluate_at(const UniPoly& b, const Poly& sigma);

// ---- annihilators of f^s

// t_j - f_j and sum_j (df_j/dx_i) Dt_j + D_i in weyl_malgrange(p, x).
std::vector<Poly> malgrange_ideal(const std::vector<Poly>& fs);
// The generators s_j + f_j Dt_j, D_i + sum_k (df_k/dx_i) Dt_k in weyl_shift(x, p).
std::vector<Poly> bm_generators(const std::vector<Poly>& fs);
SParamAnnihilator sannfs_bm(const std::vector<Poly>& fs, const DmodOptions& opt = {});
// Generators of order at most one from the syzygies of (f, s df/dx_1, ..).
SParamAnnihilator sannfs_log(const Poly& f, const DmodOptions& opt = {});
// Generators of order at most k; k = 1 agrees with sannfs_log.
SParamAnnihilator ann_upto_k(const Poly& f, int k, const DmodOptions& opt = {});

// A multiset of non-zero exponent vectors summing to beta.
struct Partition {
  std::vector<std::vector<int>> parts;  // sorted descending lexicographically
  std::vector<int> beta;
  int length() const { return static_cast<int>(parts.size()); }
  // prod over distinct parts of (multiplicity)!
  Integer multiplicity_factorial() const;
};
std::vector<Partition> partitions(const std::vector<int>& beta, int length);
// g with d^beta f^s = g * f^(s - |beta|), in the commutative ring (x, s).
Poly formula_fs(const Poly& f, const std::vector<int>& beta, const AlgebraPtr& xs_ring);

// ---- initial ideals and b-functions

// Groebner basis of ini_(-w,w)(I) in the algebra of gens; w, u, v are indexed
// by its Weyl pairs.
GBasis initial_ideal(const std::vector<Poly>& gens, const std::vector<std::int64_t>& w, const std::vector<int>& u,
                     const std::vector<int>& v, const DmodOptions& opt = {});
// Monic generator of J intersected with K[sigma] (J a Groebner basis). The
// variable of the result is "s".
UniPoly principal_intersect(const GBasis& J, const Poly& sigma, const DmodOptions& opt = {});

// Bernstein-Sato polynomial via the initial ideal of the Malgrange ideal;
// u defaults to all ones.
BFunction bfct(const Poly& f, std::vector<int> u = {}, const DmodOptions& opt = {});
// Bernstein-Sato polynomial via (Ann(f^s) + <f>) intersected with K[s].
BFunction bfct_ann(const Poly& f, const DmodOptions& opt = {});
BFunction bfct_ann(const SParamAnnihilator& ann, const DmodOptions& opt = {});
// b_{I,w} for a holonomic ideal of a Weyl algebra, no sign transform.
BFunction bfct_ideal(const std::vector<Poly>& gens, const std::vector<std::int64_t>& w, const DmodOptions& opt = {});

// alpha is tested as a root of b_f(-s).
bool check_root(const SParamAnnihilator& ann, const Rational& alpha, const DmodOptions& opt = {});
int root_multiplicity(const SParamAnnihilator& ann, const Rational& alpha, const DmodOptions& opt = {});
// Smallest integer root of b_f(s).
int min_integer_root(const SParamAnnihilator& ann, const DmodOptions& opt = {});

// ---- annihilators of functions

// Ann_{D_n}(g) for a polynomial g, in weyl(x).
GBasis ann_poly(const Poly& g, const DmodOptions& opt = {});
// Ann_{D_n}(f^alpha); throws UnsupportedBranch in the integer window that
// needs the syzygy branch.
GBasis ann_falpha(const Poly& f, const Rational& alpha, const DmodOptions& opt = {});
// Ann_{D_n}(g / f).
GBasis ann_rat(const Poly& g, const Poly& f, const DmodOptions& opt = {});

// ---- Bernstein operators (all satisfy P * f - b in Ann(f^s))

Poly operator_modulo(const SParamAnnihilator& ann, const UniPoly& b, const DmodOptions& opt = {});
// Groebner basis of Ann(f^(s+1)).
GBasis ann_shifted(const SParamAnnihilator& ann, const DmodOptions& opt = {});
// Normal form of a B-operator against Ann(f^(s+1)).
Poly bernstein_operator_nf(const Poly& P, const SParamAnnihilator& ann, const DmodOptions& opt = {});
Poly operator_search(const SParamAnnihilator& ann, const UniPoly& b, const DmodOptions& opt = {});
// The first cofactor of b in <f, Ann(f^s)>; expensive in general. With
// canonical set, the result is passed through bernstein_operator_nf.
Poly operator_lift(const SParamAnnihilator& ann, const UniPoly& b, bool canonical = true,
                   const DmodOptions& opt = {});
// P * f - b reduces to zero against Ann(f^s).
bool is_bernstein_operator(const Poly& P, const SParamAnnihilator& ann, const UniPoly& b);

// ---- several polynomials and varieties

// (Ann(f_1^s_1 .. f_p^s_p) + <f_1 .. f_p>) intersected with K[s_1..s_p].
GBasis bs_ideal(const std::vector<Poly>& fs, const DmodOptions& opt = {});
// Ann of f^s in D_n<S> via elimination of Dt in D_n<Dt, S>.
SParamAnnihilator sannfs_var(const std::vector<Poly>& fs, const DmodOptions& opt = {});
// n minus the dimension of <f_1..f_r>.
int variety_codim(const std::vector<Poly>& fs);
// b_f(s_11 + .. + s_rr). With codim set, returns b_Z(s) = b_f(s - codim + 1).
BFunction bfct_var(const std::vector<Poly>& fs, std::optional<int> codim = std::nullopt,
                   const DmodOptions& opt = {});
BFunction bfct_var(const SParamAnnihilator& ann, const DmodOptions& opt = {});

// ---- the module action on K[x, s, 1/f] f^s

// P . f^s = numerator / prod f_j^denominator[j] * f^s, numerator in the
// commutative ring (x, s_1..s_p).
struct FsAction {
  Poly numerator;
  std::vector<int> denominator;
  bool is_zero() const { return numerator.is_zero(); }
};
// The commutative ring (x.., s..) used by apply_to_fs for p parameters.
AlgebraPtr action_ring(const GAlgebra& input_ring, int p);
// P in weyl(x), weyl_s(x, p) or weyl_gl(x, r).
FsAction apply_to_fs(const Poly& P, const std::vector<Poly>& fs);
// P in weyl(x) applied to f^alpha.
FsAction apply_to_falpha(const Poly& P, const Poly& f, const Rational& alpha);

}  // namespace dmod
