#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

struct GBOptions {
  enum class Strategy { Normal, Slim };
  // Chain criterion and the generalized product criterion.
  bool criteria = true;
  Strategy strategy = Strategy::Normal;
  // Largest total degree allowed for a basis element; 0 disables the cap.
  int degree_cap = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Fully reduce new basis elements instead of top-reducing only.
  bool tail_reduce = true;
  // When non-empty, elements whose leading component is not listed are
  // dropped as soon as they appear.
  std::vector<int> keep_lead_components;
};

// Generators of a left ideal (rank 1) or submodule of A^rank.
class GBasis {
 public:
  GBasis() = default;
  GBasis(AlgebraPtr alg, std::vector<Poly> gens, bool reduced, int rank = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Poly>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool reduced() const { return reduced_; }
  int rank() const { return rank_; }
  const Poly& operator[](std::size_t k) const { return gens_[k]; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }
  // True when 1 is a generator.
  bool is_unit() const;

 private:
  AlgebraPtr alg_;
  std::vector<Poly> gens_;
  bool reduced_ = false;
  int rank_ = 1;
};

// Full left normal form. The ordering is the one of G's algebra; f is moved
// to it if it lives in the same ring under another ordering.
Poly normal_form(const Poly& f, const GBasis& G);
Poly normal_form(const Poly& f, const std::vector<Poly>& G);
bool reduces_to_zero(const Poly& f, const GBasis& G);

// K-linear reduction of f against the list (no monomial multiples).
struct LinReduceResult {
  Poly residue;
  std::vector<Rational> coeffs;  // f - residue = sum coeffs[i] * basis[i]
};
LinReduceResult lin_reduce(const Poly& f, const std::vector<Poly>& basis);

// Incremental echelon form over Q with transformation tracking, used to
// detect the first linear dependency in a growing list.
class LinearReducer {
 public:
  explicit LinearReducer(AlgebraPtr alg) : alg_(std::move(alg)) {}
  // Reduces f against the rows added so far. coeffs refer to the original
  // inputs in insertion order.
  LinReduceResult reduce(const Poly& f) const;
  // Adds f as the next input; returns the coefficients of a dependency
  // f - sum c_i input_i = 0 when f is dependent (nothing is added then).
  std::optional<std::vector<Rational>> add(const Poly& f);
  std::size_t inputs() const { return inputs_; }

 private:
  struct Row {
    Poly p;                            // lead coefficient 1
    std::vector<Rational> combination; // p = sum combination[i] * input_i
  };
  AlgebraPtr alg_;
  std::vector<Row> rows_;
  std::size_t inputs_ = 0;
};

// Left Groebner basis under the ordering of the generators' algebra; the
// result is reduced.
GBasis buchberger(const std::vector<Poly>& gens, const GBOptions& opt = {});
// Same, moving the generators to alg (same ring, possibly another ordering).
GBasis buchberger(const std::vector<Poly>& gens, const AlgebraPtr& alg, const GBOptions& opt = {});
GBasis reduce_gb(const GBasis& G);
// Every s-polynomial (no criteria) reduces to zero.
bool is_groebner_basis(const std::vector<Poly>& G);

// Subalgebra on the listed variables (relations must stay inside them),
// degrevlex ordering.
AlgebraPtr subalgebra(const AlgebraPtr& alg, const std::vector<int>& keep);
// Generators of <gens> intersected with the subalgebra on the remaining
// variables, as a reduced basis in `target` (default: subalgebra()).
GBasis eliminate(const std::vector<Poly>& gens, const std::vector<int>& drop, const GBOptions& opt = {},
                 AlgebraPtr target = nullptr);

// Kernel of A^k -> A/<G>, e_j -> F_j, as a reduced basis of rank k.
GBasis modulo_kernel(const std::vector<Poly>& F, const std::vector<Poly>& G, const GBOptions& opt = {});
// Syzygies of F (kernel with G empty).
GBasis syzygies(const std::vector<Poly>& F, const GBOptions& opt = {});
// a with sum a_i * F_i = target; throws when target is not in <F>.
std::vector<Poly> lift(const std::vector<Poly>& F, const Poly& target, const GBOptions& opt = {});

// Krull dimension of the leading-monomial ideal.
int lt_dimension(const GBasis& G);

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const GBOptions& opt = {});
bool ideal_contains(const GBasis& G, const std::vector<Poly>& elems);

}  // namespace dmod
