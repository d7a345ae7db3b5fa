#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "dmod/galgebra.hpp"

namespace dmod::detail {

// Relations of a Lie-type G-algebra and the rewriting multiplication.
// Variables split into central ones and blocks closed under the relations;
// a product of monomials factors into independent per-block products.
class MulTable {
 public:
  MulTable(int nvars, std::vector<Relation> relations);

  int nvars() const { return n_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool commute(int i, int j) const;
  bool same_relations(const MulTable& o) const;
  bool is_central(int v) const { return !((lower_[v] | upper_[v]) != 0); }
  bool is_commutative() const { return relations_.empty(); }
  bool trivial(std::uint64_t sa, std::uint64_t sb) const {
    while (sa) {
      int j = __builtin_ctzll(sa);
      if (lower_[j] & sb) return false;
      sa &= sa - 1;
    }
    return true;
  }

  void multiply(const Monomial& a, const Monomial& b, const Rational& c, int comp, TermList& out,
                bool include_leading) const;

 private:
  using Acc = std::unordered_map<Monomial, Rational, MonomialHash>;
  using Shared = std::shared_ptr<const TermList>;

  // x_j^a * x_i^b for j > i, leading term first.
  Shared pair_power(int j, int a, int i, int b) const;
  void mul_generic(const Monomial& A, const Monomial& B, const Rational& c, Acc& out) const;
  void mul_var_pow(const Monomial& A, int i, int b, const Rational& c, Acc& out) const;
  // Block product with the leading term first.
  TermList block_product(int block, const Monomial& a, const Monomial& b) const;
  static TermList drain(Acc& acc, const Monomial& leading);

  int n_;
  std::vector<Relation> relations_;
  std::vector<std::vector<const TermList*>> d_;  // d_[j][i]
  std::vector<std::uint64_t> lower_;              // i < j with d_ij != 0
  std::vector<std::uint64_t> upper_;
  std::vector<std::uint64_t> blocks_;
  std::vector<std::vector<int>> block_vars_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, Shared> memo_;
};

}  // namespace dmod::detail
