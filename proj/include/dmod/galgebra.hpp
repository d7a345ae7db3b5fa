#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/monorder.hpp"
#include "dmod/term.hpp"

namespace dmod {

namespace detail {
class MulTable;
}

// x_j x_i = x_i x_j + d for i < j; d is a commutative term list in PBW form.
struct Relation {
  int i = 0;
  int j = 0;
  TermList d;
};

// Which variables play which part. Presets fill this in; the D-module
// algorithms read it instead of guessing from names.
struct VarRoles {
  // (x, D) pairs with D x = x D + 1 (or + h^k). The first t_pairs of them
  // are (t, Dt) pairs of a Malgrange construction.
  std::vector<std::pair<int, int>> weyl_pairs;
  int t_pairs = 0;
  std::vector<int> dt;               // shift / gl Dt variables
  std::vector<int> s;                // parameters s_1..s_p
  std::vector<std::vector<int>> gl;  // gl[i][j] = index of s_ij
  int h = -1;                        // homogenizing variable
  std::vector<int> hom_weights;      // (u, v) weights of the homogenized algebra, per variable
};

class GAlgebra;
using AlgebraPtr = std::shared_ptr<const GAlgebra>;

class GAlgebra {
 public:
  // Verifies admissibility of every relation under ord and the
  // nondegeneracy condition on every triple.
  static AlgebraPtr make(std::vector<std::string> names, std::vector<Relation> relations, MonOrder ord,
                         VarRoles roles = {}, std::string kind = "custom");

  // Same variables and relations under another ordering (admissibility
  // re-checked). Shares the multiplication memo.
  AlgebraPtr with_order(MonOrder ord) const;
  AlgebraPtr with_roles(VarRoles roles) const;

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  // -1 when absent.
  int index_of(std::string_view name) const;
  const MonOrder& order() const { return order_; }
  const VarRoles& roles() const { return roles_; }
  const std::string& kind() const { return kind_; }
  const std::vector<Relation>& relations() const;

  bool commute(int i, int j) const;
  bool is_commutative() const;
  // True when every variable in the mask commutes with every other one in it.
  bool commutative_on(std::uint64_t vars) const;
  // Variables with no nonzero relation at all.
  bool is_central(int v) const;
  // Fast check: a and b commute as monomials because no noncommuting
  // variable pair straddles them.
  bool monomials_commute(const Monomial& a, const Monomial& b) const;

  // Appends c * (a * b) with component comp. With include_leading false the
  // commutative product a·b (coefficient c) is omitted, leaving only the
  // correction terms.
  void multiply(const Monomial& a, const Monomial& b, const Rational& c, int comp, TermList& out,
                bool include_leading = true) const;

  // Same variables and multiplication (orderings may differ).
  bool same_ring(const GAlgebra& o) const;
  // Same ring and same ordering.
  bool compatible(const GAlgebra& o) const;

 private:
  GAlgebra() = default;
  std::vector<std::string> names_;
  std::shared_ptr<const detail::MulTable> mul_;
  MonOrder order_;
  VarRoles roles_;
  std::string kind_;
};

inline AlgebraPtr make_galgebra(std::vector<std::string> names, std::vector<Relation> relations, MonOrder ord) {
  return GAlgebra::make(std::move(names), std::move(relations), std::move(ord));
}

}  // namespace dmod
