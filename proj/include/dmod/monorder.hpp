#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmod/monomial.hpp"

namespace dmod {

// One comparison stage of a monomial ordering. Stages are applied in
// sequence until one of them separates the monomials.
struct OrderStage {
  enum class Kind { Weight, RevLex, Lex };
  Kind kind = Kind::Weight;
  std::vector<std::int64_t> weights;  // Weight: one entry per variable
  std::vector<int> vars;              // RevLex / Lex: variables in index order

  bool operator==(const OrderStage&) const = default;
};

// How components of free-module elements enter the comparison.
struct ModuleRule {
  enum class Kind { TermOverPosition, PositionOverTerm };
  Kind kind = Kind::TermOverPosition;
  // PositionOverTerm: components listed here dominate everything else, in
  // list order. Unlisted components compare term-over-position among
  // themselves and lie below every listed one.
  std::vector<int> priority;

  bool operator==(const ModuleRule&) const = default;
};

class MonOrder {
 public:
  enum class Kind { DegRevLex, Lex, WeightFirst, Block, Custom };

  MonOrder() = default;

  static MonOrder degrevlex(int nvars);
  static MonOrder lex(int nvars);
  // Weighted degree first, then the tie-break ordering.
  static MonOrder weight_first(std::vector<std::int64_t> weights, const MonOrder& tie);
  // Weight 1 on the eliminated variables, degrevlex tie-break.
  static MonOrder elimination(int nvars, std::span<const int> eliminated);
  // Product ordering: each block's ordering acts on the listed variables
  // (given in the block's local numbering).
  static MonOrder block(int nvars, const std::vector<std::pair<std::vector<int>, MonOrder>>& blocks);
  static MonOrder from_stages(int nvars, std::vector<OrderStage> stages, std::string description);

  MonOrder with_module_rule(ModuleRule rule) const;
  // Position-over-term with the given components first.
  MonOrder with_priority(std::vector<int> components) const;

  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  const std::vector<OrderStage>& stages() const { return stages_; }
  const ModuleRule& module_rule() const { return module_; }
  const std::string& description() const { return description_; }

  // -1, 0, 1 for less, equal, greater.
  int compare(const Monomial& a, const Monomial& b) const;
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // Every variable is greater than 1.
  bool is_global() const;
  // Weights used for sugar degrees: the first stage if it is a strictly
  // positive weight stage, otherwise all ones.
  std::vector<std::int64_t> grading() const;

  bool operator==(const MonOrder& o) const {
    return nvars_ == o.nvars_ && stages_ == o.stages_ && module_ == o.module_;
  }

 private:
  int nvars_ = 0;
  Kind kind_ = Kind::Custom;
  bool plain_degrevlex_ = false;
  std::vector<OrderStage> stages_;
  ModuleRule module_;
  std::string description_;
};

enum class Ordering { Less, Equal, Greater };

// Compares two exponent vectors of the ordering's length.
Ordering cmp_monomials(std::span<const int> a, std::span<const int> b, const MonOrder& ord);

}  // namespace dmod
