#pragma once

#include <cstdint>
#include <vector>

#include "dmod/groebner.hpp"

namespace dmod::detail {

// 2 bits per variable: exponent >= 1, exponent >= 2.
std::uint64_t short_exponent(const Monomial& m);
std::int64_t graded_degree(const Monomial& m, const std::vector<std::int64_t>& w);
// Terms weighted by degree and coefficient size.
std::size_t weighted_length(const Poly& p);

class Reducer {
 public:
  Reducer(AlgebraPtr alg, bool slim) : alg_(std::move(alg)), slim_(slim), grading_(alg_->order().grading()) {}

  // g must be monic.
  int add(const Poly& g, std::int64_t sugar = 0);
  void set_active(int id, bool active) { entries_[static_cast<std::size_t>(id)].active = active; }
  bool active(int id) const { return entries_[static_cast<std::size_t>(id)].active; }
  const Poly& poly(int id) const { return entries_[static_cast<std::size_t>(id)].p; }
  std::int64_t sugar(int id) const { return entries_[static_cast<std::size_t>(id)].sugar; }
  std::size_t weight(int id) const { return entries_[static_cast<std::size_t>(id)].weight; }
  int size() const { return static_cast<int>(entries_.size()); }

  // Reduces f against the active entries. With full false only the leading
  // term is reduced. sugar, when given, is raised to cover the multiples used.
  Poly reduce(const Poly& f, bool full, std::int64_t* sugar = nullptr) const;

 private:
  struct Entry {
    Poly p;
    Monomial lm;
    int comp;
    std::uint64_t sev;
    std::size_t weight;
    std::int64_t sugar;
    bool active;
  };
  const Entry* find(const Monomial& m, int comp) const;

  AlgebraPtr alg_;
  bool slim_;
  std::vector<std::int64_t> grading_;
  std::vector<Entry> entries_;
};

}  // namespace dmod::detail
