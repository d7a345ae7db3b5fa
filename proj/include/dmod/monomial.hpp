#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dmod {

inline constexpr int kMaxVars = 32;

// Exponent vector with a fixed capacity. Slots past the ring's variable
// count stay zero, so arithmetic never needs the ring size.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { e_.fill(0); }
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int index, int power = 1);

  Exponent operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);

  bool is_one() const;
  int total_degree() const;
  // Bit i set iff the exponent of variable i is positive.
  std::uint64_t support() const;
  // Index of the largest / smallest variable with positive exponent, or -1.
  int max_var() const;
  int min_var() const;

  // Commutative product.
  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  bool divides(const Monomial& o) const;
  // Exact quotient; precondition: divides(o) for the call o.quotient(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const { return (support() & o.support()) == 0; }

  std::vector<int> exponents(int nvars) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(e_ == o.e_); }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace dmod
