#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmod/rational.hpp"

namespace dmod {

// Dense univariate polynomial over Q; coeffs[k] multiplies var^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "s");
  static UniPoly constant(const Rational& c, std::string var = "s");
  // var + c
  static UniPoly linear(const Rational& c, std::string var = "s");
  static UniPoly monomial(int degree, const Rational& c = 1, std::string var = "s");

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const;

  UniPoly monic() const;
  Rational eval(const Rational& x) const;
  // p(a*var + b)
  UniPoly compose_linear(const Rational& a, const Rational& b) const;
  UniPoly pow(unsigned e) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& c) const;
  // Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
  std::string var_ = "s";
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

// A monic univariate polynomial with its rational roots split off.
struct BFunction {
  UniPoly poly;                     // monic
  std::map<Rational, int> roots;    // root -> multiplicity, ascending by value
  UniPoly remainder;                // monic, no rational roots

  int degree() const { return poly.degree(); }
  // remainder * prod (var - r)^m
  UniPoly reconstruct() const;
  std::string roots_string() const;
  bool operator==(const BFunction& o) const { return poly == o.poly; }
};

BFunction unipoly_rational_roots(const UniPoly& p);

// Monic (-1)^deg b(-s-1).
UniPoly unipoly_bs_transform(const UniPoly& b);

// s(s-1)...(s-k+1)/k!
UniPoly symbolic_binomial(int k, std::string var = "s");

// Checks the hypersurface conventions: remainder 1, every root negative.
void require_bernstein_shape(const BFunction& b);

}  // namespace dmod
