#include "dmod/monomial.hpp"

#include <limits>

#include "dmod/errors.hpp"

namespace dmod {

namespace {
constexpr int kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw InvalidArgument("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int value) {
  if (i < 0 || i >= kMaxVars) throw InvalidArgument("variable index out of range");
  if (value < 0 || value > kMaxExponent) throw InvalidArgument("exponent out of range");
  e_[static_cast<std::size_t>(i)] = static_cast<Exponent>(value);
}

bool Monomial::is_one() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (int i = 0; i < kMaxVars; ++i) s |= std::uint64_t{e_[static_cast<std::size_t>(i)] != 0} << i;
  return s;
}

int Monomial::max_var() const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (e_[static_cast<std::size_t>(i)]) return i;
  return -1;
}

int Monomial::min_var() const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[static_cast<std::size_t>(i)]) return i;
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  unsigned over = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned v = unsigned{e_[i]} + unsigned{o.e_[i]};
    over |= v;
    e_[i] = static_cast<Exponent>(v);
  }
  if (over > kMaxExponent) throw InvalidArgument("exponent overflow");
  return *this;
}

bool Monomial::divides(const Monomial& o) const {
  bool ok = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) ok &= e_[i] <= o.e_[i];
  return ok;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (o.e_[i] > e_[i]) throw InvalidArgument("monomial quotient is not exact");
    r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
  return r;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> v(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) v[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)];
  return v;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : e_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace dmod
