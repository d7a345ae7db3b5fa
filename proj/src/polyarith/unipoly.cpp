#include "dmod/unipoly.hpp"

#include <algorithm>
#include <set>

#include "dmod/errors.hpp"

namespace dmod {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::linear(const Rational& c, std::string var) { return UniPoly({c, Rational(1)}, std::move(var)); }

UniPoly UniPoly::monomial(int degree, const Rational& c, std::string var) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v), std::move(var));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  UniPoly p = *this;
  for (auto& c : p.c_) c /= lc;
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  UniPoly lin({b, a}, var_);
  UniPoly r({}, var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPoly::constant(*it, var_);
  return r;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::constant(1, var_);
  UniPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly({}, var_);
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::operator*(const Rational& c) const {
  UniPoly p = *this;
  for (auto& x : p.c_) x *= c;
  p.trim();
  return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  int qd = degree() - dd;
  std::vector<Rational> q(qd >= 0 ? static_cast<std::size_t>(qd) + 1 : 0);
  for (int k = qd; k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + dd)] / d.leading();
    q[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= c * d.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q), var_), UniPoly(std::move(r), var_)};
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var_ : var_ + "^" + std::to_string(k));
    std::string coef;
    if (mono.empty()) coef = a.get_str();
    else if (a != 1) coef = a.get_str() + "*";
    if (out.empty()) out = (sgn(c) < 0 ? "-" : "") + coef + mono;
    else out += (sgn(c) < 0 ? "-" : "+") + coef + mono;
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Integer factorization: trial division, then Pollard-Brent on the cofactor.
void factor_into(Integer n, std::map<Integer, int>& out);

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 20000; ++p) {
    if (Integer(p) * p > n) break;
    while (n % p == 0) {
      out[Integer(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n]++;
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, int> f;
  factor_into(n, f);
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : f) {
    std::size_t base = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Primitive integer coefficient vector of a nonzero rational polynomial.
std::vector<Integer> integer_coeffs(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> a;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    a.push_back(v);
    g = gcd(g, v);
  }
  for (auto& v : a) v /= g;
  return a;
}

}  // namespace

BFunction unipoly_rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  BFunction out;
  out.poly = p.monic();
  UniPoly rest = out.poly;
  // Root 0 first, then candidate roots of the square-free part.
  while (rest.degree() > 0 && sgn(rest.coeff(0)) == 0) {
    out.roots[Rational(0)]++;
    rest = rest.divmod(UniPoly::monomial(1, 1, p.var())).first;
  }
  if (rest.degree() > 0) {
    UniPoly deriv;
    {
      std::vector<Rational> d;
      for (int k = 1; k <= rest.degree(); ++k) d.push_back(rest.coeff(k) * k);
      deriv = UniPoly(std::move(d), p.var());
    }
    UniPoly sqfree = rest.divmod(gcd(rest, deriv)).first;
    auto a = integer_coeffs(sqfree);
    Integer p1 = 0, m1 = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      p1 += a[k];
      m1 += (k % 2 ? -a[k] : a[k]);
    }
    auto nums = divisors(a.front());
    auto dens = divisors(a.back());
    std::set<Rational> tried;
    for (const auto& q : dens) {
      for (const auto& n : nums) {
        for (int sign : {-1, 1}) {
          Integer num = sign * n;
          Rational r(num, q);
          r.canonicalize();
          if (!tried.insert(r).second) continue;
          // (q - n) | P(1) and (q + n) | P(-1) for a root n/q in lowest terms.
          Integer rn = r.get_num(), rd = r.get_den();
          Integer t1 = rd - rn, t2 = rd + rn;
          if (t1 != 0 && p1 % t1 != 0) continue;
          if (t2 != 0 && m1 % t2 != 0) continue;
          if (sgn(sqfree.eval(r)) != 0) continue;
          UniPoly lin = UniPoly::linear(-r, p.var());
          while (true) {
            auto [qq, rr] = rest.divmod(lin);
            if (!rr.is_zero()) break;
            rest = qq;
            out.roots[r]++;
          }
        }
      }
    }
  }
  out.remainder = rest.monic();
  return out;
}

UniPoly BFunction::reconstruct() const {
  UniPoly r = remainder;
  for (const auto& [root, m] : roots) r = r * UniPoly::linear(-root, poly.var()).pow(static_cast<unsigned>(m));
  return r;
}

std::string BFunction::roots_string() const {
  std::string out;
  for (const auto& [root, m] : roots) {
    if (!out.empty()) out += " ";
    out += "(" + root.get_str() + ", " + std::to_string(m) + ")";
  }
  return out;
}

UniPoly unipoly_bs_transform(const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("b-function transform of the zero polynomial");
  UniPoly r = b.compose_linear(-1, -1);
  if (b.degree() % 2) r = -r;
  return r.monic();
}

UniPoly symbolic_binomial(int k, std::string var) {
  if (k < 0) throw InvalidArgument("negative binomial index");
  UniPoly r = UniPoly::constant(1, var);
  for (int j = 0; j < k; ++j) r = r * UniPoly::linear(-j, var) * Rational(1, j + 1);
  return r;
}

void require_bernstein_shape(const BFunction& b) {
  if (b.remainder.degree() != 0)
    throw ComputationError("b-function has a factor without rational roots: " + b.remainder.to_string());
  for (const auto& [root, m] : b.roots)
    if (sgn(root) >= 0) throw ComputationError("b-function has a non-negative root " + root.get_str());
}

}  // namespace dmod
