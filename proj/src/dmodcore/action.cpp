#include <algorithm>

#include "dmod/dmodcore.hpp"
#include "dmod/errors.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"

namespace dmod {

AlgebraPtr action_ring(const GAlgebra& input_ring, int p) {
  auto names = input_ring.names();
  for (const auto& s : parameter_names("s", p)) names.push_back(s);
  return commutative(names);
}

namespace {

struct VarAction {
  enum class Kind { X, D, S } kind;
  int a = 0;  // x / D: index in the action ring; S: i
  int b = 0;  // S: j
};

class FsActor {
 public:
  FsActor(const AlgebraPtr& alg, const std::vector<Poly>& fs) {
    if (fs.empty()) throw InvalidArgument("apply_to_fs needs at least one polynomial");
    const GAlgebra& in = *fs.front().algebra();
    check_input_ring(in);
    p_ = static_cast<int>(fs.size());
    ring_ = action_ring(in, p_);
    n_ = in.nvars();
    for (const auto& f : fs) {
      if (f.is_zero()) throw InvalidArgument("apply_to_fs needs non-zero polynomials");
      f_.push_back(transfer(f, ring_));
    }
    for (int j = 0; j < p_; ++j) {
      std::vector<Poly> row;
      for (int i = 0; i < n_; ++i) row.push_back(partial(f_[static_cast<std::size_t>(j)], i));
      df_.push_back(std::move(row));
    }
    const auto& roles = alg->roles();
    const auto params = parameter_names("s", p_);
    for (int v = 0; v < alg->nvars(); ++v) {
      const std::string& name = alg->name(v);
      int x = in.index_of(name);
      if (x >= 0) {
        vars_.push_back({VarAction::Kind::X, x, 0});
        continue;
      }
      if (name.size() > 1 && name[0] == 'D' && (x = in.index_of(name.substr(1))) >= 0) {
        vars_.push_back({VarAction::Kind::D, x, 0});
        continue;
      }
      bool found = false;
      for (std::size_t i = 0; i < roles.gl.size() && !found; ++i)
        for (std::size_t j = 0; j < roles.gl[i].size(); ++j)
          if (roles.gl[i][j] == v) {
            if (static_cast<int>(roles.gl.size()) != p_) throw InvalidArgument("gl rank differs from the number of polynomials");
            vars_.push_back({VarAction::Kind::S, static_cast<int>(i), static_cast<int>(j)});
            found = true;
            break;
          }
      if (!found) {
        auto it = std::find(params.begin(), params.end(), name);
        if (it == params.end()) throw InvalidArgument("variable '" + name + "' has no action on f^s");
        int j = static_cast<int>(it - params.begin());
        vars_.push_back({VarAction::Kind::S, j, j});
      }
    }
  }

  FsAction apply(const Poly& P) const {
    FsAction total{Poly(ring_), std::vector<int>(static_cast<std::size_t>(p_), 0)};
    for (const auto& t : P.terms()) {
      FsAction cur{Poly::constant(ring_, t.coef), std::vector<int>(static_cast<std::size_t>(p_), 0)};
      for (int v = static_cast<int>(vars_.size()) - 1; v >= 0; --v)
        for (int e = 0; e < t.mono[v]; ++e) step(vars_[static_cast<std::size_t>(v)], cur);
      add(total, cur);
    }
    return total;
  }

  const AlgebraPtr& ring() const { return ring_; }
  int n() const { return n_; }

 private:
  Poly s(int j) const { return Poly::variable(ring_, n_ + j); }

  void step(const VarAction& va, FsAction& st) const {
    switch (va.kind) {
      case VarAction::Kind::X:
        st.numerator = st.numerator * Poly::variable(ring_, va.a);
        return;
      case VarAction::Kind::D: {
        std::vector<int> touched;
        for (int j = 0; j < p_; ++j)
          if (!df_[static_cast<std::size_t>(j)][static_cast<std::size_t>(va.a)].is_zero()) touched.push_back(j);
        Poly prod = Poly::constant(ring_, 1);
        for (int j : touched) prod = prod * f_[static_cast<std::size_t>(j)];
        Poly out = partial(st.numerator, va.a) * prod;
        for (int j : touched) {
          Poly others = Poly::constant(ring_, 1);
          for (int l : touched)
            if (l != j) others = others * f_[static_cast<std::size_t>(l)];
          Poly factor = s(j) - Poly::constant(ring_, st.denominator[static_cast<std::size_t>(j)]);
          out += st.numerator * factor * df_[static_cast<std::size_t>(j)][static_cast<std::size_t>(va.a)] * others;
        }
        for (int j : touched) ++st.denominator[static_cast<std::size_t>(j)];
        st.numerator = std::move(out);
        return;
      }
      case VarAction::Kind::S: {
        if (va.a == va.b) {
          st.numerator = st.numerator * s(va.a);
          return;
        }
        // s_ij . G(s) f^s = s_i G(s + e_j - e_i) (f_j / f_i) f^s
        Poly g = shift_parameter(st.numerator, n_ + va.b, 1);
        g = shift_parameter(g, n_ + va.a, -1);
        st.numerator = s(va.a) * g * f_[static_cast<std::size_t>(va.b)];
        ++st.denominator[static_cast<std::size_t>(va.a)];
        return;
      }
    }
  }

  void add(FsAction& acc, const FsAction& x) const {
    if (x.numerator.is_zero()) return;
    Poly a = acc.numerator, b = x.numerator;
    for (int j = 0; j < p_; ++j) {
      const std::size_t k = static_cast<std::size_t>(j);
      int target = std::max(acc.denominator[k], x.denominator[k]);
      for (int e = acc.denominator[k]; e < target; ++e) a = a * f_[k];
      for (int e = x.denominator[k]; e < target; ++e) b = b * f_[k];
      acc.denominator[k] = target;
    }
    acc.numerator = a + b;
  }

  AlgebraPtr ring_;
  int n_ = 0, p_ = 0;
  std::vector<Poly> f_;
  std::vector<std::vector<Poly>> df_;
  std::vector<VarAction> vars_;
};

}  // namespace

FsAction apply_to_fs(const Poly& P, const std::vector<Poly>& fs) { return FsActor(P.algebra(), fs).apply(P); }

FsAction apply_to_falpha(const Poly& P, const Poly& f, const Rational& alpha) {
  FsActor actor(P.algebra(), {f});
  FsAction r = actor.apply(P);
  r.numerator = specialize(r.numerator, {{actor.n(), alpha}}, actor.ring());
  return r;
}

}  // namespace dmod
