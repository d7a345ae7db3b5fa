#include "dmod/presets.hpp"

#include "dmod/errors.hpp"

namespace dmod {

namespace {

Term unit_term() { return {Monomial(), Rational(1), 0}; }

Term var_term(int v, const Rational& c = 1) { return {Monomial::variable(v), c, 0}; }

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void check_count(int n) {
  if (n < 0) throw InvalidArgument("negative variable count");
}

}  // namespace

std::vector<std::string> default_names(int n) {
  check_count(n);
  if (n <= 3) {
    std::vector<std::string> base{"x", "y", "z"};
    return {base.begin(), base.begin() + n};
  }
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> derivation_names(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back("D" + x);
  return out;
}

std::vector<std::string> parameter_names(const std::string& stem, int p) {
  check_count(p);
  if (p == 1) return {stem};
  std::vector<std::string> out;
  for (int j = 1; j <= p; ++j) out.push_back(stem + std::to_string(j));
  return out;
}

std::string gl_name(int i, int j, int r) {
  if (r <= 9) return "s" + std::to_string(i + 1) + std::to_string(j + 1);
  return "s_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

AlgebraPtr weyl(const std::vector<std::string>& xs) {
  const int n = static_cast<int>(xs.size());
  std::vector<Relation> rels;
  VarRoles roles;
  for (int i = 0; i < n; ++i) {
    rels.push_back({i, n + i, {unit_term()}});
    roles.weyl_pairs.push_back({i, n + i});
  }
  return GAlgebra::make(concat({xs, derivation_names(xs)}), std::move(rels), MonOrder::degrevlex(2 * n),
                        std::move(roles), "weyl");
}

AlgebraPtr weyl(int n) { return weyl(default_names(n)); }

AlgebraPtr weyl_malgrange(int p, const std::vector<std::string>& xs) {
  auto ts = parameter_names("t", p);
  std::vector<std::string> all = concat({ts, xs});
  auto alg = weyl(all);
  VarRoles roles = alg->roles();
  roles.t_pairs = p;
  return alg->with_roles(std::move(roles));
}

AlgebraPtr weyl_s(const std::vector<std::string>& xs, int p) {
  const int n = static_cast<int>(xs.size());
  std::vector<Relation> rels;
  VarRoles roles;
  for (int i = 0; i < n; ++i) {
    rels.push_back({i, n + i, {unit_term()}});
    roles.weyl_pairs.push_back({i, n + i});
  }
  for (int j = 0; j < p; ++j) roles.s.push_back(2 * n + j);
  auto names = concat({xs, derivation_names(xs), parameter_names("s", p)});
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(2 * n + p), std::move(roles),
                        "weyl_s");
}

AlgebraPtr weyl_shift(const std::vector<std::string>& xs, int p) {
  const int n = static_cast<int>(xs.size());
  std::vector<Relation> rels;
  VarRoles roles;
  for (int i = 0; i < n; ++i) {
    rels.push_back({i, n + i, {unit_term()}});
    roles.weyl_pairs.push_back({i, n + i});
  }
  for (int j = 0; j < p; ++j) {
    int dt = 2 * n + j, s = 2 * n + p + j;
    rels.push_back({dt, s, {var_term(dt)}});
    roles.dt.push_back(dt);
    roles.s.push_back(s);
  }
  auto names = concat({xs, derivation_names(xs), parameter_names("Dt", p), parameter_names("s", p)});
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(2 * n + 2 * p), std::move(roles),
                        "weyl_shift");
}

AlgebraPtr weyl_homog(const AlgebraPtr& base, const std::vector<int>& u, const std::vector<int>& v) {
  const auto& pairs = base->roles().weyl_pairs;
  const int m = static_cast<int>(pairs.size());
  if (static_cast<int>(u.size()) != m || static_cast<int>(v.size()) != m)
    throw InvalidArgument("homogenization weights need one entry per Weyl pair");
  for (int k = 0; k < m; ++k)
    if (u[static_cast<std::size_t>(k)] <= 0 || v[static_cast<std::size_t>(k)] <= 0)
      throw InvalidArgument("homogenization weights must be strictly positive");
  if (static_cast<int>(base->relations().size()) != m || 2 * m != base->nvars())
    throw InvalidArgument("weighted homogenization needs a Weyl algebra");
  const int n = base->nvars();
  const int h = n;
  std::vector<Relation> rels;
  VarRoles roles = base->roles();
  roles.h = h;
  roles.hom_weights.assign(static_cast<std::size_t>(n + 1), 1);
  for (int k = 0; k < m; ++k) {
    auto [x, d] = pairs[static_cast<std::size_t>(k)];
    int e = u[static_cast<std::size_t>(k)] + v[static_cast<std::size_t>(k)];
    rels.push_back({x, d, {{Monomial::variable(h, e), Rational(1), 0}}});
    roles.hom_weights[static_cast<std::size_t>(x)] = u[static_cast<std::size_t>(k)];
    roles.hom_weights[static_cast<std::size_t>(d)] = v[static_cast<std::size_t>(k)];
  }
  std::vector<std::int64_t> w(roles.hom_weights.begin(), roles.hom_weights.end());
  std::vector<int> all(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) all[static_cast<std::size_t>(i)] = i;
  OrderStage ws{OrderStage::Kind::Weight, w, {}};
  OrderStage rl{OrderStage::Kind::RevLex, {}, all};
  MonOrder ord = MonOrder::from_stages(n + 1, {ws, rl}, "homog");
  auto names = base->names();
  names.push_back("h");
  return GAlgebra::make(std::move(names), std::move(rels), std::move(ord), std::move(roles), "weyl_homog");
}

AlgebraPtr weyl_homog(int n, const std::vector<int>& u, const std::vector<int>& v) {
  return weyl_homog(weyl(n), u, v);
}

namespace {

// Relations among the s_ij of gl_r, laid out from index `first`.
void add_gl(int first, int r, std::vector<Relation>& rels, VarRoles& roles, std::vector<std::string>& names) {
  auto idx = [first, r](int i, int j) { return first + i * r + j; };
  roles.gl.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      roles.gl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx(i, j);
      names.push_back(gl_name(i, j, r));
    }
  for (int i = 0; i < r; ++i) roles.s.push_back(idx(i, i));
  // a = s_ij < b = s_kl: s_kl s_ij = s_ij s_kl + [s_kl, s_ij],
  // [s_kl, s_ij] = d_li s_kj - d_kj s_il.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          int a = idx(i, j), b = idx(k, l);
          if (a >= b) continue;
          Relation rel{a, b, {}};
          if (l == i) rel.d.push_back(var_term(idx(k, j)));
          if (k == j) rel.d.push_back(var_term(idx(i, l), -1));
          if (!rel.d.empty()) rels.push_back(std::move(rel));
        }
}

}  // namespace

AlgebraPtr weyl_gl(const std::vector<std::string>& xs, int r) {
  if (r < 1) throw InvalidArgument("gl rank must be positive");
  const int n = static_cast<int>(xs.size());
  std::vector<Relation> rels;
  VarRoles roles;
  for (int i = 0; i < n; ++i) {
    rels.push_back({i, n + i, {unit_term()}});
    roles.weyl_pairs.push_back({i, n + i});
  }
  auto names = concat({xs, derivation_names(xs)});
  add_gl(2 * n, r, rels, roles, names);
  const int total = static_cast<int>(names.size());
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(total), std::move(roles), "weyl_gl");
}

AlgebraPtr weyl_dt_gl(const std::vector<std::string>& xs, int r) {
  if (r < 1) throw InvalidArgument("gl rank must be positive");
  const int n = static_cast<int>(xs.size());
  std::vector<Relation> rels;
  VarRoles roles;
  for (int i = 0; i < n; ++i) {
    rels.push_back({i, n + i, {unit_term()}});
    roles.weyl_pairs.push_back({i, n + i});
  }
  auto names = concat({xs, derivation_names(xs), parameter_names("Dt", r)});
  for (int k = 0; k < r; ++k) roles.dt.push_back(2 * n + k);
  const int first = 2 * n + r;
  add_gl(first, r, rels, roles, names);
  // Dt_k < s_ij in the variable order: s_ij Dt_k = Dt_k s_ij + d_jk Dt_i.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rels.push_back({2 * n + j, first + i * r + j, {var_term(2 * n + i)}});
  const int total = static_cast<int>(names.size());
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(total), std::move(roles),
                        "weyl_dt_gl");
}

AlgebraPtr commutative(const std::vector<std::string>& names) {
  const int m = static_cast<int>(names.size());
  return GAlgebra::make(names, {}, MonOrder::degrevlex(m), {}, "commutative");
}

AlgebraPtr commutative(int m) { return commutative(default_names(m)); }

AlgebraPtr bm_extended(const std::vector<std::string>& xs, int p) {
  const int n = static_cast<int>(xs.size());
  auto ts = parameter_names("t", p);
  auto dts = parameter_names("Dt", p);
  auto names = concat({ts, xs, dts, derivation_names(xs), parameter_names("s", p)});
  std::vector<Relation> rels;
  VarRoles roles;
  const int dt0 = p + n, dx0 = 2 * p + n, s0 = 2 * p + 2 * n;
  for (int k = 0; k < p; ++k) {
    rels.push_back({k, dt0 + k, {unit_term()}});
    roles.weyl_pairs.push_back({k, dt0 + k});
    roles.dt.push_back(dt0 + k);
  }
  for (int i = 0; i < n; ++i) {
    rels.push_back({p + i, dx0 + i, {unit_term()}});
    roles.weyl_pairs.push_back({p + i, dx0 + i});
  }
  roles.t_pairs = p;
  for (int j = 0; j < p; ++j) {
    roles.s.push_back(s0 + j);
    // s_j t_j = t_j s_j - t_j ; s_j Dt_j = Dt_j s_j + Dt_j
    rels.push_back({j, s0 + j, {var_term(j, -1)}});
    rels.push_back({dt0 + j, s0 + j, {var_term(dt0 + j)}});
  }
  const int total = static_cast<int>(names.size());
  return GAlgebra::make(std::move(names), std::move(rels), MonOrder::degrevlex(total), std::move(roles),
                        "bm_extended");
}

AlgebraPtr preset(std::string_view kind, int n, int extra) {
  auto xs = default_names(n);
  if (kind == "weyl") return weyl(xs);
  if (kind == "weyl_s") return weyl_s(xs, extra);
  if (kind == "weyl_shift") return weyl_shift(xs, extra);
  if (kind == "weyl_gl") return weyl_gl(xs, extra);
  if (kind == "weyl_dt_gl") return weyl_dt_gl(xs, extra);
  if (kind == "commutative") return commutative(xs);
  if (kind == "bm_extended") return bm_extended(xs, extra);
  if (kind == "weyl_homog") {
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    return weyl_homog(n, ones, ones);
  }
  throw InvalidArgument("unknown preset '" + std::string(kind) + "'");
}

AlgebraPtr with_elimination(const AlgebraPtr& alg, const std::vector<int>& eliminated) {
  return alg->with_order(MonOrder::elimination(alg->nvars(), eliminated));
}

}  // namespace dmod
