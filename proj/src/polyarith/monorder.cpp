#include "dmod/monorder.hpp"

#include <numeric>

#include "dmod/errors.hpp"

namespace dmod {

namespace {

std::vector<int> iota_vars(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

OrderStage weight_stage(std::vector<std::int64_t> w) {
  OrderStage s;
  s.kind = OrderStage::Kind::Weight;
  s.weights = std::move(w);
  return s;
}

OrderStage var_stage(OrderStage::Kind kind, std::vector<int> vars) {
  OrderStage s;
  s.kind = kind;
  s.vars = std::move(vars);
  return s;
}

void check_nvars(int n) {
  if (n < 0 || n > kMaxVars) throw InvalidArgument("unsupported number of variables");
}

}  // namespace

MonOrder MonOrder::degrevlex(int nvars) {
  check_nvars(nvars);
  MonOrder o;
  o.nvars_ = nvars;
  o.kind_ = Kind::DegRevLex;
  o.plain_degrevlex_ = true;
  o.stages_ = {weight_stage(std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 1)),
               var_stage(OrderStage::Kind::RevLex, iota_vars(nvars))};
  o.description_ = "dp";
  return o;
}

MonOrder MonOrder::lex(int nvars) {
  check_nvars(nvars);
  MonOrder o;
  o.nvars_ = nvars;
  o.kind_ = Kind::Lex;
  o.stages_ = {var_stage(OrderStage::Kind::Lex, iota_vars(nvars))};
  o.description_ = "lp";
  return o;
}

MonOrder MonOrder::weight_first(std::vector<std::int64_t> weights, const MonOrder& tie) {
  if (static_cast<int>(weights.size()) != tie.nvars())
    throw InvalidArgument("weight vector length does not match the number of variables");
  MonOrder o;
  o.nvars_ = tie.nvars();
  o.kind_ = Kind::WeightFirst;
  std::string desc = "wp(";
  for (std::size_t i = 0; i < weights.size(); ++i) desc += (i ? "," : "") + std::to_string(weights[i]);
  o.description_ = desc + ")+" + tie.description();
  o.stages_.push_back(weight_stage(std::move(weights)));
  for (const auto& s : tie.stages()) o.stages_.push_back(s);
  o.module_ = tie.module_;
  return o;
}

MonOrder MonOrder::elimination(int nvars, std::span<const int> eliminated) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(nvars), 0);
  for (int v : eliminated) {
    if (v < 0 || v >= nvars) throw InvalidArgument("eliminated variable out of range");
    w[static_cast<std::size_t>(v)] = 1;
  }
  MonOrder o = weight_first(std::move(w), degrevlex(nvars));
  o.description_ = "elim:" + o.description_;
  return o;
}

MonOrder MonOrder::block(int nvars, const std::vector<std::pair<std::vector<int>, MonOrder>>& blocks) {
  check_nvars(nvars);
  MonOrder o;
  o.nvars_ = nvars;
  o.kind_ = Kind::Block;
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  o.description_ = "block(";
  for (const auto& [vars, sub] : blocks) {
    if (static_cast<int>(vars.size()) != sub.nvars())
      throw InvalidArgument("block ordering size does not match its variable list");
    for (int v : vars) {
      if (v < 0 || v >= nvars || seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("block variables must be distinct and in range");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& st : sub.stages()) {
      OrderStage g;
      g.kind = st.kind;
      if (st.kind == OrderStage::Kind::Weight) {
        g.weights.assign(static_cast<std::size_t>(nvars), 0);
        for (std::size_t k = 0; k < vars.size(); ++k) g.weights[static_cast<std::size_t>(vars[k])] = st.weights[k];
      } else {
        for (int local : st.vars) g.vars.push_back(vars[static_cast<std::size_t>(local)]);
      }
      o.stages_.push_back(std::move(g));
    }
    o.description_ += sub.description() + ";";
  }
  o.description_ += ")";
  return o;
}

MonOrder MonOrder::from_stages(int nvars, std::vector<OrderStage> stages, std::string description) {
  check_nvars(nvars);
  for (const auto& st : stages) {
    if (st.kind == OrderStage::Kind::Weight && static_cast<int>(st.weights.size()) != nvars)
      throw InvalidArgument("weight vector length does not match the number of variables");
    for (int v : st.vars)
      if (v < 0 || v >= nvars) throw InvalidArgument("ordering variable out of range");
  }
  MonOrder o;
  o.nvars_ = nvars;
  o.kind_ = Kind::Custom;
  o.stages_ = std::move(stages);
  o.description_ = std::move(description);
  return o;
}

MonOrder MonOrder::with_module_rule(ModuleRule rule) const {
  MonOrder o = *this;
  o.module_ = std::move(rule);
  return o;
}

MonOrder MonOrder::with_priority(std::vector<int> components) const {
  ModuleRule r;
  r.kind = ModuleRule::Kind::PositionOverTerm;
  r.priority = std::move(components);
  return with_module_rule(std::move(r));
}

int MonOrder::compare(const Monomial& a, const Monomial& b) const {
  if (plain_degrevlex_) {
    int da = 0, db = 0;
    for (int i = 0; i < nvars_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = nvars_ - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (const auto& st : stages_) {
    switch (st.kind) {
      case OrderStage::Kind::Weight: {
        std::int64_t diff = 0;
        const std::int64_t* w = st.weights.data();
        for (int i = 0; i < nvars_; ++i) diff += w[i] * (std::int64_t{a[i]} - std::int64_t{b[i]});
        if (diff != 0) return diff < 0 ? -1 : 1;
        break;
      }
      case OrderStage::Kind::RevLex:
        for (auto it = st.vars.rbegin(); it != st.vars.rend(); ++it)
          if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
        break;
      case OrderStage::Kind::Lex:
        for (int v : st.vars)
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        break;
    }
  }
  return 0;
}

int MonOrder::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  if (ca == cb) return compare(a, b);
  if (module_.kind == ModuleRule::Kind::PositionOverTerm) {
    auto rank = [this](int c) {
      for (std::size_t k = 0; k < module_.priority.size(); ++k)
        if (module_.priority[k] == c) return static_cast<int>(k);
      return static_cast<int>(module_.priority.size());
    };
    int ra = rank(ca), rb = rank(cb);
    if (ra != rb) return ra < rb ? 1 : -1;
  }
  int c = compare(a, b);
  if (c != 0) return c;
  return ca < cb ? 1 : -1;
}

bool MonOrder::is_global() const {
  Monomial one;
  for (int i = 0; i < nvars_; ++i)
    if (compare(Monomial::variable(i), one) <= 0) return false;
  return true;
}

std::vector<std::int64_t> MonOrder::grading() const {
  if (!stages_.empty() && stages_.front().kind == OrderStage::Kind::Weight) {
    bool positive = true;
    for (auto w : stages_.front().weights) positive = positive && w > 0;
    if (positive) return stages_.front().weights;
  }
  return std::vector<std::int64_t>(static_cast<std::size_t>(nvars_), 1);
}

Ordering cmp_monomials(std::span<const int> a, std::span<const int> b, const MonOrder& ord) {
  if (static_cast<int>(a.size()) != ord.nvars() || static_cast<int>(b.size()) != ord.nvars())
    throw InvalidArgument("exponent vector length does not match the ordering");
  for (int x : a)
    if (x < 0) throw InvalidArgument("negative exponent");
  for (int x : b)
    if (x < 0) throw InvalidArgument("negative exponent");
  int c = ord.compare(Monomial::from_exponents(a), Monomial::from_exponents(b));
  return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

}  // namespace dmod
