#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "dmod/cli.hpp"
#include "dmod/errors.hpp"
#include "dmod/parse.hpp"
#include "dmod/presets.hpp"
#include "dmod/weyl.hpp"
#include "json.hpp"

namespace dmod::cli {

using nlohmann::ordered_json;

std::vector<std::string> parse_ring_spec(std::string_view text) {
  static const std::regex ident(R"([A-Za-z][A-Za-z0-9_]*)");
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (!std::regex_match(cur, ident)) throw InvalidArgument("bad variable name '" + cur + "'");
    if (std::find(names.begin(), names.end(), cur) != names.end())
      throw InvalidArgument("duplicate variable name '" + cur + "'");
    names.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else cur += c;
  }
  flush();
  if (names.empty()) throw InvalidArgument("empty ring specification");
  return names;
}

void load_ideal_file(const std::string& path, Session& s) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open ideal file '" + path + "'");
  std::string line;
  bool have_ring = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!have_ring) {
      if (line.rfind("ring:", 0) != 0) throw InvalidArgument(path + ": first line must be 'ring: <names>'");
      auto names = parse_ring_spec(line.substr(5));
      if (!s.ring.empty() && s.ring != names) throw InvalidArgument(path + ": ring differs from --ring");
      s.ring = std::move(names);
      have_ring = true;
      continue;
    }
    s.polys.push_back(line);
  }
  if (!have_ring) throw InvalidArgument(path + ": missing 'ring:' line");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "annfs",    "annfs-log",    "ann-k",    "ann-poly",  "ann-rat", "ann-falpha", "bfct",
      "bfct-ann", "bfct-ideal",   "check-root", "min-int-root", "operator", "bs-ideal", "annfs-var",
      "bfct-var", "gkdim",        "gb",       "principal-intersect", "solve0", "verify"};
  return names;
}

namespace {

struct Report {
  std::string command;
  std::vector<std::string> ring;
  std::vector<std::string> algebra;
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> fields;  // text-only scalars, in print order
  ordered_json extra = ordered_json::object();
  std::optional<BFunction> roots;
};

ordered_json number(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json roots_json(const BFunction& b) {
  ordered_json out = ordered_json::array();
  for (const auto& [r, m] : b.roots) out.push_back({number(r.get_num()), number(r.get_den()), m});
  return out;
}

void render(const Report& r, bool json, std::ostream& out) {
  if (json) {
    ordered_json j;
    j["command"] = r.command;
    j["ring"] = r.ring;
    if (!r.algebra.empty()) j["algebra"] = r.algebra;
    j["generators"] = r.generators;
    j["roots"] = r.roots ? roots_json(*r.roots) : ordered_json::array();
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  if (!r.algebra.empty()) {
    out << "algebra: ";
    for (std::size_t k = 0; k < r.algebra.size(); ++k) out << (k ? "," : "") << r.algebra[k];
    out << "\n";
  }
  for (const auto& [k, v] : r.fields) out << k << ": " << v << "\n";
  if (!r.algebra.empty() || !r.generators.empty()) {
    out << "generators (" << r.generators.size() << "):\n";
    for (const auto& g : r.generators) out << g << "\n";
  }
  if (r.roots) {
    out << "roots:" << (r.roots->roots.empty() ? "" : " ") << r.roots->roots_string() << "\n";
    if (r.roots->remainder.degree() > 0) out << "remainder: " << r.roots->remainder.to_string() << "\n";
  }
}

class Runner {
 public:
  Runner(const std::string& command, const Session& s) : s_(s) {
    rep_.command = command;
    rep_.ring = s.ring;
    if (s.slim) opt_.gb.strategy = GBOptions::Strategy::Slim;
    if (s.cap) {
      if (*s.cap < 1) throw InvalidArgument("--cap must be positive");
      opt_.intersect_cap = opt_.search_cap = *s.cap;
    }
    if (s.timeout)
      opt_.gb.deadline = std::chrono::steady_clock::now() +
                         std::chrono::milliseconds(static_cast<long long>(*s.timeout * 1000));
  }

  int dispatch(std::ostream& out, std::ostream& err) {
    const std::string& c = rep_.command;
    if (c == "verify") return verify(out, err);
    if (c == "annfs") annihilator(sannfs_bm(inputs(1, -1), opt_));
    else if (c == "annfs-log") annihilator(sannfs_log(single(), opt_));
    else if (c == "ann-k") {
      if (s_.k < 1) throw InvalidArgument("--k must be at least 1");
      annihilator(ann_upto_k(single(), s_.k, opt_));
    } else if (c == "ann-poly") basis(ann_poly(single(), opt_));
    else if (c == "ann-rat") {
      auto fs = inputs(2, 2);
      basis(ann_rat(fs[0], fs[1], opt_));
    } else if (c == "ann-falpha") basis(ann_falpha(single(), alpha(), opt_));
    else if (c == "bfct") {
      std::vector<int> u;
      for (auto w : s_.weights) u.push_back(static_cast<int>(w));
      rep_.roots = bfct(single(), u, opt_);
    } else if (c == "bfct-ann") rep_.roots = bfct_ann(single(), opt_);
    else if (c == "bfct-ideal") bfct_of_ideal();
    else if (c == "check-root") root_check();
    else if (c == "min-int-root") min_root();
    else if (c == "operator") bernstein_operator();
    else if (c == "bs-ideal") basis(bs_ideal(inputs(1, -1), opt_));
    else if (c == "annfs-var") annihilator(sannfs_var(inputs(1, -1), opt_));
    else if (c == "bfct-var") variety();
    else if (c == "gkdim") {
      GBasis G = groebner("commutative");
      int d = lt_dimension(G);
      rep_.fields.push_back({"gkdim", std::to_string(d)});
      rep_.extra["gkdim"] = d;
    } else if (c == "gb") basis(groebner("commutative"));
    else if (c == "principal-intersect") intersect();
    else if (c == "solve0") solve();
    else throw InvalidArgument("unknown command '" + c + "'");
    render(rep_, s_.json, out);
    return kOk;
  }

 private:
  AlgebraPtr input_ring() {
    if (s_.ring.empty()) throw InvalidArgument("--ring is required");
    auto r = commutative(s_.ring);
    check_input_ring(*r);
    return r;
  }

  std::vector<Poly> inputs(int lo, int hi) {
    const int n = static_cast<int>(s_.polys.size());
    if (n < lo || (hi >= 0 && n > hi)) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + (hi < 0 ? " or more" : "-" + std::to_string(hi));
      throw InvalidArgument(rep_.command + " expects " + want + " polynomial(s), got " + std::to_string(n));
    }
    auto r = input_ring();
    std::vector<Poly> out;
    for (const auto& t : s_.polys) out.push_back(parse_element(t, r));
    return out;
  }

  Poly single() { return inputs(1, 1)[0]; }

  Rational alpha() {
    if (!s_.alpha) throw InvalidArgument(rep_.command + " requires --alpha");
    try {
      return parse_rational(*s_.alpha);
    } catch (const std::exception&) {
      throw InvalidArgument("bad rational '" + *s_.alpha + "'");
    }
  }

  void generators(const std::vector<Poly>& gens, const AlgebraPtr& alg) {
    rep_.algebra = alg->names();
    for (const auto& g : gens) rep_.generators.push_back(to_string(g));
  }

  void basis(const GBasis& G) { generators(G.gens(), G.algebra()); }
  void annihilator(const SParamAnnihilator& a) { generators(a.gens.gens(), a.algebra); }

  MonOrder ordering(const GAlgebra& alg) {
    const int n = alg.nvars();
    const std::string& o = s_.ord;
    if (o == "dp") return MonOrder::degrevlex(n);
    if (o == "lp") return MonOrder::lex(n);
    if (o.rfind("wp:", 0) == 0) {
      std::vector<std::int64_t> w;
      std::stringstream ss(o.substr(3));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          w.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw InvalidArgument("bad weight '" + tok + "'");
        }
      }
      if (static_cast<int>(w.size()) != n)
        throw InvalidArgument("wp needs " + std::to_string(n) + " weights");
      for (auto x : w)
        if (x <= 0) throw InvalidArgument("wp weights must be positive");
      return MonOrder::weight_first(w, MonOrder::degrevlex(n));
    }
    if (o.rfind("elim:", 0) == 0) {
      std::vector<int> idx;
      for (const auto& name : parse_names(o.substr(5))) {
        int v = alg.index_of(name);
        if (v < 0) throw InvalidArgument("elim: unknown variable '" + name + "'");
        idx.push_back(v);
      }
      return MonOrder::elimination(n, idx);
    }
    throw InvalidArgument("unknown ordering '" + o + "'");
  }

  static std::vector<std::string> parse_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
    return out;
  }

  AlgebraPtr ideal_algebra(const std::string& fallback) {
    if (s_.ring.empty()) throw InvalidArgument("--ring is required");
    const std::string kind = s_.algebra.empty() ? fallback : s_.algebra;
    AlgebraPtr a;
    if (kind == "commutative") a = commutative(s_.ring);
    else if (kind == "weyl") a = weyl(s_.ring);
    else if (kind == "weyl_s") a = weyl_s(s_.ring, 1);
    else throw InvalidArgument("unknown algebra '" + kind + "' (commutative, weyl, weyl_s)");
    return a->with_order(ordering(*a));
  }

  std::vector<Poly> ideal_in(const AlgebraPtr& a) {
    if (s_.polys.empty()) throw InvalidArgument(rep_.command + " needs at least one polynomial");
    std::vector<Poly> out;
    for (const auto& t : s_.polys) out.push_back(parse_element(t, a));
    return out;
  }

  GBasis groebner(const std::string& fallback) {
    auto a = ideal_algebra(fallback);
    return buchberger(ideal_in(a), opt_.gb);
  }

  void bfct_of_ideal() {
    auto a = ideal_algebra("weyl");
    const int n = static_cast<int>(s_.ring.size());
    std::vector<std::int64_t> w = s_.weights;
    if (w.empty()) w.assign(static_cast<std::size_t>(n), 1);
    if (static_cast<int>(w.size()) != n) throw InvalidArgument("--weights needs " + std::to_string(n) + " entries");
    rep_.roots = bfct_ideal(ideal_in(a), w, opt_);
  }

  void root_check() {
    Rational r = alpha();
    auto ann = sannfs_bm({single()}, opt_);
    int m = root_multiplicity(ann, -r, opt_);
    rep_.fields.push_back({"root", to_string(r)});
    rep_.fields.push_back({"multiplicity", std::to_string(m)});
    rep_.extra["is_root"] = m > 0;
    rep_.extra["multiplicity"] = m;
    BFunction b;
    if (m > 0) b.roots[r] = m;
    if (m > 0) rep_.roots = b;
  }

  void min_root() {
    auto ann = sannfs_bm({single()}, opt_);
    int r = min_integer_root(ann, opt_);
    int m = root_multiplicity(ann, Rational(-r), opt_);
    rep_.fields.push_back({"min-int-root", std::to_string(r)});
    rep_.extra["min_int_root"] = r;
    BFunction b;
    b.roots[Rational(r)] = m;
    rep_.roots = b;
  }

  void bernstein_operator() {
    auto ann = sannfs_bm({single()}, opt_);
    BFunction b = bfct_ann(ann, opt_);
    Poly P = [&] {
      if (s_.method == "modulo") return operator_modulo(ann, b.poly, opt_);
      if (s_.method == "search") return operator_search(ann, b.poly, opt_);
      if (s_.method == "lift") return operator_lift(ann, b.poly, true, opt_);
      throw InvalidArgument("unknown --method '" + s_.method + "' (modulo, search, lift)");
    }();
    P = bernstein_operator_nf(P, ann, opt_);
    if (!is_bernstein_operator(P, ann, b.poly)) throw ComputationError("operator failed the functional identity");
    rep_.fields.push_back({"algebra", join(ann.algebra->names())});
    rep_.fields.push_back({"b", b.poly.to_string()});
    rep_.fields.push_back({"operator", to_string(P)});
    rep_.extra["algebra"] = ann.algebra->names();
    rep_.extra["b"] = b.poly.to_string();
    rep_.extra["operator"] = to_string(P);
    rep_.roots = b;
  }

  static std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out;
  }

  void variety() {
    auto fs = inputs(1, -1);
    BFunction b = bfct_var(fs, std::nullopt, opt_);
    int codim = variety_codim(fs);
    BFunction bz = unipoly_rational_roots(b.poly.compose_linear(1, Rational(1 - codim)));
    rep_.fields.push_back({"codim", std::to_string(codim)});
    rep_.fields.push_back({"variety-roots", bz.roots_string()});
    rep_.extra["codim"] = codim;
    rep_.extra["variety_roots"] = roots_json(bz);
    rep_.roots = b;
  }

  void intersect() {
    if (!s_.sigma) throw InvalidArgument("principal-intersect requires --sigma");
    auto a = ideal_algebra("commutative");
    GBasis G = buchberger(ideal_in(a), opt_.gb);
    Poly sigma = parse_element(*s_.sigma, a);
    UniPoly m = principal_intersect(G, sigma, opt_);
    rep_.fields.push_back({"minimal polynomial", m.to_string()});
    rep_.extra["minimal_polynomial"] = m.to_string();
    rep_.roots = unipoly_rational_roots(m);
  }

  void solve() {
    auto a = ideal_algebra("commutative");
    if (!a->is_commutative()) throw InvalidArgument("solve0 works over the commutative ring");
    auto gens = ideal_in(a);
    GBasis G = buchberger(gens, opt_.gb);
    if (G.is_unit()) {
      rep_.fields.push_back({"solutions", "none"});
      rep_.extra["solutions"] = ordered_json::array();
      return;
    }
    const int n = a->nvars();
    std::vector<std::vector<Rational>> candidates;
    ordered_json minpolys = ordered_json::object();
    for (int v = 0; v < n; ++v) {
      UniPoly m = principal_intersect(G, Poly::monomial(a, Monomial::variable(v)), opt_).with_var(a->name(v));
      rep_.fields.push_back({a->name(v), m.to_string()});
      minpolys[a->name(v)] = m.to_string();
      std::vector<Rational> rs;
      for (const auto& [r, mult] : unipoly_rational_roots(m).roots) rs.push_back(r);
      candidates.push_back(rs);
    }
    // rational points: every coordinate is a rational root of its minimal polynomial
    auto point_ring = commutative(std::vector<std::string>{});
    std::vector<std::vector<Rational>> points{{}};
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<Rational>> next;
      for (const auto& p : points)
        for (const auto& r : candidates[static_cast<std::size_t>(v)]) {
          auto q = p;
          q.push_back(r);
          next.push_back(std::move(q));
        }
      points = std::move(next);
    }
    ordered_json sols = ordered_json::array();
    for (const auto& p : points) {
      std::vector<std::pair<int, Rational>> values;
      for (int v = 0; v < n; ++v) values.push_back({v, p[static_cast<std::size_t>(v)]});
      bool ok = std::all_of(G.begin(), G.end(),
                            [&](const Poly& g) { return specialize(g, values, point_ring).is_zero(); });
      if (!ok) continue;
      std::string text = "(";
      ordered_json row = ordered_json::array();
      for (int v = 0; v < n; ++v) {
        text += (v ? ", " : "") + to_string(p[static_cast<std::size_t>(v)]);
        row.push_back(to_string(p[static_cast<std::size_t>(v)]));
      }
      rep_.fields.push_back({"solution", text + ")"});
      sols.push_back(row);
    }
    rep_.extra["minimal_polynomials"] = minpolys;
    rep_.extra["solutions"] = sols;
  }

  int verify(std::ostream& out, std::ostream& err) {
    int failed = 0, passed = 0, skipped = 0;
    ordered_json cases = ordered_json::array();
    for (const auto& c : corpus()) {
      if (c.stretch && !s_.stretch) continue;
      if (c.name.find(s_.filter) == std::string::npos) continue;
      DmodOptions opt = opt_;
      auto start = std::chrono::steady_clock::now();
      CaseResult r = run_case(c, opt);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const char* tag = r.status == CaseResult::Pass ? "PASS" : r.status == CaseResult::Fail ? "FAIL" : "SKIP";
      (r.status == CaseResult::Pass ? passed : r.status == CaseResult::Fail ? failed : skipped)++;
      if (s_.json) {
        cases.push_back({{"case", c.name}, {"status", tag}, {"detail", r.detail}});
      } else {
        out << tag << " " << c.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
      }
      err << c.name << " " << secs << "s\n";
    }
    if (s_.json) {
      ordered_json j;
      j["command"] = "verify";
      j["cases"] = cases;
      j["passed"] = passed;
      j["failed"] = failed;
      j["skipped"] = skipped;
      out << j.dump(2) << "\n";
    } else {
      out << "verify: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed ? kComputation : kOk;
  }

  const Session& s_;
  DmodOptions opt_;
  Report rep_;
};

bool usage_error(const Error& e) {
  return dynamic_cast<const CapExceeded*>(&e) == nullptr && dynamic_cast<const UnsupportedBranch*>(&e) == nullptr &&
         dynamic_cast<const ComputationError*>(&e) == nullptr;
}

}  // namespace

int run_command(const std::string& command, const Session& s, std::ostream& out, std::ostream& err) {
  try {
    Runner r(command, s);
    return r.dispatch(out, err);
  } catch (const Error& e) {
    int status = usage_error(e) ? kUsage : kComputation;
    if (s.json) {
      ordered_json j;
      j["command"] = command;
      j["error"] = {{"reason", e.reason()}, {"message", e.what()}, {"status", status}};
      out << j.dump(2) << "\n";
    }
    err << "error [" << e.reason() << "]: " << e.what() << "\n";
    return status;
  }
}

CaseResult run_case(const CorpusCase& c, const DmodOptions& opt) {
  try {
    return c.run(opt);
  } catch (const CapExceeded& e) {
    return {CaseResult::Skip, std::string("budget exhausted: ") + e.what()};
  } catch (const std::exception& e) {
    return {CaseResult::Fail, std::string("exception: ") + e.what()};
  }
}

}  // namespace dmod::cli
