#include "reducer.hpp"

#include <algorithm>

namespace dmod::detail {

std::uint64_t short_exponent(const Monomial& m) {
  std::uint64_t s = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    auto e = m[v];
    if (e >= 1) s |= std::uint64_t{1} << (2 * v);
    if (e >= 2) s |= std::uint64_t{1} << (2 * v + 1);
  }
  return s;
}

std::int64_t graded_degree(const Monomial& m, const std::vector<std::int64_t>& w) {
  std::int64_t d = 0;
  for (std::size_t v = 0; v < w.size(); ++v) d += w[v] * m[static_cast<int>(v)];
  return d;
}

std::size_t weighted_length(const Poly& p) {
  std::size_t w = 0;
  for (const auto& t : p.terms())
    w += static_cast<std::size_t>(1 + t.mono.total_degree()) * (1 + bit_size(t.coef) / 64);
  return w;
}

int Reducer::add(const Poly& g, std::int64_t sugar) {
  Entry e{g, g.lm(), g.lcomp(), short_exponent(g.lm()), slim_ ? weighted_length(g) : g.size(), sugar, true};
  entries_.push_back(std::move(e));
  return static_cast<int>(entries_.size()) - 1;
}

const Reducer::Entry* Reducer::find(const Monomial& m, int comp) const {
  const std::uint64_t s = short_exponent(m);
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    if (!e.active || e.comp != comp || (e.sev & ~s) != 0 || !e.lm.divides(m)) continue;
    if (!best || e.weight < best->weight) best = &e;
  }
  return best;
}

namespace {

// a, b ascending; returns the ascending sum.
TermList merge_ascending(const MonOrder& ord, TermList& a, TermList& b) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, a[i].comp, b[j].mono, b[j].comp);
    if (c < 0) {
      out.push_back(std::move(a[i++]));
    } else if (c > 0) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coef += b[j].coef;
      if (sgn(a[i].coef) != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

// Geometric buckets: bucket k holds at most 4^(k+2) terms, each bucket
// ascending, so the largest term of the sum is among the bucket backs.
class Geobucket {
 public:
  explicit Geobucket(const MonOrder& ord) : ord_(ord) {}

  void add(TermList terms) {
    std::size_t k = level(terms.size());
    while (true) {
      if (buckets_.size() <= k) buckets_.resize(k + 1);
      terms = merge_ascending(ord_, buckets_[k], terms);
      buckets_[k].clear();
      if (terms.size() <= capacity(k)) {
        buckets_[k] = std::move(terms);
        return;
      }
      ++k;
    }
  }

  // Removes and returns the largest term of the sum; false when it is zero.
  bool pop_lead(Term& out) {
    while (true) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best < 0) {
          best = static_cast<int>(k);
          continue;
        }
        const Term& a = buckets_[k].back();
        const Term& b = buckets_[static_cast<std::size_t>(best)].back();
        if (ord_.compare(a.mono, a.comp, b.mono, b.comp) > 0) best = static_cast<int>(k);
      }
      if (best < 0) return false;
      out = std::move(buckets_[static_cast<std::size_t>(best)].back());
      buckets_[static_cast<std::size_t>(best)].pop_back();
      for (auto& bucket : buckets_) {
        if (bucket.empty()) continue;
        const Term& t = bucket.back();
        if (t.comp == out.comp && t.mono == out.mono) {
          out.coef += t.coef;
          bucket.pop_back();
        }
      }
      if (sgn(out.coef) != 0) return true;
    }
  }

  // Remaining terms, ascending.
  TermList flatten() {
    TermList all;
    for (auto& bucket : buckets_) all = merge_ascending(ord_, all, bucket);
    buckets_.clear();
    return all;
  }

 private:
  static std::size_t capacity(std::size_t k) { return std::size_t{16} << (2 * k); }
  static std::size_t level(std::size_t n) {
    std::size_t k = 0;
    while (capacity(k) < n) ++k;
    return k;
  }
  const MonOrder& ord_;
  std::vector<TermList> buckets_;
};

}  // namespace

Poly Reducer::reduce(const Poly& f, bool full, std::int64_t* sugar) const {
  const MonOrder& ord = alg_->order();
  Geobucket h(ord);
  h.add(TermList(f.terms().rbegin(), f.terms().rend()));
  TermList done;  // descending, like Poly storage
  Term t;
  while (h.pop_lead(t)) {
    const Entry* e = find(t.mono, t.comp);
    if (!e) {
      done.push_back(std::move(t));
      if (!full) break;
      continue;
    }
    Monomial m = t.mono / e->lm;
    Rational c = -t.coef / e->p.lc();
    if (sugar) *sugar = std::max(*sugar, e->sugar + graded_degree(m, grading_));
    Poly mg = mul_term_left(m, c, e->p);
    // the leading term cancels t exactly
    h.add(TermList(mg.terms().rbegin(), mg.terms().rend() - 1));
  }
  TermList rest = h.flatten();
  done.insert(done.end(), std::make_move_iterator(rest.rbegin()), std::make_move_iterator(rest.rend()));
  return Poly::from_sorted(alg_, std::move(done));
}

}  // namespace dmod::detail
