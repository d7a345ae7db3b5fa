#include <unordered_map>

#include "dmod/errors.hpp"
#include "dmod/groebner.hpp"

namespace dmod {

LinReduceResult LinearReducer::reduce(const Poly& f) const {
  LinReduceResult out{Poly(alg_), std::vector<Rational>(inputs_)};
  if (f.is_zero()) return out;
  Poly h = f.algebra()->compatible(*alg_) ? f : f.reorder(alg_);
  TermList residue;
  // Walk down h; every pivot hit is eliminated with its row.
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& t = h.terms()[pos];
    const Row* row = nullptr;
    for (const auto& r : rows_)
      if (r.p.lcomp() == t.comp && r.p.lm() == t.mono) {
        row = &r;
        break;
      }
    if (!row) {
      residue.push_back(t);
      ++pos;
      continue;
    }
    Rational c = t.coef;
    for (std::size_t i = 0; i < row->combination.size(); ++i) out.coeffs[i] += c * row->combination[i];
    TermList rest(h.terms().begin() + static_cast<std::ptrdiff_t>(pos), h.terms().end());
    Poly tail = Poly::from_sorted(alg_, std::move(rest)) - row->p * c;
    h = tail;
    pos = 0;
  }
  out.residue = Poly::from_sorted(alg_, std::move(residue));
  return out;
}

std::optional<std::vector<Rational>> LinearReducer::add(const Poly& f) {
  auto r = reduce(f);
  const std::size_t idx = inputs_++;
  if (r.residue.is_zero()) {
    r.coeffs.resize(idx);
    return r.coeffs;
  }
  Rational inv = 1 / r.residue.lc();
  Row row{r.residue * inv, std::vector<Rational>(inputs_)};
  for (std::size_t i = 0; i < idx; ++i) row.combination[i] = -r.coeffs[i] * inv;
  row.combination[idx] = inv;
  for (auto& other : rows_) other.combination.resize(inputs_);
  rows_.push_back(std::move(row));
  return std::nullopt;
}

LinReduceResult lin_reduce(const Poly& f, const std::vector<Poly>& basis) {
  LinearReducer lr(f.algebra());
  for (const auto& b : basis) {
    require_same_algebra(f, b);
    lr.add(b);
  }
  auto r = lr.reduce(f);
  r.coeffs.resize(basis.size());
  return r;
}

}  // namespace dmod
