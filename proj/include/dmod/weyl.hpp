#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dmod/poly.hpp"

namespace dmod {

// (-w, w)-weight of a monomial, w indexed by the algebra's Weyl pairs.
std::int64_t vw_weight(const GAlgebra& alg, const Monomial& m, const std::vector<std::int64_t>& w);

// H_(u,v)(p) in the homogenized algebra `homog` built by weyl_homog from p's
// algebra.
Poly homogenize_weighted(const Poly& p, const AlgebraPtr& homog);
// h -> 1 into `base`.
Poly dehomogenize(const Poly& p, const AlgebraPtr& base);

// Terms of maximal (-w, w)-weight. On a homogenized algebra h has weight 0.
Poly initial_form(const Poly& p, const std::vector<std::int64_t>& w);

// The ordering of the homogenized algebra used for initial ideals:
// (u,v,1)-weight, then (-w,w,0)-weight, then degrevlex on the variables
// other than h.
MonOrder homogenized_vw_order(const GAlgebra& homog, const std::vector<std::int64_t>& w);

// Algebra homomorphism given by the images of the generators.
class AlgebraMap {
 public:
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Poly> images);
  // Variables map to equally named target variables unless overridden.
  static AlgebraMap by_names(AlgebraPtr source, AlgebraPtr target, const std::map<std::string, Poly>& overrides = {});

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }

  // True when the images satisfy every defining relation of the source.
  bool is_homomorphism() const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Poly> images_;
  std::vector<int> simple_;  // target index when the image is a bare variable
  bool monotone_ = false;
  friend Poly apply_map(const AlgebraMap& m, const Poly& p);
};

Poly apply_map(const AlgebraMap& m, const Poly& p);

// Replaces every t^a Dt^a by prod_{k<a} (-s-1-k). Terms must carry equal
// powers of t and Dt; all other variables map by name into target.
Poly substitute_euler(const Poly& p, int t, int dt, const AlgebraPtr& target, int s);

// Moves p into target by variable names (every variable of p must exist in
// target). Products are re-expanded when the target orders noncommuting
// variables differently.
Poly transfer(const Poly& p, const AlgebraPtr& target);

}  // namespace dmod
