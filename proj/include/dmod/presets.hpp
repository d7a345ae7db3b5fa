#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/galgebra.hpp"

namespace dmod {

// x / x,y / x,y,z / x1..xn
std::vector<std::string> default_names(int n);
// "D" + name for every name.
std::vector<std::string> derivation_names(const std::vector<std::string>& xs);
// s / s1..sp, and the matching Dt / Dt1..Dtp, t / t1..tp.
std::vector<std::string> parameter_names(const std::string& stem, int p);
// s11, s12, ... for r <= 9, s_i_j otherwise.
std::string gl_name(int i, int j, int r);

// Variables x.., Dx.. with D x = x D + 1.
AlgebraPtr weyl(const std::vector<std::string>& xs);
AlgebraPtr weyl(int n);
// W_{p+n} for the Malgrange ideal: t.., x.., Dt.., Dx.. (t pairs first).
AlgebraPtr weyl_malgrange(int p, const std::vector<std::string>& xs);
// D_n[s_1..s_p]: x.., Dx.., s.. with s central.
AlgebraPtr weyl_s(const std::vector<std::string>& xs, int p);
// D_n tensor S_p: x.., Dx.., Dt.., s.. with Dt_j s_j = s_j Dt_j - Dt_j.
AlgebraPtr weyl_shift(const std::vector<std::string>& xs, int p);
// Weighted homogenization of a Weyl-type algebra: same variables plus h,
// D_i x_i = x_i D_i + h^(u_i+v_i). Default ordering: (u,v,1)-weight, then
// reverse lexicographic.
AlgebraPtr weyl_homog(const AlgebraPtr& base, const std::vector<int>& u, const std::vector<int>& v);
AlgebraPtr weyl_homog(int n, const std::vector<int>& u, const std::vector<int>& v);
// D_n<S>: x.., Dx.., s_ij with [s_ij, s_kl] = d_jk s_il - d_il s_kj.
AlgebraPtr weyl_gl(const std::vector<std::string>& xs, int r);
// D_n<Dt, S>: additionally Dt_1..Dt_r with [s_ij, Dt_k] = d_jk Dt_i.
AlgebraPtr weyl_dt_gl(const std::vector<std::string>& xs, int r);
// Polynomial ring.
AlgebraPtr commutative(const std::vector<std::string>& names);
AlgebraPtr commutative(int m);
// The auxiliary algebra with t.., x.., Dt.., Dx.., s.. and relations
// [Dt_k, t_k] = 1, [D_i, x_i] = 1, [t_k, s_j] = d_kj t_j, [Dt_k, s_j] = -d_kj Dt_j.
AlgebraPtr bm_extended(const std::vector<std::string>& xs, int p);

// Dispatch by name: weyl, weyl_s, weyl_shift, weyl_gl, weyl_dt_gl,
// commutative, bm_extended. `extra` is p or r where applicable.
AlgebraPtr preset(std::string_view kind, int n, int extra = 1);

// Ordering with weight 1 on the given variables and degrevlex tie-break.
AlgebraPtr with_elimination(const AlgebraPtr& alg, const std::vector<int>& eliminated);

}  // namespace dmod
