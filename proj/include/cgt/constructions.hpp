#pragma once

#include "cgt/matgroup.hpp"
#include "cgt/module.hpp"
#include "cgt/permgroup.hpp"

namespace cgt {

PermGroup sym(u32 n);
PermGroup alt(u32 n);
PermGroup cyclic(u32 n);
PermGroup dihedral(u32 n);

// Projective line over GF(q): position 0 is the point at infinity, then the
// field elements in code order. Degree q+1.
Perm projective_action(const Mat& m);
PermGroup psl2(u64 q);

// V x| H on the points of V: translations by basis vectors plus the matrix
// generators; the stabilizer of the zero vector is the image of H.
PermGroup affine_holomorph(const MatGroup& h, u64 cap = default_limits().coset_index_cap);
u64 vector_rank(const Field& f, const Vec& v);

// base wr Sym(n) in product action on degree(base)^n tuples; coordinate 0
// is the fastest-moving digit of the point code.
PermGroup product_action_wreath(const PermGroup& base, u32 n, u64 cap = 1'000'000);

struct FrobeniusProduct {
  PermGroup group;
  std::vector<u32> marked_points;  // per factor: the point with n_i = 1
  u32 identity_point = 0;
  std::vector<u64> complement_orders;
};
// Direct product of Frobenius groups C_m x| C_d acting holomorphically on
// the product of the kernels.
FrobeniusProduct frobenius_product(const std::vector<std::pair<u64, u64>>& params,
                                   u64 cap = default_limits().coset_index_cap);

// The two modules of the running counterexample: the 2-dimensional
// GF(p)-module of the order p(p-1) group, and the faithful 3-dimensional
// GF(2) quotient module of Sym(4).
MatGroup ex31_odd_module(u64 p);
u64 smallest_primitive_root(u64 p);
MatGroup ex31_char2_module();

// Mathieu group of degree n in {11, 23, 24} from a bundled data file; the
// loader recomputes the order and rejects files that do not match.
PermGroup mathieu(u32 n, const std::string& data_dir);

// Named deterministic construction; evaluating twice yields identical
// generator lists.
struct GroupRecipe {
  std::string term;
  std::function<PermGroup()> make;
};

}  // namespace cgt
