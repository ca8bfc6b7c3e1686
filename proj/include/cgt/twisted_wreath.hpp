#pragma once

#include <array>

#include "cgt/permgroup.hpp"

namespace cgt {

// The twisted wreath product built from T = PSL(2,7) and the top group
// H = T^2 x| <swap>, with phi sending (x,x) and (x,x)*swap to conjugation
// by x. Socle elements are the functions H -> T compatible with phi; each
// is stored by its values on the 168 canonical coset representatives of
// L = {(x,x)}<swap>, with T realized as degree-8 permutations.
//
// The marked functions g (supported on C*L, value gamma) and h (supported
// on D*t*L, value eta) have H-orbits of sizes 576 = |H:C| and 49 = |H:D|;
// the orbit of the pointwise product g*h realizes the degree-28224
// transitive permutation image of H that the report carries.
struct TwistedWreathReport {
  PermGroup image;            // H acting on the orbit of g*h, degree 28224
  u64 h_order = 0;            // 56448

  u64 orbit_g = 0, orbit_h = 0, orbit_gh = 0;
  u64 cent_g = 0, cent_h = 0, cent_gh = 0, cent_g_cap_h = 0;
  bool cent_gh_equals_intersection = false;  // as element sets

  // subdegrees of the twisted wreath group certified by the computation
  std::vector<u64> known_subdegrees;  // {1, 49, 576, orbit_gh}
  u32 max_coprime_known = 0;

  // structural checks on the defining data
  u64 gamma_order = 0, a_order = 0, b_order = 0;
  bool eta_is_r_squared = false;
  u64 c_order = 0, d_order = 0, s_order = 0;   // 98, 1152, 24
  bool c_is_cent_g = false, d_is_cent_h = false;
  u64 dtl_order = 0;                            // |D^t . . L| intersection, 8
  bool dtl_is_dihedral = false;
  bool dtl_center_is_eta = false;
  bool g_well_defined = false, h_well_defined = false;
  bool g_in_socle = false, h_in_socle = false;  // f(zl) = f(z)^phi(l)

  // literal reading of the paper's closing line, with f the fixed function
  u64 cent_f = 0, cent_fg = 0;
  bool literal_fg_reading_holds = false;  // C_H(f*g) == C_H(f) n C_H(g)
};

TwistedWreathReport twisted_wreath_ex44();

}  // namespace cgt
