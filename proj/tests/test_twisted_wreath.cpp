#include <doctest.h>

#include "cgt/twisted_wreath.hpp"

using namespace cgt;

TEST_CASE("the degree-28224 twisted wreath instance") {
  TwistedWreathReport tw = twisted_wreath_ex44();
  CHECK(tw.h_order == 56448);
  CHECK(tw.gamma_order == 7);
  CHECK(tw.a_order == 4);
  CHECK(tw.b_order == 3);
  CHECK(tw.eta_is_r_squared);
  CHECK(tw.s_order == 24);
  CHECK(tw.c_order == 98);
  CHECK(tw.d_order == 1152);
  CHECK(tw.g_well_defined);
  CHECK(tw.h_well_defined);
  CHECK(tw.g_in_socle);
  CHECK(tw.h_in_socle);
  CHECK(tw.c_is_cent_g);
  CHECK(tw.d_is_cent_h);
  CHECK(tw.orbit_g == 576);
  CHECK(tw.orbit_h == 49);
  CHECK(tw.cent_g == 98);
  CHECK(tw.cent_h == 1152);
  CHECK(tw.cent_g_cap_h == 2);
  CHECK(tw.cent_gh == 2);
  CHECK(tw.cent_gh_equals_intersection);
  CHECK(tw.orbit_gh == 576 * 49);
  CHECK(tw.image.degree() == 28224);
  CHECK(tw.image.order() == 56448);
  CHECK(tw.dtl_order == 8);
  CHECK(tw.dtl_is_dihedral);
  CHECK(tw.dtl_center_is_eta);
  CHECK(tw.max_coprime_known == 2);
  CHECK(tw.known_subdegrees == std::vector<u64>{1, 49, 576, 28224});
  // the literal reading with the fixed function is trivially consistent
  CHECK(tw.cent_f == 56448);
  CHECK(tw.cent_fg == 98);
  CHECK(tw.literal_fg_reading_holds);
}
