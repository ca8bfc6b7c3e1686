#include <doctest.h>

#include "cgt/constructions.hpp"
#include "cgt/smallgroup.hpp"

using namespace cgt;

TEST_CASE("subgroup enumeration counts") {
  CHECK(SmallGroup(alt(5)).all_subgroups().size() == 59);
  CHECK(SmallGroup(sym(4)).all_subgroups().size() == 30);
  CHECK(SmallGroup(cyclic(12)).all_subgroups().size() == 6);
}

TEST_CASE("sylow and cores") {
  SmallGroup s4(sym(4));
  CHECK(s4.sylow(2).order() == 8);
  CHECK(s4.sylow(3).order() == 3);
  CHECK(s4.core_p(2).order() == 4);  // the Klein four-group
  CHECK(s4.core_p(3).order() == 1);
  CHECK(!s4.fitting_trivial());
  CHECK(SmallGroup(alt(5)).fitting_trivial());
}

TEST_CASE("fitting against brute-force normal-nilpotent search") {
  std::vector<PermGroup> corpus{sym(4), alt(4), alt(5), dihedral(5), dihedral(6),
                                cyclic(12), sym(3), frobenius_product({{5, 4}}).group};
  for (const PermGroup& g : corpus) {
    REQUIRE(g.order() <= 200);
    SmallGroup sg(g);
    bool brute = true;  // no normal nilpotent subgroup other than 1
    for (const auto& s : sg.all_subgroups()) {
      if (s.order() == 1) continue;
      if (sg.is_normal(s) && sg.is_nilpotent(s)) {
        brute = false;
        break;
      }
    }
    CHECK(sg.fitting_trivial() == brute);
  }
}

TEST_CASE("p-solubility") {
  SmallGroup s4(sym(4));
  CHECK(s4.p_soluble(2));
  CHECK(s4.p_soluble(3));
  SmallGroup a5(alt(5));
  CHECK(!a5.p_soluble(2));
  CHECK(!a5.p_soluble(5));
  CHECK(a5.p_soluble(7));  // trivial Sylow
}

TEST_CASE("hall subgroups") {
  SmallGroup s4(sym(4));
  CHECK(s4.hall_p_prime(2).order() == 3);
  CHECK(s4.hall_p_prime(3).order() == 8);
  SmallGroup frob(frobenius_product({{5, 4}}).group);
  CHECK(frob.hall_p_prime(5).order() == 4);
}

TEST_CASE("normal closure and classes") {
  SmallGroup s4(sym(4));
  // normal closure of a double transposition is the Klein four-group
  u32 v = s4.index_of(parse_perm("(1 2)(3 4)", 4));
  CHECK(s4.normal_closure({v}).order() == 4);
  u32 t = s4.index_of(parse_perm("(1 2)", 4));
  CHECK(s4.normal_closure({t}).order() == 24);
  CHECK(s4.class_representatives().size() == 5);
}
