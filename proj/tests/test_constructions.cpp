#include <doctest.h>

#include <fstream>

#include "cgt/analysis.hpp"
#include "cgt/classical.hpp"
#include "cgt/constructions.hpp"
#include "cgt/corpus.hpp"
#include "cgt/formats.hpp"

using namespace cgt;

#ifndef CGT_SOURCE_DATA
#define CGT_SOURCE_DATA "data"
#endif

TEST_CASE("standard families") {
  CHECK(sym(4).order() == 24);
  CHECK(alt(8).order() == 20160);
  CHECK(cyclic(12).order() == 12);
  CHECK(dihedral(5).order() == 10);
  CHECK(dihedral(5).degree() == 5);
  CHECK_THROWS_AS(sym(65), DomainError);
}

TEST_CASE("projective groups") {
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(11).order() == 660);
  CHECK(psl2(11).degree() == 12);
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(9).order() == 360);
  CHECK_THROWS_AS(psl2(6), DomainError);
  // psl2(4) and alt(5): same order, same natural subdegree multiset
  SubdegreeReport a = subdegrees(psl2(4), 0), b = subdegrees(alt(5), 0);
  CHECK(psl2(4).order() == alt(5).order());
  CHECK(a.subdegrees == b.subdegrees);
}

TEST_CASE("classical groups by forms") {
  CHECK(classical(ClassicalFamily::GL, 2, 2).elements.size() == 6);
  CHECK(classical(ClassicalFamily::SP, 4, 2).elements.size() == 720);
  CHECK(classical(ClassicalFamily::GU, 2, 2).elements.size() == 18);
  CHECK(classical(ClassicalFamily::SL, 2, 3).elements.size() == 24);
  ClassicalGroup gop = classical(ClassicalFamily::GO, 4, 3, ClassicalVariant::Plain,
                                 FormSign::Plus);
  CHECK(gop.elements.size() == 1152);
  ClassicalGroup gom = classical(ClassicalFamily::GO, 4, 3, ClassicalVariant::Plain,
                                 FormSign::Minus);
  CHECK(gom.elements.size() == 1440);
  CHECK(classical(ClassicalFamily::GO, 3, 3).elements.size() == 48);
  // every generator preserves the reference form exactly
  for (const ClassicalGroup* cg : {&gop, &gom}) {
    const Mat& J = *cg->gram;
    for (const Mat& g : cg->group.generators()) CHECK(g * J * g.transpose() == J);
  }
  // the group order through the permutation image agrees with the count
  CHECK(gop.group.order() == 1152);
  // form-preserver enumeration against literal GL filtering on a small case
  {
    ClassicalGroup sp22 = classical(ClassicalFamily::SP, 2, 3);
    std::vector<Mat> filtered;
    for (const Mat& m : classical(ClassicalFamily::GL, 2, 3).elements)
      if (m * *sp22.gram * m.transpose() == *sp22.gram) filtered.push_back(m);
    std::sort(filtered.begin(), filtered.end());
    CHECK(filtered == sp22.elements);
  }
  CHECK_THROWS_AS(classical(ClassicalFamily::GO, 4, 3, ClassicalVariant::TauExtended,
                            FormSign::Plus),
                  DomainError);
}

TEST_CASE("affine holomorphs") {
  PermGroup agl22 = affine_holomorph(MatGroup(FieldSpec::make(2, 1), 2,
                                              classical(ClassicalFamily::GL, 2, 2).group.generators()));
  CHECK(agl22.degree() == 4);
  CHECK(agl22.order() == 24);
  PermGroup hol5 = affine_holomorph(ex31_odd_module(5));
  CHECK(hol5.degree() == 25);
  SubdegreeReport sd = subdegrees(hol5, 0);
  CHECK(sd.subdegrees == std::vector<u64>{1, 4, 5, 5, 5, 5});
  PermGroup asl23 = affine_holomorph(sl2_natural(3));
  CHECK(asl23.degree() == 9);
  CHECK(subdegrees(asl23, 0).subdegrees == std::vector<u64>{1, 8});
}

TEST_CASE("product action wreath") {
  PermGroup w = product_action_wreath(sym(3), 2);
  CHECK(w.degree() == 9);
  CHECK(w.order() == 72);
  // subdegrees contain the squares of the base subdegrees
  SubdegreeReport base = subdegrees(sym(3), 0), top = subdegrees(w, 0);
  for (u64 d : base.subdegrees)
    CHECK(std::find(top.subdegrees.begin(), top.subdegrees.end(), d * d) !=
          top.subdegrees.end());
  PermGroup w11 = product_action_wreath(psl2(11), 2);
  CHECK(w11.degree() == 144);
  CHECK(w11.is_transitive());
}

TEST_CASE("frobenius holomorph products") {
  FrobeniusProduct f1 = frobenius_product({{5, 4}});
  CHECK(f1.group.degree() == 5);
  CHECK(f1.group.order() == 20);
  CHECK(subdegrees(f1.group, 0).subdegrees == std::vector<u64>{1, 4});
  FrobeniusProduct f3 = frobenius_product({{5, 4}, {7, 3}, {23, 11}});
  CHECK(f3.group.degree() == 805);
  PermGroup stab = f3.group.point_stabilizer(f3.identity_point);
  CHECK(stab.orbit_of(f3.identity_point).length == 1);
  std::vector<u64> marked;
  for (u32 pt : f3.marked_points) marked.push_back(stab.orbit_of(pt).length);
  CHECK(marked == std::vector<u64>{4, 3, 11});
  CHECK_THROWS_AS(frobenius_product({{5, 3}}), DomainError);  // 3 does not divide 4
}

TEST_CASE("mathieu data loading") {
  CHECK(mathieu(11, CGT_SOURCE_DATA).order() == 7920);
  PermGroup m23 = mathieu(23, CGT_SOURCE_DATA);
  CHECK(m23.order() == 10200960);
  CHECK(m23.point_stabilizer(0).order() == 443520);
  PermGroup m24 = mathieu(24, CGT_SOURCE_DATA);
  CHECK(m24.order() / m24.point_stabilizer(0).order() == 24);
  CHECK_THROWS_AS(mathieu(12, CGT_SOURCE_DATA), DomainError);
  // a tampered file is rejected by the order check
  {
    std::ifstream in(std::string(CGT_SOURCE_DATA) + "/mathieu11.grp");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t pos = text.find("(3 7 11 8)");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "(3 7 11 9)");
    std::string tmp = "/tmp/cgt-tampered";
    std::string dir_file = tmp + "/mathieu11.grp";
    std::ofstream out(dir_file);
    if (!out) {
      system(("mkdir -p " + tmp).c_str());
      out.open(dir_file);
    }
    out << text;
    out.close();
    CHECK_THROWS_AS(mathieu(11, tmp), ParseError);
  }
}

TEST_CASE("deterministic factories") {
  PermGroup a = sym(5), b = sym(5);
  CHECK(a.generators() == b.generators());
  auto c1 = maschke_module_corpus(99, 20), c2 = maschke_module_corpus(99, 20);
  REQUIRE(c1.size() == c2.size());
  for (size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].term == c2[i].term);
    CHECK(c1[i].group.generators().size() == c2[i].group.generators().size());
    for (size_t j = 0; j < c1[i].group.generators().size(); ++j)
      CHECK(c1[i].group.generators()[j] == c2[i].group.generators()[j]);
  }
}

TEST_CASE("ex31 factories") {
  CHECK(ex31_odd_module(5).order() == 20);
  CHECK(ex31_char2_module().order() == 24);
  CHECK_THROWS_AS(ex31_odd_module(2), DomainError);
  CHECK_THROWS_AS(ex31_odd_module(101), DomainError);
  CHECK(smallest_primitive_root(7) == 3);
}
