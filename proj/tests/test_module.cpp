#include <doctest.h>

#include <random>

#include "cgt/constructions.hpp"
#include "cgt/corpus.hpp"
#include "cgt/module.hpp"
#include "cgt/sweeps.hpp"

using namespace cgt;

TEST_CASE("vector orbits of the running examples") {
  MatGroup odd5 = ex31_odd_module(5);
  CHECK(odd5.order() == 20);
  u64 lambda = smallest_primitive_root(5);
  CHECK(odd5.vec_orbit({0, 0}).length == 1);
  CHECK(odd5.vec_orbit({lambda, 0}).length == 4);  // p - 1
  CHECK(odd5.vec_stabilizer_order({lambda, 0}) == 5);

  MatGroup char2 = ex31_char2_module();
  CHECK(char2.order() == 24);
  CHECK(char2.vec_orbit({1, 0, 0}).length == 4);
  CHECK(char2.vec_orbit({1, 1, 0}).length == 3);
  // stabilizer orders: a -> 6, b -> 8, a+b -> 6; intersection has order 2
  CHECK(char2.vec_stabilizer_order({1, 0, 0}) == 6);
  CHECK(char2.vec_stabilizer_order({1, 1, 0}) == 8);
  CHECK(char2.vec_stabilizer_order({0, 1, 0}) == 6);
  auto ca = char2.vec_stabilizer_elements({1, 0, 0});
  auto cb = char2.vec_stabilizer_elements({1, 1, 0});
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  std::vector<Mat> meet;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(meet));
  CHECK(meet.size() == 2);
}

TEST_CASE("stabilizer order by enumeration agrees with orbit quotient") {
  for (const auto& it : {ModuleItem{"sl23", sl2_natural(3)}, ModuleItem{"x", ex31_char2_module()}}) {
    for (const Vec& v : all_vectors(it.group.field(), it.group.dim())) {
      CHECK(it.group.vec_stabilizer_elements(v).size() == it.group.vec_stabilizer_order(v));
    }
  }
}

TEST_CASE("fixed spaces") {
  Field f3 = FieldSpec::make(3, 1);
  CHECK(fixed_space({Mat::identity(f3, 4)}).dim() == 4);
  MatGroup s4mod = perm_module(sym(4), f3);
  Subspace fs = fixed_space(s4mod);
  CHECK(fs.dim() == 1);
  CHECK(fs.contains({1, 1, 1, 1}));
  CHECK(fixed_space(ex31_char2_module()).dim() == 0);
}

TEST_CASE("dual groups") {
  // orthogonal generators are self-dual
  Field f3 = FieldSpec::make(3, 1);
  Mat rot = Mat::from_rows(f3, {{0, 1}, {2, 0}});  // preserves the identity form
  MatGroup g(f3, 2, {rot});
  CHECK(dual_group(g).generators()[0] == rot);
  // double dual returns the original generators entrywise
  MatGroup sl23 = sl2_natural(3);
  MatGroup dd = dual_group(dual_group(sl23));
  for (size_t i = 0; i < sl23.generators().size(); ++i)
    CHECK(dd.generators()[i] == sl23.generators()[i]);
  // the uniserial structure flips under duality
  MatGroup char2 = ex31_char2_module();
  CHECK(fixed_space(char2).dim() == 0);
  CHECK(fixed_space(dual_group(char2)).dim() == 1);
}

TEST_CASE("spin") {
  MatGroup char2 = ex31_char2_module();
  Vec zero{0, 0, 0};
  CHECK(spin(char2, zero).dim() == 0);
  // e1 + e2 + M1 generates the unique proper submodule
  CHECK(spin(char2, {1, 1, 0}).dim() == 2);
  MatGroup sl27 = sl2_natural(7);
  for (const Vec& v : all_vectors(sl27.field(), 2))
    if (v != Vec{0, 0}) CHECK(spin(sl27, v).dim() == 2);
}

TEST_CASE("submodule lattices") {
  CHECK(submodule_lattice(sl2_natural(3)).size() == 2);
  // Sym(4) permutation module over GF(2) is uniserial with 4 submodules
  Field f2 = FieldSpec::make(2, 1);
  MatGroup m = perm_module(sym(4), f2);
  auto lattice = submodule_lattice(m);
  REQUIRE(lattice.size() == 4);
  CHECK(lattice[0].dim() == 0);
  CHECK(lattice[1].dim() == 1);
  CHECK(lattice[1].contains({1, 1, 1, 1}));
  CHECK(lattice[2].dim() == 3);
  CHECK(lattice[2].contains({1, 1, 0, 0}));
  CHECK(!lattice[2].contains({1, 0, 0, 0}));
  CHECK(lattice[3].dim() == 4);
  // direct sum of two non-isomorphic irreducibles: exactly 4 submodules
  Field f3 = FieldSpec::make(3, 1);
  Mat block(f3, 3, 3);
  block.at(0, 0) = 2;  // scalar of order 2 on a line
  const Mat& s = sl2_natural(3).generators()[0];
  for (u32 i = 0; i < 2; ++i)
    for (u32 j = 0; j < 2; ++j) block.at(1 + i, 1 + j) = s.at(i, j);
  Mat block2 = Mat::identity(f3, 3);
  const Mat& s2 = sl2_natural(3).generators()[1];
  for (u32 i = 0; i < 2; ++i)
    for (u32 j = 0; j < 2; ++j) block2.at(1 + i, 1 + j) = s2.at(i, j);
  CHECK(submodule_lattice(MatGroup(f3, 3, {block, block2})).size() == 4);
}

TEST_CASE("irreducibility and complete reducibility") {
  CHECK(!is_completely_reducible(ex31_char2_module()));
  CHECK(is_irreducible(gl32_natural()));
  // Maschke shortcut: char coprime to the order
  Field f7 = FieldSpec::make(7, 1);
  CHECK(is_completely_reducible(perm_module(sym(3), f7)));
  CHECK(!is_irreducible(perm_module(sym(3), f7)));
}

TEST_CASE("psi map") {
  Field f7 = FieldSpec::make(7, 1);
  MatGroup s3 = perm_module(sym(3), f7);
  std::vector<Mat> elems = s3.elements();
  REQUIRE(elems.size() == 6);
  CHECK(psi_map({1, 0, 0}, {Mat::identity(f7, 3)}) == Vec{1, 0, 0});
  CHECK(psi_map({1, 0, 0}, elems) == Vec{2, 2, 2});
  // a fixed vector maps to |L| times itself
  CHECK(psi_map({1, 1, 1}, elems) == Vec{6, 6, 6});
  // image lies in the fixed space, seeded triples
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Vec v{rng() % 7, rng() % 7, rng() % 7};
    CHECK(fixed_space(s3).contains(psi_map(v, elems)));
  }
}

TEST_CASE("module isomorphism") {
  MatGroup g = sl2_natural(3);
  CHECK(module_isomorphic(g, g));
  // conjugate by a basis change
  Field f3 = g.field();
  Mat x = Mat::from_rows(f3, {{1, 1}, {0, 1}});
  Mat xi = *x.inverse();
  std::vector<Mat> conj;
  for (const Mat& m : g.generators()) conj.push_back(xi * m * x);
  CHECK(module_isomorphic(g, MatGroup(f3, 2, conj)));
  // scalar 2 vs scalar 4 over GF(7)
  Field f7 = FieldSpec::make(7, 1);
  Mat two(f7, 1, 1), four(f7, 1, 1);
  two.at(0, 0) = 2;
  four.at(0, 0) = 4;
  CHECK(!module_isomorphic(MatGroup(f7, 1, {two}), MatGroup(f7, 1, {four})));
}

TEST_CASE("orbit-stabilizer across a corpus") {
  for (const auto& it : irreducible_module_corpus()) {
    if (it.group.dim() > 3) continue;
    u64 order = it.group.order();
    for (const Vec& v : all_vectors(it.group.field(), it.group.dim()))
      CHECK(it.group.vec_orbit(v).length * it.group.vec_stabilizer_order(v) == order);
  }
}

TEST_CASE("restriction to a submodule") {
  MatGroup char2 = ex31_char2_module();
  auto lattice = submodule_lattice(char2);
  for (const auto& w : lattice) {
    if (w.dim() != 2) continue;
    MatGroup sub = restrict_to_submodule(char2, w);
    CHECK(sub.dim() == 2);
    CHECK(sub.order() == 6);
    CHECK(is_irreducible(sub));
  }
}
