#include <doctest.h>

#include <random>

#include "cgt/gf.hpp"
#include "cgt/mat.hpp"

using namespace cgt;

TEST_CASE("field construction") {
  Field f7 = FieldSpec::make(7, 1);
  CHECK(f7->q() == 7);
  Field f4 = FieldSpec::make(2, 2);
  CHECK(f4->modulus() == std::vector<u64>{1, 1, 1});  // x^2 + x + 1
  Field f9 = FieldSpec::make(3, 2);
  for (u64 a = 0; a < 9; ++a) CHECK(f9->pow(a, 9) == a);  // Frobenius fixed points
  CHECK_THROWS_AS(FieldSpec::make(6, 1), DomainError);
  CHECK_THROWS_AS(FieldSpec::make(2, 25), DomainError);
}

TEST_CASE("field axioms, seeded") {
  for (auto [p, k] : std::initializer_list<std::pair<u64, u32>>{{5, 1}, {2, 3}, {3, 2}}) {
    Field f = FieldSpec::make(p, k);
    std::mt19937_64 rng(42 * p + k);
    for (int i = 0; i < 200; ++i) {
      u64 a = rng() % f->q(), b = rng() % f->q(), c = rng() % f->q();
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
    // Frobenius is additive and fixes exactly the prime field
    u64 fixed = 0;
    for (u64 a = 0; a < f->q(); ++a)
      if (f->frobenius(a) == a) ++fixed;
    CHECK(fixed == p);
  }
}

TEST_CASE("element text round trip") {
  Field f9 = FieldSpec::make(3, 2);
  for (u64 a = 0; a < 9; ++a) CHECK(f9->parse(f9->to_string(a)) == a);
  CHECK(f9->parse("1+2*t") == f9->from_coeffs({1, 2}));
}

TEST_CASE("matrix inverse and rank") {
  Field f5 = FieldSpec::make(5, 1);
  std::mt19937_64 rng(9);
  int invertible = 0;
  for (int i = 0; i < 100; ++i) {
    Mat m(f5, 3, 3);
    for (u32 r = 0; r < 3; ++r)
      for (u32 c = 0; c < 3; ++c) m.at(r, c) = rng() % 5;
    auto inv = m.inverse();
    if (inv) {
      ++invertible;
      CHECK((m * *inv).is_identity());
    }
  }
  CHECK(invertible > 50);
}

TEST_CASE("kernel and subspaces") {
  Field f3 = FieldSpec::make(3, 1);
  // v * M = 0 for M with rank 1
  Mat m = Mat::from_rows(f3, {{1, 2}, {2, 4 % 3}});
  auto ker = left_kernel(m);
  CHECK(ker.size() == 1);
  for (const Vec& v : ker) CHECK(apply_row(v, m) == Vec{0, 0});

  Subspace a(f3, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace b(f3, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(a.dim() == 2);
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersection_dim(b) == 1);
  CHECK(a.contains({1, 2, 0}));
  CHECK(!a.contains({0, 0, 1}));
}
