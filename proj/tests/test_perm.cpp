#include <doctest.h>

#include <random>

#include "cgt/perm.hpp"

using namespace cgt;

namespace {
Perm random_perm(u32 n, std::mt19937_64& rng) {
  std::vector<u32> img(n);
  for (u32 i = 0; i < n; ++i) img[i] = i;
  for (u32 i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Perm(img);
}
}  // namespace

TEST_CASE("cycle parsing") {
  CHECK(parse_perm("(1 2 3)", 3).images() == std::vector<u32>{1, 2, 0});
  CHECK(parse_perm("()", 4) == Perm::identity(4));
  // rightmost cycle first: (1 2)(1 3) is the 3-cycle 1 -> 3 -> 2 -> 1
  CHECK(parse_perm("(1 2)(1 3)", 3).images() == std::vector<u32>{2, 0, 1});
  CHECK(parse_perm("(1,2,3)(4 5)", 5).order() == 6);
  CHECK_THROWS_AS(parse_perm("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("(1 2 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("(0 1)", 3), ParseError);
}

TEST_CASE("cycle printing round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Perm p = random_perm(9, rng);
    CHECK(parse_perm(p.to_cycles(), 9) == p);
  }
  CHECK(Perm::identity(5).to_cycles() == "()");
}

TEST_CASE("group law") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Perm p = random_perm(8, rng), q = random_perm(8, rng), r = random_perm(8, rng);
    CHECK(p * p.inverse() == Perm::identity(8));
    CHECK((p * q) * r == p * (q * r));
    // left-to-right application
    u32 x = rng() % 8;
    CHECK((p * q)[x] == q[p[x]]);
  }
  CHECK(parse_perm("(1 2 3 4 5 6)", 6).order() == 6);
  CHECK(parse_perm("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(parse_perm("(1 2 3)", 3).power(-1) == parse_perm("(1 3 2)", 3));
}

TEST_CASE("image array must be a bijection") {
  CHECK_THROWS_AS(Perm(std::vector<u32>{0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Perm(std::vector<u32>{0, 3, 1}), DomainError);
}
