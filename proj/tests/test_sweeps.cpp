#include <doctest.h>

#include "cgt/registry.hpp"
#include "cgt/sweeps.hpp"

using namespace cgt;

TEST_CASE("vector orbit partitions") {
  MatGroup g = sl2_natural(3);
  VectorOrbits vo = vector_orbits(g);
  u64 total = 0;
  for (u64 len : vo.lengths) total += len;
  CHECK(total == 9);
  CHECK(vo.lengths.size() == 2);  // zero vector + one transitive orbit
  u64 order = g.order();
  for (u64 len : vo.lengths) CHECK(order % len == 0);
  for (u32 i = 0; i < vo.vectors.size(); ++i)
    CHECK(vo.orbit_id[vector_rank(g.field(), vo.vectors[i])] == vo.orbit_id[i]);
}

TEST_CASE("matrix recovery from the permutation image") {
  MatGroup g = gl32_natural();
  const auto& im = g.perm_image();
  for (const Mat& m : g.generators()) CHECK(matrix_from_image_perm(g, im.to_perm(m)) == m);
}

TEST_CASE("cheap sweeps are clean") {
  for (TheoremId id : {TheoremId::L2_2, TheoremId::L5_3, TheoremId::T1_6}) {
    SweepReport rep = thm_sweep(id);
    CHECK(rep.failures == 0);
    CHECK(rep.passes >= 1);
  }
}

TEST_CASE("theorem names round trip") {
  for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::C1_3, TheoremId::T1_4,
                       TheoremId::L2_2, TheoremId::T1_6, TheoremId::T1_9, TheoremId::L5_2,
                       TheoremId::L5_3, TheoremId::L6_2})
    CHECK(parse_theorem(theorem_name(id)) == id);
  CHECK(!parse_theorem("nope").has_value());
}

TEST_CASE("registry wiring") {
  CHECK(find_verify_case("ex3.1-p2") != nullptr);
  CHECK(find_verify_case("ex4.4") != nullptr);
  CHECK(find_verify_case("missing-case") == nullptr);
  // every acceptance criterion is carried by at least one registered case
  for (const std::string crit : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9",
                                 "A10", "A11"}) {
    bool covered = false;
    for (const auto& c : verify_registry())
      for (const auto& cr : c.criteria)
        if (cr == crit) covered = true;
    CHECK_MESSAGE(covered, crit);
  }
  // the missing-data skip contract
  VerifyContext ctx;
  ctx.data_dir = "/nonexistent";
  const VerifyCase* hs = find_verify_case("ex1.11-hs");
  REQUIRE(hs != nullptr);
  CaseResult r = run_verify_case(*hs, ctx);
  CHECK(r.status == "skipped");
}
