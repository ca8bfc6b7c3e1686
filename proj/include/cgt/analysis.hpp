#pragma once

#include <tuple>

#include "cgt/permgroup.hpp"
#include "cgt/smallgroup.hpp"

namespace cgt {

// Largest set of pairwise coprime values > 1 from the multiset; among the
// maximum cliques the lexicographically smallest witness is returned.
std::vector<u64> max_coprime_set(const std::vector<u64>& values);

struct SubdegreeReport {
  u32 degree = 0;
  u32 base = 0;
  u64 group_order = 0;
  u64 stabilizer_order = 0;
  bool regular = false;
  std::vector<u64> subdegrees;                    // sorted multiset
  std::vector<std::vector<u32>> orbits;           // aligned with subdegrees
  std::vector<bool> faithful;                     // aligned with subdegrees
  std::vector<std::pair<u32, u32>> coprime_pairs; // index pairs, gcd 1, both > 1
  std::vector<u64> max_coprime;                   // witness values
  std::vector<u64> max_coprime_faithful;          // over faithful orbits only
};

// Orbit lengths of the stabilizer of `base`; the group must be transitive.
SubdegreeReport subdegrees(const PermGroup& g, u32 base = 0);

struct FactorizationRecord {
  u64 group_order = 0, a_order = 0, b_order = 0, meet_order = 0;
  u64 index_a = 0, index_b = 0;
  bool holds = false;    // G = AB, i.e. |A||B| = |G||A n B|
  bool coprime = false;  // gcd(index_a, index_b) = 1 (and both proper)
  bool exact = false;    // A n B = 1
};

FactorizationRecord check_factorization(const PermGroup& g, const std::vector<Perm>& a_gens,
                                        const std::vector<Perm>& b_gens,
                                        u64 enum_cap = default_limits().intersection_enum_cap);

struct CoprimePair {
  u64 a_order = 0, b_order = 0, index_a = 0, index_b = 0, meet_order = 0;
  bool operator<(const CoprimePair& o) const {
    return std::tie(a_order, b_order, index_a, index_b, meet_order) <
           std::tie(o.a_order, o.b_order, o.index_a, o.index_b, o.meet_order);
  }
  bool operator==(const CoprimePair& o) const {
    return a_order == o.a_order && b_order == o.b_order && index_a == o.index_a &&
           index_b == o.index_b && meet_order == o.meet_order;
  }
};

struct CoprimeSearchResult {
  u64 group_order = 0;
  u64 subgroup_count = 0;
  u64 maximal_count = 0;
  std::vector<CoprimePair> pairs;       // every maximal coprime factorization
  std::vector<CoprimePair> signatures;  // deduplicated, sorted
};

// Exhaustive: all subgroups, maximal ones, every coprime-index pair that
// multiplies to G. Every coprime-index pair is checked to factorize.
CoprimeSearchResult coprime_factorization_search(const PermGroup& g,
                                                 u64 cap = default_limits().subgroup_enum_cap);

struct MuReport {
  u64 group_order = 0;
  std::vector<u64> realized_indices;  // of proper subgroups, sorted distinct
  u32 mu = 0;
  std::vector<u64> witness;
};

MuReport mu(const PermGroup& g, u64 cap = default_limits().subgroup_enum_cap);

// True iff every O_p(G) is trivial. Groups within the enumeration cap run
// on the element table; larger ones use the seeded sampling search from the
// documented strategy.
bool fitting_is_trivial(const PermGroup& g, u64 cap = default_limits().fitting_cap,
                        u64 seed = 0x5eed0001);

bool is_p_soluble(const PermGroup& g, u64 p);

}  // namespace cgt
