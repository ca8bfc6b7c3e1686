#pragma once

#include <optional>

#include "cgt/analysis.hpp"
#include "cgt/corpus.hpp"
#include "cgt/module.hpp"

namespace cgt {

enum class TheoremId { T1_1, T1_2, C1_3, T1_4, L2_2, T1_6, T1_9, L5_2, L5_3, L6_2 };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

struct SweepItemResult {
  std::string item;
  std::string status;  // pass | fail | skip
  std::string detail;
  u64 checked = 0;
};

struct SweepReport {
  TheoremId theorem = TheoremId::T1_1;
  u64 seed = 0;
  std::vector<SweepItemResult> items;
  u64 passes = 0, failures = 0, skips = 0, checked = 0;
  u64 interesting = 0;  // theorem-specific: e.g. items with a coprime pair
};

SweepReport thm_sweep(TheoremId id, u64 seed = 20260801);

// Orbit partition of the full vector space under a matrix group.
struct VectorOrbits {
  std::vector<Vec> vectors;   // all q^dim in code order
  std::vector<u32> orbit_id;  // aligned with vectors
  std::vector<u64> lengths;   // per orbit
  std::vector<u32> rep;       // vector position of the first point per orbit
};
VectorOrbits vector_orbits(const MatGroup& g, u64 cap = default_limits().vector_space_cap);

// The matrix realizing a permutation of the perm-image point set.
Mat matrix_from_image_perm(const MatGroup& g, const Perm& p);

}  // namespace cgt
