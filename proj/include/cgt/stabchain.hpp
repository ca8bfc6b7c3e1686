#pragma once

#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

// One level of a stabilizer chain: the orbit of base_point under gens,
// with the transversal kept as a Schreier vector (prev point + generator).
struct ChainLevel {
  u32 base_point = 0;
  std::vector<Perm> gens;
  std::vector<u32> orbit;   // discovery order, orbit[0] == base_point
  std::vector<i64> pos;     // point -> index in orbit, -1 if outside
  std::vector<u32> prev;    // predecessor point on the Schreier tree
  std::vector<u32> via;     // generator index used on the tree edge
};

// Base and strong generating set, built by the deterministic Schreier-Sims
// procedure (base points are smallest moved points, generators processed in
// input order). If known_order > 0, generator processing stops as soon as
// the transversal product reaches it; the product can never exceed the true
// order, so the resulting chain is complete.
class StabChain {
 public:
  static StabChain build(u32 degree, const std::vector<Perm>& generators,
                         const std::vector<u32>& base_hint = {},
                         u64 known_order = 0);

  u32 degree() const { return degree_; }
  u64 order() const;
  const std::vector<ChainLevel>& levels() const { return levels_; }

  // Transversal element mapping the level's base point to `point`.
  Perm transversal_rep(size_t level, u32 point) const;

  // Strips through levels [from, end); returns the residue and the level at
  // which stripping stopped (levels_.size() if it ran through all of them).
  std::pair<size_t, Perm> strip(const Perm& g, size_t from = 0) const;

  bool contains(const Perm& g) const;

  // Generators fixing the first `fixed` base points (S_{fixed+1} in the
  // usual notation); for fixed >= #levels the group is trivial.
  std::vector<Perm> stabilizer_gens(size_t fixed) const;

 private:
  u32 degree_ = 0;
  std::vector<ChainLevel> levels_;

  void recompute_orbit(size_t level);
  void extend_base(u32 point);
  u64 transversal_product() const;
};

}  // namespace cgt
