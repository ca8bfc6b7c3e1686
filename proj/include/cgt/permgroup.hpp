#pragma once

#include <memory>
#include <unordered_map>
#include <mutex>
#include <vector>

#include "cgt/orbit.hpp"
#include "cgt/perm.hpp"
#include "cgt/stabchain.hpp"

namespace cgt {

// A permutation group given by generators, with a lazily built stabilizer
// chain. Immutable once the chain exists; safe to share across readers.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(u32 degree, std::vector<Perm> generators);

  u32 degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // Rigorously pre-established order; lets the chain build stop early.
  void set_known_order(u64 order) { known_order_ = order; }

  const StabChain& chain() const;
  u64 order() const { return chain().order(); }
  bool contains(const Perm& g) const;

  OrbitRecord<u32> orbit_of(u32 point, u64 cap = default_limits().orbit_cap,
                            bool with_tree = false) const;
  std::vector<std::vector<u32>> point_orbits() const;
  bool is_transitive() const;

  // Only the identity fixes every listed point.
  bool is_faithful_on(const std::vector<u32>& points) const;

  // Generated by the strong generators fixing `point` (chain rebuilt with
  // that point first); satisfies |G| = |stabilizer| * |orbit(point)|.
  PermGroup point_stabilizer(u32 point) const;

  // All elements by closure; throws CapExceeded if more than cap.
  std::vector<Perm> elements(u64 cap = default_limits().subgroup_enum_cap) const;

 private:
  u32 degree_ = 0;
  std::vector<Perm> gens_;
  u64 known_order_ = 0;
  mutable std::shared_ptr<const StabChain> chain_;
  std::shared_ptr<std::mutex> chain_mutex_ = std::make_shared<std::mutex>();
};

// Image of `g` under the right-multiplication coset action built by
// coset_action (see analysis of positions there).
struct CosetAction {
  PermGroup image;                 // degree = index
  u64 index = 0;
  std::vector<Perm> coset_reps;    // canonical representative per position
  // Image of an arbitrary element of the parent group.
  Perm act(const Perm& g) const;
  const StabChain* sub_chain = nullptr;  // not owned; see holder below
  std::shared_ptr<const StabChain> sub_chain_holder;
  mutable std::unordered_map<Perm, u32, PermHash> position;
};

// Right-multiplication action of `group` on right cosets of the subgroup
// generated by sub_gens (membership-checked). Coset positions follow
// breadth-first discovery from the trivial coset, generators in input order.
CosetAction coset_action(const PermGroup& group, const std::vector<Perm>& sub_gens,
                         u64 index_cap = default_limits().coset_index_cap);

}  // namespace cgt
