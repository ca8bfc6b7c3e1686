#pragma once

#include <vector>

#include "cgt/permgroup.hpp"

namespace cgt {

// Element-level view of a group of modest order: every element is stored,
// multiplication goes through a table (small orders) or a hash lookup.
// Element 0 is the identity; elements are sorted, so indices are canonical.
class SmallGroup {
 public:
  explicit SmallGroup(const PermGroup& g, u64 cap = default_limits().subgroup_enum_cap);

  u64 size() const { return elems_.size(); }
  const Perm& elem(u32 i) const { return elems_[i]; }
  const PermGroup& group() const { return group_; }
  u32 index_of(const Perm& p) const;

  u32 mult(u32 a, u32 b) const;
  u32 inv(u32 a) const;
  u32 conj(u32 a, u32 b) const { return mult(mult(inv(b), a), b); }  // a^b
  u64 element_order(u32 a) const;

  // Subgroup as a sorted element-index list plus membership bitset.
  struct Sub {
    std::vector<u32> elems;
    std::vector<u64> bits;
    std::vector<u32> gens;
    bool contains(u32 i) const { return bits[i >> 6] >> (i & 63) & 1; }
    u64 order() const { return elems.size(); }
    bool operator==(const Sub& o) const { return bits == o.bits; }
  };

  Sub closure(std::vector<u32> gens) const;
  Sub whole() const;
  Sub trivial() const;
  Sub intersect(const Sub& a, const Sub& b) const;
  Sub conjugate(const Sub& s, u32 g) const;
  Sub normal_closure(const std::vector<u32>& gens) const;
  bool is_normal(const Sub& s) const;
  bool is_nilpotent(const Sub& s) const;

  // All subgroups, cyclic-seed + one-generator extensions to a fixpoint,
  // returned sorted by (order, element list).
  std::vector<Sub> all_subgroups() const;

  // Representatives of conjugacy classes, ascending indices.
  std::vector<u32> class_representatives() const;

  Sub sylow(u64 p) const;
  Sub core_p(u64 p) const;        // intersection of all Sylow p-subgroups
  bool fitting_trivial() const;   // every O_p trivial
  bool p_soluble(u64 p) const;
  Sub hall_p_prime(u64 p) const;  // requires p-solubility

  std::vector<u64> prime_divisors() const;

 private:
  PermGroup group_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, u32, PermHash> index_;
  std::vector<u32> inv_;
  std::vector<u16> table_;  // |G|^2 multiplication table when small enough
  bool has_table_ = false;

  Sub from_indices(std::vector<u32> idx) const;
};

}  // namespace cgt
