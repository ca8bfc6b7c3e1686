#pragma once

#include "cgt/matgroup.hpp"

namespace cgt {

// Simultaneous fixed space {v : v*g = v for every generator}.
Subspace fixed_space(const std::vector<Mat>& gens);
Subspace fixed_space(const MatGroup& g);

// Generators replaced by transpose-inverse (the dual module).
MatGroup dual_group(const MatGroup& g);

// Smallest invariant subspace containing v.
Subspace spin(const MatGroup& g, const Vec& v);

// Every invariant subspace: sums of cyclic spins, plus 0. Sorted by
// (dimension, canonical basis).
std::vector<Subspace> submodule_lattice(const MatGroup& g,
                                        u64 cap = default_limits().vector_space_cap);

bool is_irreducible(const MatGroup& g, u64 cap = default_limits().vector_space_cap);
bool is_completely_reducible(const MatGroup& g, u64 cap = default_limits().vector_space_cap);

// Action of g on an invariant subspace, written in the subspace basis.
MatGroup restrict_to_submodule(const MatGroup& g, const Subspace& w);

// Sum of the translates of v under the listed elements.
Vec psi_map(const Vec& v, const std::vector<Mat>& elements);

// True iff an invertible X with X*g1[i] = g2[i]*X exists for the generator
// pairing. Exhausts the solution space when it has at most `enum_cap`
// members, otherwise samples 64 seeded candidates and throws Inconclusive
// if none of them is invertible.
bool module_isomorphic(const MatGroup& g1, const MatGroup& g2,
                       u64 enum_cap = default_limits().intertwiner_enum_cap);

}  // namespace cgt
