#pragma once

#include "cgt/constructions.hpp"
#include "cgt/matgroup.hpp"

namespace cgt {

// Full permutation module of a permutation group over f (dim = degree).
MatGroup perm_module(const PermGroup& g, const Field& f);
Mat perm_matrix(const Field& f, const Perm& p);

// Deleted permutation module: action on the quotient basis f_i = e_i - e_n
// (dim = degree - 1); irreducible when char does not divide the degree.
MatGroup deleted_perm_module(const PermGroup& g, const Field& f);

// 1x1 scalar block of multiplicative order d (needs d | q-1).
Mat scalar_block(const Field& f, u64 d);

// Natural SL(2,q) as matrices.
MatGroup sl2_natural(u64 q);
// Natural GL(2,q).
MatGroup gl2_natural(u64 q);
// GL(3,2) natural 3-dimensional module.
MatGroup gl32_natural();

struct ModuleItem {
  std::string term;
  MatGroup group;
};

// Seeded direct-sum corpus for the completely reducible sweeps: |H| <= 2000,
// dim <= 6, q <= 9, characteristic coprime to |H| (Maschke gate). At least
// `min_items` items, a guaranteed supply of coprime-orbit-length pairs.
std::vector<ModuleItem> maschke_module_corpus(u64 seed, size_t min_items);

// Irreducible modules (spin-verified by the caller/tests).
std::vector<ModuleItem> irreducible_module_corpus();

// p-soluble groups with modules in their defining characteristic (plus
// coprime-characteristic items); used by the Sylow-fixed-vector sweep.
std::vector<ModuleItem> p_soluble_module_corpus();

struct TransitiveItem {
  std::string term;
  PermGroup group;
  bool primitive = false;  // recipe metadata
};

// Desk-scale transitive groups for the faithful-subdegree sweeps.
std::vector<TransitiveItem> transitive_corpus();

}  // namespace cgt
