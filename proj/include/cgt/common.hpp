#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgt {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resource cap was hit (orbit size, coset index, enumeration size, ...).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search finished without a definite yes/no (e.g. intertwiner sampling).
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tunable limits. All defaults follow the documented contract of each
// operation; callers override per call site where they need more room.
struct Limits {
  u64 orbit_cap = 10'000'000;        // points per orbit closure
  u64 coset_index_cap = 100'000;     // cosets in a coset action
  u64 subgroup_enum_cap = 10'000;    // |G| for full subgroup enumeration
  u64 fitting_cap = 1'000'000;       // |G| for Fitting computation
  u64 element_enum_cap = 200'000;    // |G| for element-by-element scans
  u64 intersection_enum_cap = 100'000;
  u64 vector_space_cap = 1u << 20;   // q^dim for module lattices
  u64 intertwiner_enum_cap = 1u << 20;
};

inline Limits& default_limits() {
  static Limits limits;
  return limits;
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace cgt
