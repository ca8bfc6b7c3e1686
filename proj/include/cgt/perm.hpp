#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// A permutation of {0,...,degree-1} stored as its image array.
// Products compose left to right: (p * q) maps x to q[p[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<u32> images);
  static Perm identity(u32 degree);

  u32 degree() const { return static_cast<u32>(img_.size()); }
  u32 operator[](u32 point) const { return img_[point]; }
  const std::vector<u32>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm power(i64 exponent) const;
  u64 order() const;

  bool operator==(const Perm& other) const { return img_ == other.img_; }
  bool operator!=(const Perm& other) const { return img_ != other.img_; }
  bool operator<(const Perm& other) const { return img_ < other.img_; }

  // Disjoint cycle form with 1-based points, "()" for the identity.
  std::string to_cycles() const;

 private:
  std::vector<u32> img_;
};

// Parses cycle notation with 1-based points; cycles need not be disjoint and
// the rightmost cycle acts first, so "(1 2)(1 3)" is the 3-cycle 1->3->2->1.
Perm parse_perm(const std::string& text, u32 degree);

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (u32 x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace cgt
