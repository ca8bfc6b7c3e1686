#pragma once

#include <unordered_map>

#include "cgt/mat.hpp"
#include "cgt/orbit.hpp"
#include "cgt/permgroup.hpp"

namespace cgt {

// A matrix group acting on row vectors from the right. Order and membership
// go through the permutation image on the union of the orbits of the
// standard basis vectors (a faithful point set).
class MatGroup {
 public:
  MatGroup() = default;
  MatGroup(Field field, u32 dim, std::vector<Mat> generators);

  u32 dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<Mat>& generators() const { return gens_; }

  struct PermImage {
    std::vector<Vec> points;
    std::unordered_map<Vec, u32, VecHash> index;
    PermGroup group;
    // matrix -> permutation of the point set (throws if it does not act)
    Perm to_perm(const Mat& m) const;
  };
  const PermImage& perm_image() const;

  u64 order() const { return perm_image().group.order(); }
  bool contains(const Mat& m) const;

  OrbitRecord<Vec> vec_orbit(const Vec& v, u64 cap = default_limits().orbit_cap) const;
  u64 vec_stabilizer_order(const Vec& v) const;

  // All elements (BFS closure of the generators); throws past cap.
  const std::vector<Mat>& elements(u64 cap = default_limits().element_enum_cap) const;

  // Elements fixing v, by enumeration.
  std::vector<Mat> vec_stabilizer_elements(const Vec& v,
                                           u64 cap = default_limits().element_enum_cap) const;

 private:
  Field field_;
  u32 dim_ = 0;
  std::vector<Mat> gens_;
  mutable std::shared_ptr<PermImage> image_;
  mutable std::shared_ptr<std::vector<Mat>> elems_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
};

// All q^dim vectors in deterministic code order.
std::vector<Vec> all_vectors(const Field& f, u32 dim, u64 cap = default_limits().vector_space_cap);

}  // namespace cgt
