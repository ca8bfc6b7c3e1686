#pragma once

#include <optional>

#include "cgt/gf.hpp"

namespace cgt {

using Vec = std::vector<u64>;  // row vector of field element codes

// Dense matrix over a FieldSpec, row major. Vectors act on the right
// (row-vector convention), so the group action on V is v -> v * g.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, u32 rows, u32 cols);
  static Mat identity(Field field, u32 n);
  static Mat from_rows(Field field, const std::vector<Vec>& rows);

  u32 rows() const { return rows_; }
  u32 cols() const { return cols_; }
  const Field& field() const { return field_; }
  u64 at(u32 r, u32 c) const { return e_[r * cols_ + c]; }
  u64& at(u32 r, u32 c) { return e_[r * cols_ + c]; }
  const std::vector<u64>& entries() const { return e_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat transpose() const;
  std::optional<Mat> inverse() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const { return e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const { return e_ < o.e_; }
  std::string to_string() const;

 private:
  Field field_;
  u32 rows_ = 0, cols_ = 0;
  std::vector<u64> e_;
};

Vec apply_row(const Vec& v, const Mat& m);

// Reduced row echelon form; returns rank, modifies rows in place.
u32 rref(Field f, std::vector<Vec>& rows);

// Basis of {v : v * m == 0} (left null space).
std::vector<Vec> left_kernel(const Mat& m);

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = 1469598103934665603ull;
    for (u64 x : m.entries()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (u64 x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Subspace given by a reduced-echelon basis (canonical form).
class Subspace {
 public:
  Subspace(Field field, u32 ambient_dim, std::vector<Vec> spanning = {});

  u32 dim() const { return static_cast<u32>(basis_.size()); }
  u32 ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const Field& field() const { return field_; }

  bool contains(const Vec& v) const;
  Subspace sum(const Subspace& o) const;
  u32 intersection_dim(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const;

 private:
  Field field_;
  u32 ambient_ = 0;
  std::vector<Vec> basis_;
};

}  // namespace cgt
