#include "cgt/mat.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

Mat::Mat(Field field, u32 rows, u32 cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Mat Mat::identity(Field field, u32 n) {
  Mat m(std::move(field), n, n);
  for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field field, const std::vector<Vec>& rows) {
  if (rows.empty()) throw DomainError("matrix needs at least one row");
  Mat m(field, static_cast<u32>(rows.size()), static_cast<u32>(rows[0].size()));
  for (u32 r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw DomainError("ragged matrix rows");
    for (u32 c = 0; c < m.cols(); ++c) {
      u64 v = rows[r][c];
      if (field->k() == 1) v %= field->p();
      else if (v >= field->q()) throw DomainError("field element code out of range");
      m.at(r, c) = v;
    }
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  const FieldSpec& f = *field_;
  Mat r(field_, rows_, o.cols_);
  for (u32 i = 0; i < rows_; ++i)
    for (u32 k = 0; k < cols_; ++k) {
      u64 a = at(i, k);
      if (a == 0) continue;
      for (u32 j = 0; j < o.cols_; ++j) {
        u64 b = o.at(k, j);
        if (b == 0) continue;
        r.at(i, j) = f.add(r.at(i, j), f.mul(a, b));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->add(e_[i], o.e_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->sub(e_[i], o.e_[i]);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (u32 i = 0; i < rows_; ++i)
    for (u32 j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (u32 i = 0; i < rows_; ++i)
    for (u32 j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const FieldSpec& f = *field_;
  u32 n = rows_;
  std::vector<Vec> aug(n, Vec(2 * n, 0));
  for (u32 i = 0; i < n; ++i) {
    for (u32 j = 0; j < n; ++j) aug[i][j] = at(i, j);
    aug[i][n + i] = 1;
  }
  for (u32 col = 0; col < n; ++col) {
    u32 pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    u64 scale = f.inv(aug[col][col]);
    for (u32 j = 0; j < 2 * n; ++j) aug[col][j] = f.mul(aug[col][j], scale);
    for (u32 i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      u64 factor = aug[i][col];
      for (u32 j = 0; j < 2 * n; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(factor, aug[col][j]));
    }
  }
  Mat r(field_, n, n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) r.at(i, j) = aug[i][n + j];
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream out;
  out << '[';
  for (u32 i = 0; i < rows_; ++i) {
    out << '[';
    for (u32 j = 0; j < cols_; ++j) {
      out << field_->to_string(at(i, j));
      if (j + 1 < cols_) out << ',';
    }
    out << ']';
    if (i + 1 < rows_) out << ',';
  }
  out << ']';
  return out.str();
}

Vec apply_row(const Vec& v, const Mat& m) {
  const FieldSpec& f = *m.field();
  Vec r(m.cols(), 0);
  for (u32 i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (u32 j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
    }
  }
  return r;
}

u32 rref(Field f, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  u32 cols = static_cast<u32>(rows[0].size());
  u32 rank = 0;
  for (u32 col = 0; col < cols && rank < rows.size(); ++col) {
    u32 pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 scale = f->inv(rows[rank][col]);
    for (u32 j = 0; j < cols; ++j) rows[rank][j] = f->mul(rows[rank][j], scale);
    for (u32 i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      u64 factor = rows[i][col];
      for (u32 j = 0; j < cols; ++j)
        rows[i][j] = f->sub(rows[i][j], f->mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

std::vector<Vec> left_kernel(const Mat& m) {
  // Solve v * m = 0: reduce m^T and read the free-variable solutions.
  Field f = m.field();
  Mat t = m.transpose();
  std::vector<Vec> rows(t.rows(), Vec(t.cols(), 0));
  for (u32 i = 0; i < t.rows(); ++i)
    for (u32 j = 0; j < t.cols(); ++j) rows[i][j] = t.at(i, j);
  u32 n = t.cols();  // number of unknowns == m.rows()
  rref(f, rows);
  std::vector<i64> pivot_of_col(n, -1);
  for (u32 r = 0; r < rows.size(); ++r)
    for (u32 c = 0; c < n; ++c)
      if (rows[r][c] != 0) {
        pivot_of_col[c] = r;
        break;
      }
  std::vector<Vec> basis;
  for (u32 c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (u32 cc = 0; cc < n; ++cc) {
      i64 pr = pivot_of_col[cc];
      if (pr >= 0) v[cc] = f->neg(rows[pr][c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace::Subspace(Field field, u32 ambient_dim, std::vector<Vec> spanning)
    : field_(std::move(field)), ambient_(ambient_dim), basis_(std::move(spanning)) {
  for (const Vec& v : basis_)
    if (v.size() != ambient_) throw DomainError("vector dimension mismatch");
  rref(field_, basis_);
}

bool Subspace::contains(const Vec& v) const {
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rref(field_, rows) == dim();
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(field_, ambient_, std::move(rows));
}

u32 Subspace::intersection_dim(const Subspace& o) const {
  return dim() + o.dim() - sum(o).dim();
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_ < o.basis_;
}

}  // namespace cgt
