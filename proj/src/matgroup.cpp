#include "cgt/matgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace cgt {

MatGroup::MatGroup(Field field, u32 dim, std::vector<Mat> generators)
    : field_(std::move(field)), dim_(dim), gens_(std::move(generators)) {
  for (const Mat& g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_) throw DomainError("generator shape mismatch");
    if (!g.field()->same_as(*field_)) throw DomainError("generator field mismatch");
    if (!g.inverse()) throw DomainError("matrix group generator is singular");
  }
}

Perm MatGroup::PermImage::to_perm(const Mat& m) const {
  std::vector<u32> img(points.size());
  for (u32 i = 0; i < points.size(); ++i) {
    auto it = index.find(apply_row(points[i], m));
    if (it == index.end()) throw DomainError("matrix does not preserve the point set");
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

const MatGroup::PermImage& MatGroup::perm_image() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  if (image_) return *image_;
  auto im = std::make_shared<PermImage>();
  for (u32 b = 0; b < dim_; ++b) {
    Vec e(dim_, 0);
    e[b] = 1;
    if (im->index.count(e)) continue;
    auto rec = orbit_closure<Vec, std::function<Vec(const Vec&, size_t)>, VecHash>(
        e, gens_.size(), [&](const Vec& v, size_t gi) { return apply_row(v, gens_[gi]); },
        default_limits().orbit_cap);
    for (const Vec& v : rec.points) {
      if (im->index.count(v)) continue;  // overlapping orbits collapse
      im->index.emplace(v, static_cast<u32>(im->points.size()));
      im->points.push_back(v);
    }
  }
  std::vector<Perm> pgens;
  for (const Mat& g : gens_) pgens.push_back(im->to_perm(g));
  im->group = PermGroup(static_cast<u32>(im->points.size()), std::move(pgens));
  image_ = im;
  return *image_;
}

bool MatGroup::contains(const Mat& m) const {
  const PermImage& im = perm_image();
  try {
    Perm p = im.to_perm(m);
    if (!im.group.contains(p)) return false;
    // the image can identify matrices only if the point set spans; it does
    // (it contains the standard basis), so p determines m uniquely
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

OrbitRecord<Vec> MatGroup::vec_orbit(const Vec& v, u64 cap) const {
  if (v.size() != dim_) throw DomainError("vector dimension mismatch");
  return orbit_closure<Vec, std::function<Vec(const Vec&, size_t)>, VecHash>(
      v, gens_.size(), [&](const Vec& x, size_t gi) { return apply_row(x, gens_[gi]); }, cap);
}

u64 MatGroup::vec_stabilizer_order(const Vec& v) const {
  return order() / vec_orbit(v).length;
}

const std::vector<Mat>& MatGroup::elements(u64 cap) const {
  std::lock_guard<std::mutex> lock(*mutex_);
  if (elems_) {
    if (elems_->size() > cap) throw CapExceeded("element enumeration cap exceeded");
    return *elems_;
  }
  auto out = std::make_shared<std::vector<Mat>>();
  std::unordered_set<Mat, MatHash> seen;
  out->push_back(Mat::identity(field_, dim_));
  seen.insert(out->front());
  for (size_t head = 0; head < out->size(); ++head) {
    for (const Mat& g : gens_) {
      Mat q = (*out)[head] * g;
      if (seen.insert(q).second) {
        if (out->size() >= cap) throw CapExceeded("element enumeration cap exceeded");
        out->push_back(std::move(q));
      }
    }
  }
  std::sort(out->begin(), out->end());
  elems_ = out;
  return *elems_;
}

std::vector<Mat> MatGroup::vec_stabilizer_elements(const Vec& v, u64 cap) const {
  std::vector<Mat> fix;
  for (const Mat& m : elements(cap))
    if (apply_row(v, m) == v) fix.push_back(m);
  return fix;
}

std::vector<Vec> all_vectors(const Field& f, u32 dim, u64 cap) {
  u64 total = 1;
  for (u32 i = 0; i < dim; ++i) {
    total *= f->q();
    if (total > cap) throw CapExceeded("vector space larger than cap");
  }
  std::vector<Vec> out;
  out.reserve(total);
  Vec v(dim, 0);
  for (u64 n = 0; n < total; ++n) {
    out.push_back(v);
    for (u32 i = 0; i < dim; ++i) {
      if (++v[i] < f->q()) break;
      v[i] = 0;
    }
  }
  return out;
}

}  // namespace cgt
