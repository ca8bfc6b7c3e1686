#include "cgt/perm.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

Perm::Perm(std::vector<u32> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (u32 x : img_) {
    if (x >= img_.size() || seen[x])
      throw DomainError("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(u32 degree) {
  std::vector<u32> img(degree);
  for (u32 i = 0; i < degree; ++i) img[i] = i;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (u32 i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree()) throw DomainError("degree mismatch in product");
  Perm r;
  r.img_.resize(degree());
  for (u32 i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (u32 i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::power(i64 exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  u64 e = exponent < 0 ? static_cast<u64>(-exponent) : static_cast<u64>(exponent);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

u64 Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(degree(), false);
  u64 ord = 1;
  for (u32 i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    for (u32 j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = ord / gcd_u64(ord, len) * len;
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (u32 i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(' << i + 1;
    seen[i] = true;
    for (u32 j = img_[i]; j != i; j = img_[j]) {
      out << ' ' << j + 1;
      seen[j] = true;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_perm(const std::string& text, u32 degree) {
  std::vector<std::vector<u32>> cycles;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<u32> cycle;
    std::vector<bool> in_cycle(degree, false);
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point at position " + std::to_string(pos));
      u64 v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      u32 p = static_cast<u32>(v - 1);
      if (in_cycle[p])
        throw ParseError("point " + std::to_string(v) + " repeated within a cycle");
      in_cycle[p] = true;
      cycle.push_back(p);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // Rightmost cycle acts first: accumulate img <- img followed by cycle.
  std::vector<u32> img(degree);
  for (u32 i = 0; i < degree; ++i) img[i] = i;
  std::vector<u32> cmap(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    for (u32 i = 0; i < degree; ++i) cmap[i] = i;
    for (size_t k = 0; k < c.size(); ++k) cmap[c[k]] = c[(k + 1) % c.size()];
    for (u32 i = 0; i < degree; ++i) img[i] = cmap[img[i]];
  }
  return Perm(std::move(img));
}

}  // namespace cgt
