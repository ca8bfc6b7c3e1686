#include "cgt/module.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace cgt {

Subspace fixed_space(const std::vector<Mat>& gens) {
  if (gens.empty()) throw DomainError("fixed_space needs at least one matrix");
  Field f = gens[0].field();
  u32 n = gens[0].rows();
  // v is fixed iff v * [g1 - I | g2 - I | ...] = 0
  Mat stacked(f, n, n * static_cast<u32>(gens.size()));
  for (u32 gi = 0; gi < gens.size(); ++gi) {
    Mat d = gens[gi] - Mat::identity(f, n);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) stacked.at(i, gi * n + j) = d.at(i, j);
  }
  return Subspace(f, n, left_kernel(stacked));
}

Subspace fixed_space(const MatGroup& g) {
  if (g.generators().empty()) {
    std::vector<Vec> rows;
    for (u32 i = 0; i < g.dim(); ++i) {
      Vec e(g.dim(), 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return Subspace(g.field(), g.dim(), std::move(rows));
  }
  return fixed_space(g.generators());
}

MatGroup dual_group(const MatGroup& g) {
  std::vector<Mat> dual;
  for (const Mat& m : g.generators()) {
    auto inv = m.transpose().inverse();
    if (!inv) throw DomainError("singular generator");  // impossible by invariant
    dual.push_back(std::move(*inv));
  }
  return MatGroup(g.field(), g.dim(), std::move(dual));
}

Subspace spin(const MatGroup& g, const Vec& v) {
  Field f = g.field();
  std::vector<Vec> basis;
  Subspace space(f, g.dim(), {v});
  basis = space.basis();
  for (size_t head = 0; head < basis.size(); ++head) {
    for (const Mat& m : g.generators()) {
      Vec w = apply_row(basis[head], m);
      if (!space.contains(w)) {
        std::vector<Vec> rows = space.basis();
        rows.push_back(std::move(w));
        space = Subspace(f, g.dim(), std::move(rows));
        basis = space.basis();
        head = static_cast<size_t>(-1);  // restart: basis changed
        break;
      }
    }
  }
  return space;
}

std::vector<Subspace> submodule_lattice(const MatGroup& g, u64 cap) {
  Field f = g.field();
  std::vector<Subspace> found;
  auto push_unique = [&](const Subspace& s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(s);
      return true;
    }
    return false;
  };
  push_unique(Subspace(f, g.dim()));  // zero space
  for (const Vec& v : all_vectors(f, g.dim(), cap)) {
    if (std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; })) continue;
    push_unique(spin(g, v));
  }
  // close under sums
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) push_unique(found[i].sum(found[j]));
  std::sort(found.begin(), found.end());
  return found;
}

bool is_irreducible(const MatGroup& g, u64 cap) {
  if (g.dim() == 0) return false;
  for (const Vec& v : all_vectors(g.field(), g.dim(), cap)) {
    if (std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; })) continue;
    if (spin(g, v).dim() != g.dim()) return false;
  }
  return true;
}

bool is_completely_reducible(const MatGroup& g, u64 cap) {
  if (g.order() % g.field()->p() != 0) return true;  // Maschke
  auto lattice = submodule_lattice(g, cap);
  for (const Subspace& w : lattice) {
    bool complemented = false;
    for (const Subspace& c : lattice) {
      if (w.dim() + c.dim() != g.dim()) continue;
      if (w.sum(c).dim() == g.dim()) {
        complemented = true;
        break;
      }
    }
    if (!complemented) return false;
  }
  return true;
}

MatGroup restrict_to_submodule(const MatGroup& g, const Subspace& w) {
  Field f = g.field();
  u32 d = w.dim();
  // coordinates of x in the echelon basis: pivots read off directly
  std::vector<u32> pivot_col(d);
  for (u32 i = 0; i < d; ++i) {
    u32 c = 0;
    while (w.basis()[i][c] == 0) ++c;
    pivot_col[i] = c;
  }
  auto coords = [&](const Vec& x) {
    Vec rem = x, out(d, 0);
    for (u32 i = 0; i < d; ++i) {
      u64 c = rem[pivot_col[i]];
      out[i] = c;
      if (c == 0) continue;
      for (u32 j = 0; j < rem.size(); ++j) rem[j] = f->sub(rem[j], f->mul(c, w.basis()[i][j]));
    }
    if (!std::all_of(rem.begin(), rem.end(), [](u64 v) { return v == 0; }))
      throw DomainError("vector not in the subspace");
    return out;
  };
  std::vector<Mat> gens;
  for (const Mat& m : g.generators()) {
    std::vector<Vec> rows;
    for (u32 i = 0; i < d; ++i) rows.push_back(coords(apply_row(w.basis()[i], m)));
    gens.push_back(Mat::from_rows(f, rows));
  }
  return MatGroup(f, d, std::move(gens));
}

Vec psi_map(const Vec& v, const std::vector<Mat>& elements) {
  if (elements.empty()) throw DomainError("psi_map needs a subgroup element list");
  Field f = elements[0].field();
  Vec sum(v.size(), 0);
  for (const Mat& m : elements) {
    Vec t = apply_row(v, m);
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = f->add(sum[i], t[i]);
  }
  return sum;
}

bool module_isomorphic(const MatGroup& g1, const MatGroup& g2, u64 enum_cap) {
  if (!g1.field()->same_as(*g2.field()) || g1.dim() != g2.dim() ||
      g1.generators().size() != g2.generators().size())
    throw DomainError("module_isomorphic: shape mismatch");
  Field f = g1.field();
  u32 n = g1.dim();
  u32 nn = n * n;
  // Unknown X (n x n), equations X*A_i - B_i*X = 0 entrywise; variables are
  // X's entries row-major, equations stacked as columns of a big matrix so
  // solutions are left-kernel vectors.
  u32 r = static_cast<u32>(g1.generators().size());
  Mat system(f, nn, r * nn);
  for (u32 gi = 0; gi < r; ++gi) {
    const Mat& A = g1.generators()[gi];
    const Mat& B = g2.generators()[gi];
    // coefficient of X_{ab} in equation (i,j): A.at(b, j) when a == i
    // minus B.at(i, a) when b == j
    for (u32 a = 0; a < n; ++a)
      for (u32 b = 0; b < n; ++b)
        for (u32 i = 0; i < n; ++i)
          for (u32 j = 0; j < n; ++j) {
            u64 coef = 0;
            if (a == i) coef = f->add(coef, A.at(b, j));
            if (b == j) coef = f->sub(coef, B.at(i, a));
            system.at(a * n + b, gi * nn + i * n + j) = coef;
          }
  }
  std::vector<Vec> kernel = left_kernel(system);
  if (kernel.empty()) return false;
  auto to_mat = [&](const Vec& x) {
    Mat m(f, n, n);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) m.at(i, j) = x[i * n + j];
    return m;
  };
  u64 combos = 1;
  bool exhaustive = true;
  for (size_t i = 0; i < kernel.size(); ++i) {
    combos *= f->q();
    if (combos > enum_cap) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    std::vector<u64> c(kernel.size(), 0);
    for (u64 step = 0; step < combos; ++step) {
      Vec x(nn, 0);
      for (size_t ki = 0; ki < kernel.size(); ++ki) {
        if (c[ki] == 0) continue;
        for (u32 t = 0; t < nn; ++t)
          x[t] = f->add(x[t], f->mul(c[ki], kernel[ki][t]));
      }
      if (to_mat(x).inverse()) return true;
      for (size_t i = 0; i < c.size(); ++i) {
        if (++c[i] < f->q()) break;
        c[i] = 0;
      }
    }
    return false;
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec x(nn, 0);
    for (const Vec& kv : kernel) {
      u64 c = rng() % f->q();
      if (c == 0) continue;
      for (u32 t = 0; t < nn; ++t) x[t] = f->add(x[t], f->mul(c, kv[t]));
    }
    if (to_mat(x).inverse()) return true;
  }
  throw Inconclusive("intertwiner space too large to exhaust; sampling found no unit");
}

}  // namespace cgt
