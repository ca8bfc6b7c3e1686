#include "cgt/classical.hpp"

#include <algorithm>
#include <unordered_set>

#include "cgt/module.hpp"

namespace cgt {

namespace {

u64 det(const Mat& m) {
  const FieldSpec& f = *m.field();
  u32 n = m.rows();
  std::vector<Vec> rows(n, Vec(n));
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  u64 d = 1;
  for (u32 col = 0; col < n; ++col) {
    u32 pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[col], rows[pivot]);
      d = f.neg(d);
    }
    d = f.mul(d, rows[col][col]);
    u64 scale = f.inv(rows[col][col]);
    for (u32 i = col + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      u64 factor = f.mul(rows[i][col], scale);
      for (u32 j = col; j < n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[col][j]));
    }
  }
  return d;
}

u64 sigma_apply(const FieldSpec& f, u64 x, u32 frob_power) {
  for (u32 i = 0; i < frob_power; ++i) x = f.frobenius(x);
  return x;
}

u64 pow_u64(u64 b, u64 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// greedy generating subset of a full element list
std::vector<Mat> greedy_generators(const Field& f, u32 n, const std::vector<Mat>& elems) {
  std::unordered_set<Mat, MatHash> target(elems.begin(), elems.end());
  std::vector<Mat> gens;
  std::unordered_set<Mat, MatHash> have;
  std::vector<Mat> have_list;
  have.insert(Mat::identity(f, n));
  have_list.push_back(Mat::identity(f, n));
  while (have.size() < elems.size()) {
    const Mat* next = nullptr;
    for (const Mat& e : elems)
      if (!have.count(e)) {
        next = &e;
        break;
      }
    gens.push_back(*next);
    // re-close
    have_list.push_back(*next);
    have.insert(*next);
    for (size_t head = 0; head < have_list.size(); ++head) {
      for (const Mat& g : gens) {
        Mat q = have_list[head] * g;
        if (have.insert(q).second) have_list.push_back(std::move(q));
      }
    }
  }
  return gens;
}

}  // namespace

Mat transpose_inverse(const Mat& m) {
  auto inv = m.transpose().inverse();
  if (!inv) throw DomainError("singular matrix");
  return *inv;
}

u64 classical_order_formula(ClassicalFamily family, u32 n, u64 q, FormSign sign) {
  switch (family) {
    case ClassicalFamily::GL: {
      u64 o = 1;
      for (u32 i = 0; i < n; ++i) o *= pow_u64(q, n) - pow_u64(q, i);
      return o;
    }
    case ClassicalFamily::SL:
      return classical_order_formula(ClassicalFamily::GL, n, q, sign) / (q - 1);
    case ClassicalFamily::SP: {
      if (n % 2) throw DomainError("Sp needs even dimension");
      u32 m = n / 2;
      u64 o = pow_u64(q, m * m);
      for (u32 i = 1; i <= m; ++i) o *= pow_u64(q, 2 * i) - 1;
      return o;
    }
    case ClassicalFamily::GU: {
      u64 o = pow_u64(q, n * (n - 1) / 2);
      for (u32 i = 1; i <= n; ++i) {
        u64 t = pow_u64(q, i);
        o *= (i % 2) ? t + 1 : t - 1;
      }
      return o;
    }
    case ClassicalFamily::GO: {
      if (n % 2 == 1) {
        u32 m = (n - 1) / 2;
        u64 o = 2 * pow_u64(q, m * m);
        for (u32 i = 1; i <= m; ++i) o *= pow_u64(q, 2 * i) - 1;
        return o;
      }
      u32 m = n / 2;
      u64 o = 2 * pow_u64(q, m * (m - 1));
      o *= sign == FormSign::Plus ? pow_u64(q, m) - 1 : pow_u64(q, m) + 1;
      for (u32 i = 1; i + 1 <= m; ++i) o *= pow_u64(q, 2 * i) - 1;
      return o;
    }
  }
  throw DomainError("unknown family");
}

std::vector<Mat> form_preservers(const Field& field, u32 n, const Mat& gram,
                                 u32 frob_power, const std::vector<u64>& scales) {
  const FieldSpec& f = *field;
  std::vector<Vec> points = all_vectors(field, n, 1u << 24);
  // B(x, y) = x G sigma(y)^T
  auto form = [&](const Vec& x, const Vec& y) {
    u64 acc = 0;
    for (u32 i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      u64 row = 0;
      for (u32 j = 0; j < n; ++j) {
        if (gram.at(i, j) == 0 || y[j] == 0) continue;
        row = f.add(row, f.mul(gram.at(i, j), sigma_apply(f, y[j], frob_power)));
      }
      acc = f.add(acc, f.mul(x[i], row));
    }
    return acc;
  };
  std::vector<Mat> out;
  std::vector<Vec> rows(n);
  for (u64 lambda : scales) {
    auto recurse = [&](auto&& self, u32 level) -> void {
      if (level == n) {
        Mat m(field, n, n);
        for (u32 i = 0; i < n; ++i)
          for (u32 j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        out.push_back(std::move(m));
        return;
      }
      for (const Vec& v : points) {
        bool ok = form(v, v) == f.mul(lambda, gram.at(level, level));
        for (u32 j = 0; j < level && ok; ++j) {
          ok = form(v, rows[j]) == f.mul(lambda, gram.at(level, j)) &&
               form(rows[j], v) == f.mul(lambda, gram.at(j, level));
        }
        if (!ok) continue;
        rows[level] = v;
        self(self, level + 1);
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

ClassicalGroup classical(ClassicalFamily family, u32 n, u64 q, ClassicalVariant variant,
                         FormSign sign) {
  if (n < 2) throw DomainError("need n >= 2");
  // factor q
  u64 p = 0;
  u32 k = 0;
  for (u64 cand = 2; cand <= q; ++cand) {
    if (!is_prime_u64(cand)) continue;
    u64 pw = cand;
    u32 deg = 1;
    while (pw < q) {
      pw *= cand;
      ++deg;
    }
    if (pw == q) {
      p = cand;
      k = deg;
      break;
    }
  }
  if (!p) throw DomainError("q must be a prime power");

  if (variant == ClassicalVariant::Conformal && family != ClassicalFamily::SP)
    throw DomainError("conformal variant is defined for SP only");
  if (variant == ClassicalVariant::TauExtended &&
      (family == ClassicalFamily::SP || family == ClassicalFamily::GO))
    throw DomainError("tau extension applies to GL/SL/GU");

  ClassicalGroup cg;
  cg.family = family;
  cg.variant = variant;
  cg.sign = sign;
  cg.n = n;
  cg.q = q;
  cg.formula_order = classical_order_formula(family, n, q, sign);

  if (family == ClassicalFamily::GU) {
    cg.field = FieldSpec::make(p, 2 * k);
    cg.frobenius_power = k;
  } else {
    cg.field = FieldSpec::make(p, k);
  }
  const Field& f = cg.field;

  if (family == ClassicalFamily::GL || family == ClassicalFamily::SL) {
    if (cg.formula_order > default_limits().element_enum_cap * 10)
      throw CapExceeded("classical group too large for element enumeration");
    // rows = any tuple of linearly independent vectors (det filter for SL)
    std::vector<Vec> points = all_vectors(f, n, 1u << 24);
    std::vector<Vec> rows(n);
    std::vector<Mat> out;
    std::vector<Vec> echelon;
    auto recurse = [&](auto&& self, u32 level) -> void {
      if (level == n) {
        Mat m(f, n, n);
        for (u32 i = 0; i < n; ++i)
          for (u32 j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        if (family == ClassicalFamily::SL && det(m) != 1) return;
        out.push_back(std::move(m));
        return;
      }
      for (const Vec& v : points) {
        std::vector<Vec> test = echelon;
        test.push_back(v);
        if (rref(f, test) != level + 1) continue;
        rows[level] = v;
        std::vector<Vec> saved = std::move(echelon);
        echelon = std::move(test);
        self(self, level + 1);
        echelon = std::move(saved);
      }
    };
    recurse(recurse, 0);
    cg.elements = std::move(out);
  } else {
    // reference forms
    Mat gram(f, n, n);
    if (family == ClassicalFamily::SP) {
      u32 m = n / 2;
      for (u32 i = 0; i < m; ++i) {
        gram.at(i, n - 1 - i) = 1;
        gram.at(n - 1 - i, i) = f->neg(1);
      }
    } else if (family == ClassicalFamily::GU) {
      for (u32 i = 0; i < n; ++i) gram.at(i, i) = 1;
    } else {  // GO, q odd
      if (f->p() == 2) throw DomainError("orthogonal groups implemented for odd q");
      if (n % 2 == 1) {
        if (sign != FormSign::Circle) throw DomainError("odd dimension needs circle sign");
        for (u32 i = 0; i < n; ++i) gram.at(i, i) = 1;
      } else {
        if (sign == FormSign::Circle) throw DomainError("even dimension needs +/- sign");
        u32 m = n / 2;
        u32 hyper = sign == FormSign::Plus ? m : m - 1;
        for (u32 i = 0; i < hyper; ++i) {
          gram.at(2 * i, 2 * i + 1) = 1;
          gram.at(2 * i + 1, 2 * i) = 1;
        }
        if (sign == FormSign::Minus) {
          // anisotropic plane x^2 - delta y^2, delta the smallest non-square
          u64 delta = 0;
          for (u64 c = 2; c < f->q() && !delta; ++c) {
            bool square = false;
            for (u64 x = 1; x < f->q() && !square; ++x)
              if (f->mul(x, x) == c) square = true;
            if (!square) delta = c;
          }
          gram.at(n - 2, n - 2) = 1;
          gram.at(n - 1, n - 1) = f->neg(delta);
        }
      }
    }
    cg.gram = gram;
    std::vector<u64> scales{1};
    if (variant == ClassicalVariant::Conformal)
      for (u64 lam = 2; lam < f->q(); ++lam) scales.push_back(lam);
    // base group is always the isometry group; conformal elements are kept
    // alongside for the conjugacy search
    cg.elements = form_preservers(f, n, gram, cg.frobenius_power, {1});
  }

  if (cg.elements.size() != cg.formula_order)
    throw DomainError("element count " + std::to_string(cg.elements.size()) +
                      " does not match the order formula " + std::to_string(cg.formula_order));
  std::sort(cg.elements.begin(), cg.elements.end());
  cg.group = MatGroup(f, n, greedy_generators(f, n, cg.elements));
  return cg;
}

RealClassReport real_classes_check(const ClassicalGroup& cg) {
  RealClassReport rep;
  const Field& f = cg.field;
  std::vector<Mat> conjugators = cg.elements;
  if (cg.variant == ClassicalVariant::Conformal) {
    std::vector<u64> scales;
    for (u64 lam = 1; lam < f->q(); ++lam) scales.push_back(lam);
    conjugators = form_preservers(f, cg.n, *cg.gram, cg.frobenius_power, scales);
  }
  bool tau = cg.variant == ClassicalVariant::TauExtended;
  rep.all_real = true;
  for (const Mat& g : cg.elements) {
    ++rep.checked;
    Mat ginv = *g.inverse();
    bool real = false;
    for (const Mat& x : conjugators) {
      if (g * x == x * ginv) {  // x^-1 g x = g^-1
        real = true;
        break;
      }
    }
    if (!real && tau) {
      Mat gtau = transpose_inverse(g);
      for (const Mat& m : conjugators) {
        if (gtau * m == m * ginv) {  // (tau m)^-1 g (tau m) = m^-1 g^tau m
          real = true;
          break;
        }
      }
    }
    if (!real) {
      rep.all_real = false;
      rep.counterexample = g;
      break;
    }
  }
  return rep;
}

}  // namespace cgt
