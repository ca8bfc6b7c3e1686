#include "cgt/constructions.hpp"

#include <algorithm>

#include "cgt/formats.hpp"

namespace cgt {

namespace {
void check_range(u32 n) {
  if (n < 1 || n > 64) throw DomainError("n out of range 1..64");
}

std::vector<u32> cycle_images(u32 degree, const std::vector<u32>& cycle) {
  std::vector<u32> img(degree);
  for (u32 i = 0; i < degree; ++i) img[i] = i;
  for (size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return img;
}
}  // namespace

PermGroup sym(u32 n) {
  check_range(n);
  if (n == 1) return PermGroup(1, {});
  std::vector<u32> full(n);
  for (u32 i = 0; i < n; ++i) full[i] = i;
  std::vector<Perm> gens;
  gens.emplace_back(cycle_images(n, {0, 1}));
  if (n > 2) gens.emplace_back(cycle_images(n, full));
  return PermGroup(n, std::move(gens));
}

PermGroup alt(u32 n) {
  check_range(n);
  if (n <= 2) return PermGroup(n, {});
  std::vector<Perm> gens;
  gens.emplace_back(cycle_images(n, {0, 1, 2}));
  if (n > 3) {
    std::vector<u32> tail;
    for (u32 i = 2; i < n; ++i) tail.push_back(i);
    if (n % 2 == 1) {
      gens.emplace_back(cycle_images(n, tail));
    } else {
      std::vector<u32> img = cycle_images(n, tail);
      std::swap(img[0], img[1]);
      gens.emplace_back(std::move(img));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(u32 n) {
  check_range(n);
  if (n == 1) return PermGroup(1, {});
  std::vector<u32> full(n);
  for (u32 i = 0; i < n; ++i) full[i] = i;
  return PermGroup(n, {Perm(cycle_images(n, full))});
}

PermGroup dihedral(u32 n) {
  check_range(n);
  if (n == 1) return PermGroup(2, {Perm(cycle_images(2, {0, 1}))});
  if (n == 2) {
    std::vector<u32> a = {1, 0, 2, 3}, b = {0, 1, 3, 2};
    return PermGroup(4, {Perm(a), Perm(b)});
  }
  std::vector<u32> full(n);
  for (u32 i = 0; i < n; ++i) full[i] = i;
  std::vector<u32> flip(n);
  for (u32 i = 0; i < n; ++i) flip[i] = n - 1 - i;
  return PermGroup(n, {Perm(cycle_images(n, full)), Perm(flip)});
}

Perm projective_action(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("projective action needs 2x2");
  const FieldSpec& f = *m.field();
  u64 q = f.q();
  auto point_index = [&](u64 x, u64 y) -> u32 {
    // normalize [x : y]
    if (y != 0) return 1 + static_cast<u32>(f.mul(x, f.inv(y)));
    return 0;  // infinity
  };
  std::vector<u32> img(q + 1);
  // infinity = [1 : 0]
  img[0] = point_index(m.at(0, 0), m.at(0, 1));
  for (u64 x = 0; x < q; ++x) {
    u64 nx = f.add(f.mul(x, m.at(0, 0)), m.at(1, 0));
    u64 ny = f.add(f.mul(x, m.at(0, 1)), m.at(1, 1));
    if (nx == 0 && ny == 0) throw DomainError("singular matrix in projective action");
    img[1 + x] = point_index(nx, ny);
  }
  return Perm(std::move(img));
}

PermGroup psl2(u64 q) {
  // admissible prime powers up to 64
  u64 p = 0;
  u32 k = 0;
  for (u64 cand = 2; cand <= q; ++cand) {
    if (!is_prime_u64(cand)) continue;
    u64 pow = cand;
    u32 deg = 1;
    while (pow < q) {
      pow *= cand;
      ++deg;
    }
    if (pow == q) {
      p = cand;
      k = deg;
      break;
    }
  }
  if (p == 0 || q > 64) throw DomainError("q must be a prime power <= 64");
  Field f = FieldSpec::make(p, k);
  std::vector<Perm> gens;
  for (u32 i = 0; i < k; ++i) {
    u64 alpha = f->pow(f->generator(), i);
    if (k == 1) alpha = 1;
    Mat e12(f, 2, 2), e21(f, 2, 2);
    e12.at(0, 0) = e12.at(1, 1) = 1;
    e12.at(0, 1) = alpha;
    e21.at(0, 0) = e21.at(1, 1) = 1;
    e21.at(1, 0) = alpha;
    gens.push_back(projective_action(e12));
    gens.push_back(projective_action(e21));
    if (k == 1) break;
  }
  return PermGroup(static_cast<u32>(q + 1), std::move(gens));
}

u64 vector_rank(const Field& f, const Vec& v) {
  u64 rank = 0, scale = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    rank += v[i] * scale;
    scale *= f->q();
  }
  return rank;
}

PermGroup affine_holomorph(const MatGroup& h, u64 cap) {
  Field f = h.field();
  u64 total = 1;
  for (u32 i = 0; i < h.dim(); ++i) {
    total *= f->q();
    if (total > cap) throw CapExceeded("affine holomorph degree exceeds cap");
  }
  u32 degree = static_cast<u32>(total);
  std::vector<Vec> points = all_vectors(f, h.dim(), cap);
  std::vector<Perm> gens;
  for (u32 b = 0; b < h.dim(); ++b) {
    std::vector<u32> img(degree);
    for (u32 i = 0; i < degree; ++i) {
      Vec v = points[i];
      v[b] = f->add(v[b], 1);
      img[i] = static_cast<u32>(vector_rank(f, v));
    }
    gens.emplace_back(std::move(img));
  }
  for (const Mat& m : h.generators()) {
    std::vector<u32> img(degree);
    for (u32 i = 0; i < degree; ++i)
      img[i] = static_cast<u32>(vector_rank(f, apply_row(points[i], m)));
    gens.emplace_back(std::move(img));
  }
  PermGroup g(degree, std::move(gens));
  g.set_known_order(total * h.order());
  return g;
}

PermGroup product_action_wreath(const PermGroup& base, u32 n, u64 cap) {
  if (n < 1) throw DomainError("need n >= 1");
  u64 d = base.degree();
  u64 total = 1;
  for (u32 i = 0; i < n; ++i) {
    total *= d;
    if (total > cap) throw CapExceeded("product action degree exceeds cap");
  }
  u32 degree = static_cast<u32>(total);
  auto digit = [&](u64 code, u32 i) {
    for (u32 t = 0; t < i; ++t) code /= d;
    return static_cast<u32>(code % d);
  };
  std::vector<Perm> gens;
  for (const Perm& g : base.generators()) {
    std::vector<u32> img(degree);
    for (u32 c = 0; c < degree; ++c)
      img[c] = c - digit(c, 0) + g[digit(c, 0)];
    gens.emplace_back(std::move(img));
  }
  auto coord_perm = [&](const Perm& sigma) {
    // tuple t -> t' with t'[i] = t[sigma^{-1}(i)]
    Perm si = sigma.inverse();
    std::vector<u32> img(degree);
    for (u32 c = 0; c < degree; ++c) {
      u64 out = 0, scale = 1;
      for (u32 i = 0; i < n; ++i) {
        out += static_cast<u64>(digit(c, si[i])) * scale;
        scale *= d;
      }
      img[c] = static_cast<u32>(out);
    }
    return Perm(std::move(img));
  };
  if (n > 1)
    for (const Perm& s : sym(n).generators()) gens.push_back(coord_perm(s));
  PermGroup w(degree, std::move(gens));
  u64 base_order = base.order();
  u64 order = 1;
  for (u32 i = 0; i < n; ++i) order *= base_order;
  for (u32 i = 2; i <= n; ++i) order *= i;
  w.set_known_order(order);
  return w;
}

FrobeniusProduct frobenius_product(const std::vector<std::pair<u64, u64>>& params, u64 cap) {
  if (params.empty()) throw DomainError("need at least one Frobenius factor");
  u64 total = 1;
  for (auto [m, d] : params) {
    if (m < 2 || d < 2 || (m - 1) % d != 0)
      throw DomainError("invalid Frobenius parameters (need d | m-1, d,m >= 2)");
    total *= m;
    if (total > cap) throw CapExceeded("Frobenius product degree exceeds cap");
  }
  size_t ell = params.size();
  // smallest unit of exact order d acting fixed-point-freely on Z_m
  std::vector<u64> units;
  for (auto [m, d] : params) {
    u64 found = 0;
    for (u64 u = 2; u < m && !found; ++u) {
      if (gcd_u64(u, m) != 1) continue;
      u64 x = 1;
      bool fpf = true;
      u64 ord = 0;
      for (u64 j = 1; j <= d; ++j) {
        x = x * u % m;
        if (j < d && x == 1) break;
        if (j < d && gcd_u64((x + m - 1) % m, m) != 1) fpf = false;
        if (j == d) ord = x == 1 ? d : 0;
      }
      if (ord == d && fpf) found = u;
    }
    if (!found) throw DomainError("no fixed-point-free unit of the requested order");
    units.push_back(found);
  }
  u32 degree = static_cast<u32>(total);
  auto decode = [&](u64 code) {
    std::vector<u64> t(ell);
    for (size_t i = 0; i < ell; ++i) {
      t[i] = code % params[i].first;
      code /= params[i].first;
    }
    return t;
  };
  auto encode = [&](const std::vector<u64>& t) {
    u64 code = 0, scale = 1;
    for (size_t i = 0; i < ell; ++i) {
      code += t[i] * scale;
      scale *= params[i].first;
    }
    return code;
  };
  std::vector<Perm> gens;
  for (size_t fi = 0; fi < ell; ++fi) {
    std::vector<u32> timg(degree), simg(degree);
    for (u32 c = 0; c < degree; ++c) {
      auto t = decode(c);
      auto s = t;
      t[fi] = (t[fi] + 1) % params[fi].first;
      s[fi] = s[fi] * units[fi] % params[fi].first;
      timg[c] = static_cast<u32>(encode(t));
      simg[c] = static_cast<u32>(encode(s));
    }
    gens.emplace_back(std::move(timg));
    gens.emplace_back(std::move(simg));
  }
  FrobeniusProduct out{PermGroup(degree, std::move(gens)), {}, 0, {}};
  u64 order = 1;
  for (auto [m, d] : params) order *= m * d;
  out.group.set_known_order(order);
  for (size_t i = 0; i < ell; ++i) {
    std::vector<u64> t(ell, 0);
    t[i] = 1;
    out.marked_points.push_back(static_cast<u32>(encode(t)));
    out.complement_orders.push_back(params[i].second);
  }
  return out;
}

u64 smallest_primitive_root(u64 p) {
  for (u64 g = 2; g < p; ++g) {
    u64 x = 1;
    u64 ord = 0;
    for (u64 e = 1; e < p; ++e) {
      x = x * g % p;
      if (x == 1) {
        ord = e;
        break;
      }
    }
    if (ord == p - 1) return g;
  }
  throw DomainError("no primitive root (p not prime?)");
}

MatGroup ex31_odd_module(u64 p) {
  if (!is_prime_u64(p) || p == 2 || p > 97) throw DomainError("p must be an odd prime <= 97");
  Field f = FieldSpec::make(p, 1);
  u64 lambda = smallest_primitive_root(p);
  Mat g(f, 2, 2), h(f, 2, 2);
  g.at(0, 0) = 1; g.at(1, 0) = 1; g.at(1, 1) = 1;
  h.at(0, 0) = lambda; h.at(1, 1) = 1;
  return MatGroup(f, 2, {g, h});
}

MatGroup ex31_char2_module() {
  Field f = FieldSpec::make(2, 1);
  // images of (1 2) and (1 2 3 4) on e1,e2,e3 mod <e1+e2+e3+e4>
  Mat a = Mat::from_rows(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  Mat b = Mat::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  return MatGroup(f, 3, {a, b});
}

PermGroup mathieu(u32 n, const std::string& data_dir) {
  u64 expected;
  switch (n) {
    case 11: expected = 7920; break;
    case 23: expected = 10200960; break;
    case 24: expected = 244823040; break;
    default: throw DomainError("mathieu degree must be 11, 23 or 24");
  }
  std::string path = data_dir + "/mathieu" + std::to_string(n) + ".grp";
  ParsedGroupFile parsed = parse_group_file(path);
  if (!parsed.perm) throw ParseError(path + ": expected a permutation group file");
  if (parsed.perm->degree() != n)
    throw ParseError(path + ": wrong degree");
  if (parsed.perm->order() != expected)
    throw ParseError(path + ": order check failed (data corrupted?)");
  return *parsed.perm;
}

}  // namespace cgt
