#include "cgt/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cgt {

Mat perm_matrix(const Field& f, const Perm& p) {
  Mat m(f, p.degree(), p.degree());
  for (u32 i = 0; i < p.degree(); ++i) m.at(i, p[i]) = 1;
  return m;
}

MatGroup perm_module(const PermGroup& g, const Field& f) {
  std::vector<Mat> gens;
  for (const Perm& p : g.generators()) gens.push_back(perm_matrix(f, p));
  if (gens.empty()) gens.push_back(Mat::identity(f, g.degree()));
  return MatGroup(f, g.degree(), std::move(gens));
}

MatGroup deleted_perm_module(const PermGroup& g, const Field& f) {
  u32 n = g.degree();
  if (n < 2) throw DomainError("deleted permutation module needs degree >= 2");
  u32 d = n - 1;
  // f_i = e_i - e_{n-1}; pi maps f_i to f_{pi(i)} - f_{pi(n-1)} with f_{n-1} = 0
  auto image_row = [&](const Perm& p, u32 i) {
    Vec row(d, 0);
    u32 a = p[i], b = p[n - 1];
    if (a != n - 1) row[a] = f->add(row[a], 1);
    if (b != n - 1) row[b] = f->sub(row[b], 1);
    return row;
  };
  std::vector<Mat> gens;
  for (const Perm& p : g.generators()) {
    std::vector<Vec> rows;
    for (u32 i = 0; i < d; ++i) rows.push_back(image_row(p, i));
    gens.push_back(Mat::from_rows(f, rows));
  }
  if (gens.empty()) gens.push_back(Mat::identity(f, d));
  return MatGroup(f, d, std::move(gens));
}

Mat scalar_block(const Field& f, u64 d) {
  if ((f->q() - 1) % d != 0) throw DomainError("no scalar of that order");
  Mat m(f, 1, 1);
  m.at(0, 0) = f->pow(f->generator(), (f->q() - 1) / d);
  return m;
}

MatGroup sl2_natural(u64 q) {
  u64 p = 0;
  u32 k = 0;
  for (u64 c = 2; c <= q; ++c) {
    if (!is_prime_u64(c)) continue;
    u64 pw = c;
    u32 deg = 1;
    while (pw < q) {
      pw *= c;
      ++deg;
    }
    if (pw == q) {
      p = c;
      k = deg;
      break;
    }
  }
  if (!p) throw DomainError("q must be a prime power");
  Field f = FieldSpec::make(p, k);
  std::vector<Mat> gens;
  for (u32 i = 0; i < k; ++i) {
    u64 alpha = k == 1 ? 1 : f->pow(f->generator(), i);
    Mat e12 = Mat::identity(f, 2), e21 = Mat::identity(f, 2);
    e12.at(0, 1) = alpha;
    e21.at(1, 0) = alpha;
    gens.push_back(e12);
    gens.push_back(e21);
    if (k == 1) break;
  }
  return MatGroup(f, 2, std::move(gens));
}

MatGroup gl2_natural(u64 q) {
  MatGroup sl = sl2_natural(q);
  Field f = sl.field();
  std::vector<Mat> gens = sl.generators();
  if (f->q() > 2) {
    Mat diag = Mat::identity(f, 2);
    diag.at(0, 0) = f->generator();
    gens.push_back(diag);
  }
  return MatGroup(f, 2, std::move(gens));
}

MatGroup gl32_natural() {
  Field f = FieldSpec::make(2, 1);
  // GL(3,2) = <cyclic shift companion, transvection>
  Mat a = Mat::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});  // order 7
  Mat b = Mat::from_rows(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  return MatGroup(f, 3, {a, b});
}

namespace {

struct Block {
  std::string term;
  std::vector<Mat> gens;  // square, shared field
  u32 dim;
  u64 order;  // group order of the block (known by construction)
};

// direct sum of blocks: generators act in their own block
MatGroup direct_sum(const Field& f, const std::vector<Block>& blocks) {
  u32 dim = 0;
  for (const auto& b : blocks) dim += b.dim;
  std::vector<Mat> gens;
  u32 off = 0;
  for (const auto& b : blocks) {
    for (const Mat& g : b.gens) {
      Mat m = Mat::identity(f, dim);
      for (u32 i = 0; i < b.dim; ++i)
        for (u32 j = 0; j < b.dim; ++j) m.at(off + i, off + j) = g.at(i, j);
      gens.push_back(std::move(m));
    }
    off += b.dim;
  }
  return MatGroup(f, dim, std::move(gens));
}

MatGroup conjugated(const MatGroup& g, const Mat& x) {
  Mat xi = *x.inverse();
  std::vector<Mat> gens;
  for (const Mat& m : g.generators()) gens.push_back(xi * m * x);
  return MatGroup(g.field(), g.dim(), std::move(gens));
}

Mat random_invertible(const Field& f, u32 n, std::mt19937_64& rng) {
  while (true) {
    Mat m(f, n, n);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) m.at(i, j) = rng() % f->q();
    if (m.inverse()) return m;
  }
}

}  // namespace

std::vector<ModuleItem> maschke_module_corpus(u64 seed, size_t min_items) {
  std::mt19937_64 rng(seed);
  std::vector<ModuleItem> items;
  const u64 qs[] = {2, 3, 4, 5, 7, 8, 9};

  auto block_order = [](const Block& b) { return b.order; };

  // deterministic supply of scalar orders per field
  auto scalar_orders = [](u64 q) {
    std::vector<u64> ds;
    for (u64 d = 2; d <= q - 1; ++d)
      if ((q - 1) % d == 0) ds.push_back(d);
    return ds;
  };

  for (u64 round = 0; items.size() < min_items && round < min_items * 6; ++round) {
    bool force_coprime_pair = round % 3 == 0;  // steady supply of coprime orbit pairs
    u64 q = force_coprime_pair ? (round % 2 ? 5 : 7) : qs[rng() % std::size(qs)];
    Field f = FieldSpec::make(q == 4 ? 2 : q == 8 ? 2 : q == 9 ? 3 : q,
                              q == 4 ? 2 : q == 8 ? 3 : q == 9 ? 2 : 1);
    u64 p = f->p();
    std::vector<Block> blocks;
    std::ostringstream term;
    term << "sum(q=" << q;
    u32 dim = 0;
    u64 order = 1;
    u32 nblocks = 1 + rng() % 3;
    if (force_coprime_pair) {
      // scalar(d) + cyclic(m) with gcd(d, m) = 1
      auto ds = scalar_orders(q);
      u64 d = ds[rng() % ds.size()];
      u64 m = 0;
      for (u64 cand : {3, 2, 5, 4}) {
        if (cand % p != 0 && gcd_u64(cand, d) == 1) {
          m = cand;
          break;
        }
      }
      if (m == 0) continue;
      blocks.push_back({"scalar" + std::to_string(d), {scalar_block(f, d)}, 1, d});
      term << ",s" << d;
      dim += 1;
      order *= d;
      std::vector<Mat> cg;
      for (const Perm& pg : cyclic(static_cast<u32>(m)).generators())
        cg.push_back(perm_matrix(f, pg));
      blocks.push_back({"cyc" + std::to_string(m), cg, static_cast<u32>(m), m});
      term << ",cyc" << m;
      dim += static_cast<u32>(m);
      order *= m;
      nblocks = 2 + rng() % 2;
    }
    for (u32 bi = static_cast<u32>(blocks.size()); bi < nblocks && dim < 6; ++bi) {
      u32 choice = rng() % 4;
      if (choice == 0) {
        auto ds = scalar_orders(q);
        if (ds.empty()) continue;
        u64 d = ds[rng() % ds.size()];
        blocks.push_back({"scalar" + std::to_string(d), {scalar_block(f, d)}, 1, d});
        term << ",s" << d;
        dim += 1;
        order *= d;
      } else if (choice == 1) {
        u32 m = 2 + rng() % 3;  // sym(m) permutation block
        if (dim + m > 6) continue;
        u64 fact = 1;
        for (u32 i = 2; i <= m; ++i) fact *= i;
        if (fact % p == 0) continue;  // Maschke gate
        PermGroup s = sym(m);
        std::vector<Mat> gens;
        for (const Perm& pg : s.generators()) gens.push_back(perm_matrix(f, pg));
        blocks.push_back({"sym" + std::to_string(m), gens, m, fact});
        term << ",sym" << m;
        dim += m;
        order *= fact;
      } else if (choice == 2) {
        u32 m = 2 + rng() % 4;  // cyclic rotation block
        if (dim + m > 6 || m % p == 0) continue;
        PermGroup c = cyclic(m);
        std::vector<Mat> gens;
        for (const Perm& pg : c.generators()) gens.push_back(perm_matrix(f, pg));
        blocks.push_back({"cyc" + std::to_string(m), gens, m, m});
        term << ",cyc" << m;
        dim += m;
        order *= m;
      } else {
        u32 m = 3 + rng() % 2;  // dihedral permutation block
        if (dim + m > 6 || (2 * m) % p == 0 || m % p == 0) continue;
        PermGroup dsub = dihedral(m);
        std::vector<Mat> gens;
        for (const Perm& pg : dsub.generators()) gens.push_back(perm_matrix(f, pg));
        blocks.push_back({"dih" + std::to_string(m), gens, m, 2ull * m});
        term << ",dih" << m;
        dim += m;
        order *= 2ull * m;
      }
    }
    if (blocks.empty()) continue;
    // the direct product order bounds |H|; the real order may be smaller
    // after conjugation merging, but generators stay block-diagonal here
    u64 bound = 1;
    for (const auto& b : blocks) bound *= block_order(b);
    if (bound > 2000 || bound % p == 0) continue;
    u64 space = 1;
    bool too_big = false;
    for (u32 i = 0; i < dim; ++i) {
      space *= f->q();
      if (space > 200000) too_big = true;
    }
    if (too_big) continue;
    MatGroup sum = direct_sum(f, blocks);
    if (rng() % 2) {
      Mat x = random_invertible(f, sum.dim(), rng);
      sum = conjugated(sum, x);
      term << ",twisted";
    }
    term << ")#" << round;
    items.push_back({term.str(), std::move(sum)});
  }
  return items;
}

std::vector<ModuleItem> irreducible_module_corpus() {
  std::vector<ModuleItem> items;
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    items.push_back({"sl2nat(" + std::to_string(q) + ")", sl2_natural(q)});
    items.push_back({"gl2nat(" + std::to_string(q) + ")", gl2_natural(q)});
  }
  items.push_back({"gl32nat", gl32_natural()});
  // the 2-dimensional submodule of the Sym(4) quotient module: Sym(4) acting
  // on M2/M1, i.e. the standard GF(2) module of its Sym(3) quotient
  {
    Field f = FieldSpec::make(2, 1);
    Mat a = Mat::from_rows(f, {{0, 1}, {1, 0}});
    Mat b = Mat::from_rows(f, {{0, 1}, {1, 1}});
    items.push_back({"sym4_on_m2m1", MatGroup(f, 2, {a, b})});
  }
  // deleted permutation modules with char not dividing the degree
  struct DP {
    u32 n;
    u64 p, k;
  };
  for (DP d : std::initializer_list<DP>{{3, 5, 1}, {4, 3, 1}, {4, 5, 1}, {5, 2, 1},
                                        {5, 3, 1}, {5, 7, 1}, {3, 2, 2}, {6, 5, 1},
                                        {3, 7, 1}}) {
    Field f = FieldSpec::make(d.p, static_cast<u32>(d.k));
    items.push_back({"delperm(sym" + std::to_string(d.n) + ",q" +
                         std::to_string(f->q()) + ")",
                     deleted_perm_module(sym(d.n), f)});
  }
  // cyclic groups with irreducible companion action: C_d inside GL(e, q)
  // realized through the regular action on an irreducible factor; use the
  // multiplicative group of a bigger field acting on itself
  for (auto [p, k, d] : std::initializer_list<std::array<u64, 3>>{
           {2, 2, 3}, {2, 3, 7}, {3, 2, 8}, {3, 2, 4}, {5, 2, 3}, {2, 4, 5}, {2, 5, 31}}) {
    // the subgroup of order d of GF(p^k)* acting on GF(p^k) as GF(p)-space
    Field big = FieldSpec::make(p, static_cast<u32>(k));
    Field base = FieldSpec::make(p, 1);
    u64 zeta = big->pow(big->generator(), (big->q() - 1) / d);
    // matrix of multiplication by zeta in the coefficient basis
    std::vector<Vec> rows;
    for (u32 i = 0; i < k; ++i) {
      u64 basis = 1;
      for (u32 t = 0; t < i; ++t) basis *= p;  // t^i
      u64 image = big->mul(basis, zeta);
      rows.push_back(big->coeffs(image));
    }
    Mat m = Mat::from_rows(base, rows);
    items.push_back({"fieldmul(p" + std::to_string(p) + ",k" + std::to_string(k) +
                         ",d" + std::to_string(d) + ")",
                     MatGroup(base, static_cast<u32>(k), {m})});
  }
  return items;
}

std::vector<ModuleItem> p_soluble_module_corpus() {
  std::vector<ModuleItem> items;
  // permutation modules of soluble groups in defining characteristic
  for (auto [n, p] : std::initializer_list<std::pair<u32, u64>>{
           {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 5}}) {
    Field f = FieldSpec::make(p, 1);
    items.push_back({"permmod(sym" + std::to_string(n) + ",p" + std::to_string(p) + ")",
                     perm_module(sym(n), f)});
  }
  for (auto [n, p] : std::initializer_list<std::pair<u32, u64>>{{5, 2}, {5, 3}, {7, 2}}) {
    Field f = FieldSpec::make(p, 1);
    items.push_back({"permmod(dih" + std::to_string(n) + ",p" + std::to_string(p) + ")",
                     perm_module(dihedral(n), f)});
  }
  for (auto [n, p] : std::initializer_list<std::pair<u32, u64>>{{4, 2}, {6, 2}, {6, 3}, {5, 5}}) {
    Field f = FieldSpec::make(p, 1);
    items.push_back({"permmod(cyc" + std::to_string(n) + ",p" + std::to_string(p) + ")",
                     perm_module(cyclic(n), f)});
  }
  // the running counterexample groups (p | |H|, p-soluble)
  items.push_back({"ex31odd(5)", ex31_odd_module(5)});
  items.push_back({"ex31odd(7)", ex31_odd_module(7)});
  items.push_back({"ex31char2", ex31_char2_module()});
  // coprime characteristic (trivial Sylow) items
  {
    Field f5 = FieldSpec::make(5, 1);
    items.push_back({"permmod(sym3,p5)", perm_module(sym(3), f5)});
    Field f7 = FieldSpec::make(7, 1);
    items.push_back({"permmod(sym4,p7)", perm_module(sym(4), f7)});
    items.push_back({"delperm(sym4,p7)", deleted_perm_module(sym(4), f7)});
  }
  // deleted permutation modules in defining characteristic
  {
    Field f2 = FieldSpec::make(2, 1);
    items.push_back({"delperm(sym3,p2)", deleted_perm_module(sym(3), f2)});
    Field f3 = FieldSpec::make(3, 1);
    items.push_back({"delperm(sym4,p3)", deleted_perm_module(sym(4), f3)});
  }
  return items;
}

std::vector<TransitiveItem> transitive_corpus() {
  std::vector<TransitiveItem> items;
  for (u32 n : {3, 4, 5, 6, 7}) items.push_back({"sym" + std::to_string(n), sym(n), true});
  for (u32 n : {4, 5, 6, 7}) items.push_back({"alt" + std::to_string(n), alt(n), true});
  for (u32 n : {5, 6, 7}) items.push_back({"dih" + std::to_string(n), dihedral(n), n % 2 == 1});
  for (u64 q : {4, 5, 7, 8, 9, 11, 13}) items.push_back({"psl2(" + std::to_string(q) + ")", psl2(q), true});
  // affine holomorphs over irreducible actions
  items.push_back({"asl23", affine_holomorph(sl2_natural(3)), true});
  items.push_back({"agl23", affine_holomorph(gl2_natural(3)), true});
  items.push_back({"asl25", affine_holomorph(sl2_natural(5)), true});
  // Frobenius holomorph products (transitive, imprimitive for l >= 2)
  items.push_back({"frob(5:4)", frobenius_product({{5, 4}}).group, true});
  items.push_back({"frob(5:4,7:3)", frobenius_product({{5, 4}, {7, 3}}).group, false});
  items.push_back({"frob(5:4,7:3,23:11)",
                   frobenius_product({{5, 4}, {7, 3}, {23, 11}}).group, false});
  items.push_back({"frob(13:12,11:5,29:7)",
                   frobenius_product({{13, 12}, {11, 5}, {29, 7}}).group, false});
  // wreath product actions
  items.push_back({"wr(sym3,2)", product_action_wreath(sym(3), 2), true});
  items.push_back({"wr(psl2_5,2)", product_action_wreath(psl2(5), 2), true});
  // an imprimitive coset action
  {
    PermGroup s4 = sym(4);
    std::vector<Perm> sub{parse_perm("(1 2)", 4)};
    items.push_back({"sym4/cosets(C2)", coset_action(s4, sub).image, false});
  }
  return items;
}

}  // namespace cgt
