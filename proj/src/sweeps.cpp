#include "cgt/sweeps.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/constructions.hpp"
#include "cgt/twisted_wreath.hpp"

namespace cgt {

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1_1";
    case TheoremId::T1_2: return "T1_2";
    case TheoremId::C1_3: return "C1_3";
    case TheoremId::T1_4: return "T1_4";
    case TheoremId::L2_2: return "L2_2";
    case TheoremId::T1_6: return "T1_6";
    case TheoremId::T1_9: return "T1_9";
    case TheoremId::L5_2: return "L5_2";
    case TheoremId::L5_3: return "L5_3";
    case TheoremId::L6_2: return "L6_2";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::C1_3, TheoremId::T1_4,
                       TheoremId::L2_2, TheoremId::T1_6, TheoremId::T1_9, TheoremId::L5_2,
                       TheoremId::L5_3, TheoremId::L6_2})
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

VectorOrbits vector_orbits(const MatGroup& g, u64 cap) {
  VectorOrbits vo;
  vo.vectors = all_vectors(g.field(), g.dim(), cap);
  vo.orbit_id.assign(vo.vectors.size(), static_cast<u32>(-1));
  const Field& f = g.field();
  for (u32 start = 0; start < vo.vectors.size(); ++start) {
    if (vo.orbit_id[start] != static_cast<u32>(-1)) continue;
    u32 id = static_cast<u32>(vo.lengths.size());
    std::vector<u32> queue{start};
    vo.orbit_id[start] = id;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const Mat& m : g.generators()) {
        u32 img = static_cast<u32>(vector_rank(f, apply_row(vo.vectors[queue[head]], m)));
        if (vo.orbit_id[img] == static_cast<u32>(-1)) {
          vo.orbit_id[img] = id;
          queue.push_back(img);
        }
      }
    }
    vo.lengths.push_back(queue.size());
    vo.rep.push_back(start);
  }
  return vo;
}

Mat matrix_from_image_perm(const MatGroup& g, const Perm& p) {
  const auto& im = g.perm_image();
  std::vector<Vec> rows;
  for (u32 i = 0; i < g.dim(); ++i) {
    Vec e(g.dim(), 0);
    e[i] = 1;
    rows.push_back(im.points[p[im.index.at(e)]]);
  }
  return Mat::from_rows(g.field(), rows);
}

namespace {

std::string vec_str(const Field& f, const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    out << f->to_string(v[i]);
    if (i + 1 < v.size()) out << ',';
  }
  out << ')';
  return out.str();
}

std::vector<Mat> sorted_stabilizer(const MatGroup& g, const Vec& v) {
  auto fix = g.vec_stabilizer_elements(v);
  std::sort(fix.begin(), fix.end());
  return fix;
}

// ---- T1_1: completely reducible modules, coprime orbit pairs ----
void sweep_t1_1(SweepReport& rep, u64 seed) {
  auto corpus = maschke_module_corpus(seed, 200);
  for (const auto& it : corpus) {
    SweepItemResult res{it.term, "pass", "", 0};
    const MatGroup& H = it.group;
    u64 order = H.order();
    if (order > 2000 || order % H.field()->p() == 0) {
      res.status = "skip";
      res.detail = "outside corpus gates";
      rep.items.push_back(res);
      continue;
    }
    u64 space = 1;
    bool big = false;
    for (u32 i = 0; i < H.dim(); ++i) {
      space *= H.field()->q();
      if (space > 200000) big = true;
    }
    if (big) {
      res.status = "skip";
      res.detail = "vector space too large for the exhaustive pass";
      rep.items.push_back(res);
      continue;
    }
    VectorOrbits vo = vector_orbits(H);
    bool has_pair = false;
    for (u32 i = 0; i < vo.lengths.size() && res.status == "pass"; ++i) {
      for (u32 j = i; j < vo.lengths.size() && res.status == "pass"; ++j) {
        u64 m = vo.lengths[i], n = vo.lengths[j];
        if (gcd_u64(m, n) != 1) continue;
        if (m > 1 && n > 1) has_pair = true;
        const Vec a = vo.vectors[vo.rep[i]];
        // orbit-length claim over every b in orbit j (covers all H-orbits
        // of pairs with first entry in orbit i)
        for (u32 bpos = 0; bpos < vo.vectors.size(); ++bpos) {
          if (vo.orbit_id[bpos] != j) continue;
          Vec ab(a.size());
          for (size_t t = 0; t < a.size(); ++t)
            ab[t] = H.field()->add(a[t], vo.vectors[bpos][t]);
          ++res.checked;
          if (vo.lengths[vo.orbit_id[vector_rank(H.field(), ab)]] != m * n) {
            res.status = "fail";
            res.detail = "orbit length of a+b != mn at a=" + vec_str(H.field(), a) +
                         " b=" + vec_str(H.field(), vo.vectors[bpos]);
            break;
          }
        }
        // stabilizer set equality on the representative pair
        if (res.status == "pass") {
          const Vec b = vo.vectors[vo.rep[j]];
          Vec ab(a.size());
          for (size_t t = 0; t < a.size(); ++t) ab[t] = H.field()->add(a[t], b[t]);
          auto ca = sorted_stabilizer(H, a);
          auto cb = sorted_stabilizer(H, b);
          auto cab = sorted_stabilizer(H, ab);
          std::vector<Mat> meet;
          std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                std::back_inserter(meet));
          ++res.checked;
          if (cab != meet) {
            res.status = "fail";
            res.detail = "stabilizer of a+b differs from the intersection";
          }
        }
      }
    }
    if (res.status == "pass" && has_pair) ++rep.interesting;
    rep.items.push_back(std::move(res));
  }
}

// ---- T1_2: irreducible modules, all nonzero orbit pairs share a factor ----
void sweep_t1_2(SweepReport& rep, u64) {
  auto corpus = irreducible_module_corpus();
  // the 2-dimensional submodule of the char-2 counterexample module
  {
    MatGroup v = ex31_char2_module();
    auto lattice = submodule_lattice(v);
    for (const auto& w : lattice)
      if (w.dim() == 2)
        corpus.push_back({"ex31char2_sub2", restrict_to_submodule(v, w)});
  }
  for (const auto& it : corpus) {
    SweepItemResult res{it.term, "pass", "", 0};
    const MatGroup& H = it.group;
    bool trivial_action = true;
    for (const Mat& m : H.generators())
      if (!m.is_identity()) trivial_action = false;
    if (trivial_action) {
      res.status = "skip";
      res.detail = "trivial module";
      rep.items.push_back(res);
      continue;
    }
    if (!is_irreducible(H)) {
      res.status = "fail";
      res.detail = "corpus module is not irreducible";
      rep.items.push_back(res);
      continue;
    }
    VectorOrbits vo = vector_orbits(H);
    u32 zero_orbit = vo.orbit_id[0];
    for (u32 i = 0; i < vo.lengths.size() && res.status == "pass"; ++i) {
      if (i == zero_orbit) continue;
      for (u32 j = i; j < vo.lengths.size(); ++j) {
        if (j == zero_orbit) continue;
        ++res.checked;
        if (gcd_u64(vo.lengths[i], vo.lengths[j]) == 1) {
          res.status = "fail";
          res.detail = "coprime nonzero orbit lengths " + std::to_string(vo.lengths[i]) +
                       "," + std::to_string(vo.lengths[j]);
          break;
        }
      }
    }
    rep.items.push_back(std::move(res));
  }
}

// ---- C1_3: spanning orbits share a factor ----
void sweep_c1_3(SweepReport& rep, u64 seed) {
  std::vector<ModuleItem> corpus = maschke_module_corpus(seed ^ 0xc13, 40);
  corpus.push_back({"ex31char2", ex31_char2_module()});
  corpus.push_back({"ex31odd(5)", ex31_odd_module(5)});
  for (const auto& it : p_soluble_module_corpus()) corpus.push_back(it);
  for (const auto& it : corpus) {
    SweepItemResult res{it.term, "pass", "", 0};
    const MatGroup& H = it.group;
    bool trivial_action = true;
    for (const Mat& m : H.generators())
      if (!m.is_identity()) trivial_action = false;
    if (trivial_action || H.order() > 3000) {
      res.status = "skip";
      res.detail = trivial_action ? "trivial module" : "too large";
      rep.items.push_back(res);
      continue;
    }
    VectorOrbits vo = vector_orbits(H);
    std::vector<u32> spanning;
    for (u32 i = 0; i < vo.lengths.size(); ++i)
      if (spin(H, vo.vectors[vo.rep[i]]).dim() == H.dim()) spanning.push_back(i);
    for (size_t x = 0; x < spanning.size() && res.status == "pass"; ++x)
      for (size_t y = x; y < spanning.size(); ++y) {
        ++res.checked;
        if (gcd_u64(vo.lengths[spanning[x]], vo.lengths[spanning[y]]) == 1) {
          res.status = "fail";
          res.detail = "coprime spanning orbits " + std::to_string(vo.lengths[spanning[x]]) +
                       "," + std::to_string(vo.lengths[spanning[y]]);
          break;
        }
      }
    if (!spanning.empty()) ++rep.interesting;
    rep.items.push_back(std::move(res));
  }
}

// ---- T1_4: p-soluble groups, Sylow-fixed spanning vectors ----
void sweep_t1_4(SweepReport& rep, u64) {
  for (const auto& it : p_soluble_module_corpus()) {
    SweepItemResult res{it.term, "pass", "", 0};
    const MatGroup& H = it.group;
    u64 p = H.field()->p();
    if (H.order() > 2000) {
      res.status = "skip";
      res.detail = "too large";
      rep.items.push_back(res);
      continue;
    }
    const PermGroup& image = H.perm_image().group;
    SmallGroup sg(image);
    if (!sg.p_soluble(p)) {
      res.status = "skip";
      res.detail = "not p-soluble";
      rep.items.push_back(res);
      continue;
    }
    auto syl = sg.sylow(p);
    std::vector<Mat> syl_mats;
    for (u32 gi : syl.gens) syl_mats.push_back(matrix_from_image_perm(H, sg.elem(gi)));
    if (syl_mats.empty()) syl_mats.push_back(Mat::identity(H.field(), H.dim()));
    Subspace syl_fixed = fixed_space(syl_mats);

    VectorOrbits vo = vector_orbits(H);
    std::vector<bool> spans(vo.lengths.size());
    for (u32 i = 0; i < vo.lengths.size(); ++i)
      spans[i] = spin(H, vo.vectors[vo.rep[i]]).dim() == H.dim();

    Subspace cvh = fixed_space(H);

    // enumerate the Sylow-fixed subspace
    std::vector<Vec> fixed_vecs;
    {
      u64 combos = 1;
      for (u32 i = 0; i < syl_fixed.dim(); ++i) combos *= H.field()->q();
      std::vector<u64> c(syl_fixed.dim(), 0);
      for (u64 step = 0; step < combos; ++step) {
        Vec v(H.dim(), 0);
        for (u32 bi = 0; bi < syl_fixed.dim(); ++bi)
          for (u32 t = 0; t < H.dim(); ++t)
            v[t] = H.field()->add(v[t], H.field()->mul(c[bi], syl_fixed.basis()[bi][t]));
        fixed_vecs.push_back(std::move(v));
        for (u32 bi = 0; bi < c.size(); ++bi) {
          if (++c[bi] < H.field()->q()) break;
          c[bi] = 0;
        }
      }
    }
    bool any_qualifies = false;
    std::vector<Mat> hall_elems;
    std::vector<Mat> hall_sorted;
    bool hall_ready = false;
    for (const Vec& a : fixed_vecs) {
      u32 aid = vo.orbit_id[vector_rank(H.field(), a)];
      if (!spans[aid]) continue;
      any_qualifies = true;
      ++res.checked;
      if (cvh.dim() > 1) {
        res.status = "fail";
        res.detail = "dim C_V(H) = " + std::to_string(cvh.dim());
        break;
      }
      u64 alen = vo.lengths[aid];
      for (u32 bpos = 0; bpos < vo.vectors.size(); ++bpos) {
        if (gcd_u64(alen, vo.lengths[vo.orbit_id[bpos]]) != 1) continue;
        ++res.checked;
        if (!cvh.contains(vo.vectors[bpos])) {
          res.status = "fail";
          res.detail = "coprime-orbit vector outside C_V(H)";
          break;
        }
      }
      if (res.status != "pass") break;
      if (!hall_ready) {
        // psi through a Hall p'-subgroup: image = C_V(L) = C_V(H)
        auto hall = sg.hall_p_prime(p);
        for (u32 ei : hall.elems) hall_elems.push_back(matrix_from_image_perm(H, sg.elem(ei)));
        hall_sorted = hall_elems;
        std::sort(hall_sorted.begin(), hall_sorted.end());
        std::vector<Vec> psi_basis;
        for (u32 i = 0; i < H.dim(); ++i) {
          Vec e(H.dim(), 0);
          e[i] = 1;
          psi_basis.push_back(psi_map(e, hall_elems));
        }
        Subspace psi_image(H.field(), H.dim(), psi_basis);
        Subspace cvl = fixed_space(hall_elems);
        ++res.checked;
        if (!(psi_image == cvl && cvl == cvh)) {
          res.status = "fail";
          res.detail = "psi image / C_V(L) / C_V(H) disagree";
          break;
        }
        hall_ready = true;
      }
      // H = C_H(a) * L
      auto ca = sorted_stabilizer(H, a);
      std::vector<Mat> meet;
      std::set_intersection(ca.begin(), ca.end(), hall_sorted.begin(), hall_sorted.end(),
                            std::back_inserter(meet));
      ++res.checked;
      if (ca.size() * hall_sorted.size() != H.order() * meet.size()) {
        res.status = "fail";
        res.detail = "H != C_H(a) L";
        break;
      }
    }
    if (any_qualifies && res.status == "pass") ++rep.interesting;
    rep.items.push_back(std::move(res));
  }
}

// ---- L2_2: factorizations H = AB against irreducible modules ----
void sweep_l2_2(SweepReport& rep, u64) {
  struct Item {
    std::string term;
    MatGroup H;
    std::vector<Mat> a_gens, b_gens;
  };
  std::vector<Item> items;
  {
    // GL(3,2) = stab(e1) * N(Syl_7), natural module
    MatGroup H = gl32_natural();
    const auto& elems = H.elements(200);
    std::vector<Mat> A;
    Vec e1{1, 0, 0};
    for (const Mat& m : elems)
      if (apply_row(e1, m) == e1) A.push_back(m);
    Mat x7 = Mat::identity(H.field(), 3);
    for (const Mat& m : elems) {
      // order 7 test by repeated multiplication
      Mat t = m;
      u32 o = 1;
      while (!t.is_identity() && o <= 8) {
        t = t * m;
        ++o;
      }
      if (o == 7) {
        x7 = m;
        break;
      }
    }
    std::vector<Mat> P{x7};
    for (u32 i = 2; i < 7; ++i) P.push_back(P.back() * x7);
    P.push_back(Mat::identity(H.field(), 3));
    std::sort(P.begin(), P.end());
    std::vector<Mat> B;
    for (const Mat& m : elems) {
      Mat mi = *m.inverse();
      bool norm = true;
      for (const Mat& g : {x7})
        if (!std::binary_search(P.begin(), P.end(), mi * g * m)) norm = false;
      if (norm) B.push_back(m);
    }
    items.push_back({"gl32=stab.e1*N(syl7)", H, A, B});
  }
  {
    // GL(2,2) = <swap> * <rotation>, natural module
    Field f = FieldSpec::make(2, 1);
    Mat swap = Mat::from_rows(f, {{0, 1}, {1, 0}});
    Mat rot = Mat::from_rows(f, {{0, 1}, {1, 1}});
    items.push_back({"gl22=C2*C3", MatGroup(f, 2, {swap, rot}), {swap}, {rot}});
  }
  {
    // SL(2,3) = Q8 * C3, natural module
    MatGroup H = sl2_natural(3);
    const auto& elems = H.elements(100);
    std::vector<Mat> q8, c3;
    for (const Mat& m : elems) {
      Mat t = m;
      u32 o = 1;
      while (!t.is_identity()) {
        t = t * m;
        ++o;
      }
      if (o == 4 || o == 2 || o == 1) q8.push_back(m);  // Q8 = 2-elements
      if (o == 3 && c3.empty()) c3.push_back(m);
    }
    items.push_back({"sl23=Q8*C3", H, q8, c3});
  }
  {
    // Sym(4) = stab(4) * <(1 2 3 4)> on the deleted GF(5) module
    Field f = FieldSpec::make(5, 1);
    PermGroup s4 = sym(4);
    MatGroup H = deleted_perm_module(s4, f);
    std::vector<Mat> A;
    for (const std::string& c : {"(1 2)", "(1 2 3)"}) {
      Perm p = parse_perm(c, 4);
      A.push_back(deleted_perm_module(PermGroup(4, {p}), f).generators()[0]);
    }
    std::vector<Mat> B{
        deleted_perm_module(PermGroup(4, {parse_perm("(1 2 3 4)", 4)}), f).generators()[0]};
    items.push_back({"sym4=S3*C4(delperm5)", H, A, B});
  }
  for (const auto& it : items) {
    SweepItemResult res{it.term, "pass", "", 0};
    // factorization check via element sets
    auto elems = it.H.elements(1000);
    auto closure_of = [&](const std::vector<Mat>& gens) {
      std::vector<Mat> cl{Mat::identity(it.H.field(), it.H.dim())};
      std::vector<Mat> seen = cl;
      for (size_t head = 0; head < cl.size(); ++head)
        for (const Mat& g : gens) {
          Mat q = cl[head] * g;
          if (std::find(cl.begin(), cl.end(), q) == cl.end()) cl.push_back(std::move(q));
        }
      std::sort(cl.begin(), cl.end());
      return cl;
    };
    auto A = closure_of(it.a_gens), B = closure_of(it.b_gens);
    std::vector<Mat> meet;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(meet));
    if (A.size() * B.size() != elems.size() * meet.size()) {
      res.status = "fail";
      res.detail = "corpus item is not a factorization";
      rep.items.push_back(res);
      continue;
    }
    if (!is_irreducible(it.H)) {
      res.status = "fail";
      res.detail = "module not irreducible";
      rep.items.push_back(res);
      continue;
    }
    MatGroup Ag(it.H.field(), it.H.dim(), it.a_gens);
    MatGroup Bg(it.H.field(), it.H.dim(), it.b_gens);
    MatGroup Ad = dual_group(Ag), Bd = dual_group(Bg);
    bool a_v = fixed_space(Ag).dim() > 0;
    bool b_vd = fixed_space(Bd).dim() > 0;
    bool b_v = fixed_space(Bg).dim() > 0;
    bool a_vd = fixed_space(Ad).dim() > 0;
    res.checked = 2;
    if ((a_v && b_vd) || (b_v && a_vd)) {
      res.status = "fail";
      res.detail = "both factors fix vectors (V and V*)";
    }
    rep.items.push_back(std::move(res));
  }
}

// ---- T1_6: the twisted wreath instance ----
void sweep_t1_6(SweepReport& rep, u64) {
  auto tw = twisted_wreath_ex44();
  SweepItemResult res{"twisted_wreath_ex44", "pass", "", 3};
  bool has49 = std::find(tw.known_subdegrees.begin(), tw.known_subdegrees.end(), 49ull) !=
               tw.known_subdegrees.end();
  bool has576 = std::find(tw.known_subdegrees.begin(), tw.known_subdegrees.end(), 576ull) !=
                tw.known_subdegrees.end();
  if (!has49 || !has576 || tw.max_coprime_known != 2) {
    res.status = "fail";
    res.detail = "known subdegrees or max coprime set off";
  }
  rep.items.push_back(std::move(res));
}

// ---- T1_9 / L6_2: faithful subdegrees over the transitive corpus ----
void sweep_faithful(SweepReport& rep, bool with_fitting) {
  for (const auto& it : transitive_corpus()) {
    SweepItemResult res{it.term, "pass", "", 0};
    SubdegreeReport sd = subdegrees(it.group, 0);
    if (sd.regular) {
      res.status = "skip";
      res.detail = "regular (no non-trivial faithful subdegree statement)";
      rep.items.push_back(res);
      continue;
    }
    ++res.checked;
    if (sd.max_coprime_faithful.size() > 2) {
      res.status = "fail";
      res.detail = "three pairwise coprime faithful subdegrees";
    }
    if (res.status == "pass" && it.primitive) {
      bool faithful_nontrivial = false;
      for (u32 i = 0; i < sd.subdegrees.size(); ++i)
        if (sd.subdegrees[i] > 1 && sd.faithful[i]) faithful_nontrivial = true;
      ++res.checked;
      if (!faithful_nontrivial) {
        res.status = "fail";
        res.detail = "primitive non-regular group without a faithful subdegree";
      }
    }
    if (res.status == "pass" && with_fitting) {
      PermGroup stab = it.group.point_stabilizer(0);
      if (stab.order() <= default_limits().subgroup_enum_cap) {
        bool ft = fitting_is_trivial(stab);
        if (!ft) {
          ++res.checked;
          if (sd.max_coprime_faithful.size() > 1) {
            res.status = "fail";
            res.detail = "F(stabilizer) != 1 but two coprime faithful subdegrees";
          }
        }
      }
    }
    if (sd.max_coprime.size() >= 3) ++rep.interesting;
    rep.items.push_back(std::move(res));
  }
}

// ---- L5_2: mu of direct products of isomorphic nonabelian simples ----
void sweep_l5_2(SweepReport& rep, u64) {
  struct K {
    std::string term;
    PermGroup g;
  };
  std::vector<K> ks;
  ks.push_back({"alt5", alt(5)});
  ks.push_back({"alt6", alt(6)});
  ks.push_back({"psl2(7)", psl2(7)});
  ks.push_back({"psl2(11)", psl2(11)});
  for (auto& k : ks) {
    SweepItemResult res{k.term, "pass", "", 1};
    MuReport m = mu(k.g);
    if (m.mu > 2) {
      res.status = "fail";
      res.detail = "mu = " + std::to_string(m.mu);
    } else {
      res.detail = "mu = " + std::to_string(m.mu);
    }
    rep.items.push_back(std::move(res));
  }
}

// ---- L5_3: coprime subdegree count against mu(N) ----
void sweep_l5_3(SweepReport& rep, u64) {
  std::vector<std::vector<std::pair<u64, u64>>> recipes = {
      {{5, 4}},
      {{5, 4}, {7, 3}},
      {{5, 4}, {7, 3}, {23, 11}},
      {{13, 12}, {11, 5}, {29, 7}},
  };
  for (const auto& params : recipes) {
    std::ostringstream term;
    term << "frob(";
    for (auto [m, d] : params) term << m << ":" << d << ",";
    term << ")";
    SweepItemResult res{term.str(), "pass", "", 0};
    FrobeniusProduct fp = frobenius_product(params);
    // N = the stabilizer K itself: normal in K, fixes only the identity
    PermGroup stab = fp.group.point_stabilizer(fp.identity_point);
    u32 fixed = 0;
    for (u32 pt = 0; pt < fp.group.degree(); ++pt) {
      bool all_fix = true;
      for (const Perm& g : stab.generators())
        if (g[pt] != pt) {
          all_fix = false;
          break;
        }
      if (all_fix) ++fixed;
    }
    ++res.checked;
    if (fixed != 1) {
      res.status = "fail";
      res.detail = "stabilizer fixes " + std::to_string(fixed) + " points";
      rep.items.push_back(std::move(res));
      continue;
    }
    SubdegreeReport sd = subdegrees(fp.group, fp.identity_point);
    MuReport m = mu(stab);
    ++res.checked;
    if (sd.max_coprime.size() > m.mu) {
      res.status = "fail";
      res.detail = "coprime subdegrees " + std::to_string(sd.max_coprime.size()) +
                   " > mu(N) = " + std::to_string(m.mu);
    } else {
      res.detail = "coprime " + std::to_string(sd.max_coprime.size()) +
                   " <= mu = " + std::to_string(m.mu);
    }
    rep.items.push_back(std::move(res));
  }
}

}  // namespace

SweepReport thm_sweep(TheoremId id, u64 seed) {
  SweepReport rep;
  rep.theorem = id;
  rep.seed = seed;
  switch (id) {
    case TheoremId::T1_1: sweep_t1_1(rep, seed); break;
    case TheoremId::T1_2: sweep_t1_2(rep, seed); break;
    case TheoremId::C1_3: sweep_c1_3(rep, seed); break;
    case TheoremId::T1_4: sweep_t1_4(rep, seed); break;
    case TheoremId::L2_2: sweep_l2_2(rep, seed); break;
    case TheoremId::T1_6: sweep_t1_6(rep, seed); break;
    case TheoremId::T1_9: sweep_faithful(rep, false); break;
    case TheoremId::L5_2: sweep_l5_2(rep, seed); break;
    case TheoremId::L5_3: sweep_l5_3(rep, seed); break;
    case TheoremId::L6_2: sweep_faithful(rep, true); break;
  }
  for (const auto& it : rep.items) {
    rep.checked += it.checked;
    if (it.status == "pass") ++rep.passes;
    else if (it.status == "fail") ++rep.failures;
    else ++rep.skips;
  }
  return rep;
}

}  // namespace cgt
