#include "cgt/registry.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>

#include "cgt/analysis.hpp"
#include "cgt/classical.hpp"
#include "cgt/constructions.hpp"
#include "cgt/corpus.hpp"
#include "cgt/formats.hpp"
#include "cgt/sweeps.hpp"
#include "cgt/twisted_wreath.hpp"

namespace cgt {

bool data_file_exists(const std::string& data_dir, const std::string& name) {
  std::ifstream in(data_dir + "/" + name);
  return static_cast<bool>(in);
}

namespace {

// ---------- shared helpers ----------

std::string u64s(u64 v) { return std::to_string(v); }

// elements of `all` normalizing the subgroup with the given sorted element list
std::vector<Perm> normalizing_elements(const std::vector<Perm>& all,
                                       const std::vector<Perm>& sub_sorted,
                                       const std::vector<Perm>& sub_gens) {
  std::vector<Perm> out;
  for (const Perm& g : all) {
    Perm gi = g.inverse();
    bool norm = true;
    for (const Perm& s : sub_gens)
      if (!std::binary_search(sub_sorted.begin(), sub_sorted.end(), gi * s * g)) {
        norm = false;
        break;
      }
    if (norm) out.push_back(g);
  }
  return out;
}

// Sylow normalizer in a group small enough to enumerate.
PermGroup sylow_normalizer_small(const PermGroup& g, u64 p) {
  SmallGroup sg(g);
  auto syl = sg.sylow(p);
  std::vector<Perm> sorted;
  for (u32 i : syl.elems) sorted.push_back(sg.elem(i));
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> gens;
  for (u32 i : syl.gens) gens.push_back(sg.elem(i));
  std::vector<Perm> all;
  for (u32 i = 0; i < sg.size(); ++i) all.push_back(sg.elem(i));
  std::vector<Perm> norm = normalizing_elements(all, sorted, gens);
  PermGroup n(g.degree(), norm);
  n.set_known_order(norm.size());
  return n;
}

// canonical generator of a cyclic group of prime order: smallest power
Perm min_generator(const Perm& x) {
  Perm best = x;
  Perm cur = x;
  while (true) {
    cur = cur * x;
    if (cur.is_identity()) break;
    if (cur < best) best = cur;
  }
  return best;
}

// Normalizer of a cyclic Sylow p-subgroup of a large group: Schreier
// generators of the conjugation orbit on canonical generators.
PermGroup cyclic_sylow_normalizer(const PermGroup& g, u64 p, u64 expected_order) {
  // deterministic word stream until an element of order divisible by p shows
  Perm x = Perm::identity(g.degree());
  {
    std::mt19937_64 rng(0x517109);
    bool found = false;
    while (!found) {
      x = x * g.generators()[rng() % g.generators().size()];
      u64 o = x.order();
      if (o % p == 0) {
        x = x.power(o / p);
        found = true;
      }
    }
  }
  Perm start = min_generator(x);
  auto rec = orbit_closure<Perm, std::function<Perm(const Perm&, size_t)>, PermHash>(
      start, g.generators().size(),
      [&](const Perm& pt, size_t gi) {
        return min_generator(g.generators()[gi].inverse() * pt * g.generators()[gi]);
      },
      default_limits().orbit_cap, true);
  // Schreier generators, filtered through an incrementally grown chain
  std::unordered_map<Perm, u32, PermHash> where;
  for (u32 i = 0; i < rec.points.size(); ++i) where.emplace(rec.points[i], i);
  auto word_rep = [&](size_t i) {
    Perm w = Perm::identity(g.degree());
    for (u32 gi : rec.word(i)) w = w * g.generators()[gi];
    return w;
  };
  std::vector<Perm> nor_gens{x};
  PermGroup current(g.degree(), nor_gens);
  for (size_t i = 0; i < rec.points.size(); ++i) {
    Perm ui = word_rep(i);
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
      Perm image = min_generator(g.generators()[gi].inverse() * rec.points[i] *
                                 g.generators()[gi]);
      Perm schreier = ui * g.generators()[gi] * word_rep(where.at(image)).inverse();
      if (!current.contains(schreier)) {
        nor_gens.push_back(schreier);
        current = PermGroup(g.degree(), nor_gens);
      }
    }
    if (current.order() == expected_order) break;
  }
  return current;
}

// first element (ascending) of order `ord` whose join with `seed` has the
// target order
PermGroup extend_to_order(const PermGroup& g, const PermGroup& seed, u64 element_order,
                          u64 target) {
  for (const Perm& t : g.elements()) {
    if (t.order() != element_order) continue;
    std::vector<Perm> gens = seed.generators();
    gens.push_back(t);
    PermGroup ext(g.degree(), gens);
    if (ext.order() == target) return ext;
  }
  throw DomainError("no extension to the target order found");
}

Mat s4_quotient_matrix(const Field& f, const Perm& p) {
  // action on e1,e2,e3 modulo <e1+e2+e3+e4>
  std::vector<Vec> rows;
  for (u32 i = 0; i < 3; ++i) {
    Vec row(3, 0);
    u32 im = p[i];
    if (im < 3) row[im] = 1;
    else row = {1, 1, 1};
    rows.push_back(row);
  }
  return Mat::from_rows(f, rows);
}

std::vector<Mat> mat_closure(const Field& f, u32 dim, const std::vector<Mat>& gens) {
  std::vector<Mat> cl{Mat::identity(f, dim)};
  for (size_t head = 0; head < cl.size(); ++head)
    for (const Mat& g : gens) {
      Mat q = cl[head] * g;
      if (std::find(cl.begin(), cl.end(), q) == cl.end()) cl.push_back(std::move(q));
    }
  std::sort(cl.begin(), cl.end());
  return cl;
}

std::string orbit_multiset_str(const std::vector<u64>& lengths) {
  std::vector<u64> s = lengths;
  std::sort(s.begin(), s.end());
  return list_str(s);
}

// ---------- case bodies ----------

CaseResult case_ex31_char2(const VerifyContext&) {
  CaseResult r;
  MatGroup H = ex31_char2_module();
  Field f = H.field();
  VectorOrbits vo = vector_orbits(H);
  r.expect("orbit-sizes", "{1,3,4}", orbit_multiset_str(vo.lengths));
  Vec a{1, 0, 0}, b{1, 1, 0}, ab{0, 1, 0};
  auto ca = H.vec_stabilizer_elements(a);
  auto cb = H.vec_stabilizer_elements(b);
  auto cab = H.vec_stabilizer_elements(ab);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  std::sort(cab.begin(), cab.end());
  r.expect_u64("stab-a-order", 6, ca.size());
  r.expect_u64("stab-b-order", 8, cb.size());
  r.expect_u64("stab-a-plus-b-order", 6, cab.size());
  std::vector<Mat> meet;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(meet));
  r.expect_u64("stab-intersection-order", 2, meet.size());
  r.expect_true("stab-a-plus-b-differs-from-intersection", cab != meet);
  // the named generator sets
  auto set_of = [&](std::initializer_list<const char*> cycles) {
    std::vector<Mat> gens;
    for (const char* c : cycles) gens.push_back(s4_quotient_matrix(f, parse_perm(c, 4)));
    return mat_closure(f, 3, gens);
  };
  r.expect_true("stab-a-is-<(2 3),(3 4)>", ca == set_of({"(2 3)", "(3 4)"}));
  r.expect_true("stab-b-is-<(1 2),(1 3 2 4)>", cb == set_of({"(1 2)", "(1 3 2 4)"}));
  r.expect_true("stab-a-plus-b-is-<(1 3),(3 4)>", cab == set_of({"(1 3)", "(3 4)"}));
  r.expect_true("stab-intersection-is-<(3 4)>", meet == set_of({"(3 4)"}));
  r.expect_true("not-completely-reducible", !is_completely_reducible(H));
  r.expect_u64("group-order", 24, H.order());
  return r;
}

CaseResult case_ex31_odd(u64 p) {
  CaseResult r;
  MatGroup H = ex31_odd_module(p);
  Field f = H.field();
  u64 lambda = smallest_primitive_root(p);
  VectorOrbits vo = vector_orbits(H);
  std::vector<u64> expected{1, p - 1};
  for (u64 i = 0; i < p - 1; ++i) expected.push_back(p);
  std::sort(expected.begin(), expected.end());
  r.expect("orbit-sizes", list_str(expected), orbit_multiset_str(vo.lengths));
  r.expect_u64("orbit-count", p + 1, vo.lengths.size());
  r.expect_u64("group-order", p * (p - 1), H.order());
  Vec e1{lambda, 0}, e2{0, f->sub(1, lambda)};
  Vec e12{e1[0], e2[1]};
  auto c1 = H.vec_stabilizer_elements(e1);
  auto c2 = H.vec_stabilizer_elements(e2);
  auto c12 = H.vec_stabilizer_elements(e12);
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  std::sort(c12.begin(), c12.end());
  const Mat& g = H.generators()[0];
  const Mat& h = H.generators()[1];
  r.expect_true("stab-e1-is-<g>", c1 == mat_closure(f, 2, {g}));
  r.expect_true("stab-e2-is-<h>", c2 == mat_closure(f, 2, {h}));
  r.expect_true("stab-e1-plus-e2-is-<gh>", c12 == mat_closure(f, 2, {g * h}));
  std::vector<Mat> meet;
  std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(meet));
  r.expect_u64("stab-intersection-order", 1, meet.size());
  r.expect_true("stab-e1-plus-e2-nontrivial", c12.size() > 1);
  r.expect_true("completely-reducible-fails-hypothesis", !is_completely_reducible(H));
  return r;
}

CaseResult sweep_case(TheoremId id, const VerifyContext& ctx, u64 min_items,
                      u64 min_interesting, const char* interesting_label) {
  CaseResult r;
  SweepReport rep = thm_sweep(id, ctx.seed);
  r.seed = rep.seed;
  r.expect_u64("failures", 0, rep.failures);
  u64 effective = rep.passes + rep.failures;
  if (min_items) r.expect_true("items>=" + u64s(min_items), effective >= min_items);
  if (min_interesting)
    r.expect_true(std::string(interesting_label) + ">=" + u64s(min_interesting),
                  rep.interesting >= min_interesting);
  r.info("items", u64s(effective));
  r.info("skipped", u64s(rep.skips));
  r.info("assertions", u64s(rep.checked));
  r.info(interesting_label, u64s(rep.interesting));
  for (const auto& it : rep.items)
    if (it.status == "fail") r.info("failed-item", it.item + ": " + it.detail);
  return r;
}

CaseResult case_ex44(const VerifyContext&) {
  CaseResult r;
  TwistedWreathReport tw = twisted_wreath_ex44();
  r.expect_u64("image-degree", 28224, tw.image.degree());
  r.expect_u64("orbit-g", 576, tw.orbit_g);
  r.expect_u64("orbit-h", 49, tw.orbit_h);
  r.expect_u64("cent-g", 98, tw.cent_g);
  r.expect_u64("cent-h", 1152, tw.cent_h);
  r.expect_true("cent-gh-equals-intersection", tw.cent_gh_equals_intersection);
  r.expect_u64("max-coprime-known-subdegrees", 2, tw.max_coprime_known);
  r.expect_u64("image-order", 56448, tw.image.order());
  r.expect_u64("gamma-order", 7, tw.gamma_order);
  r.expect_u64("a-order", 4, tw.a_order);
  r.expect_u64("b-order", 3, tw.b_order);
  r.expect_true("eta-is-r-squared", tw.eta_is_r_squared);
  r.expect_u64("c-order", 98, tw.c_order);
  r.expect_u64("d-order", 1152, tw.d_order);
  r.expect_u64("sym4-subgroup-order", 24, tw.s_order);
  r.expect_true("c-equals-cent-g", tw.c_is_cent_g);
  r.expect_true("d-equals-cent-h", tw.d_is_cent_h);
  r.expect_u64("conjugated-d-meet-l-order", 8, tw.dtl_order);
  r.expect_true("conjugated-d-meet-l-dihedral", tw.dtl_is_dihedral);
  r.expect_true("conjugated-d-meet-l-centre", tw.dtl_center_is_eta);
  r.expect_true("g-well-defined", tw.g_well_defined);
  r.expect_true("h-well-defined", tw.h_well_defined);
  r.expect_true("g-compatible", tw.g_in_socle);
  r.expect_true("h-compatible", tw.h_in_socle);
  r.info("cent-gh", u64s(tw.cent_gh));
  r.info("orbit-gh", u64s(tw.orbit_gh) + " = 576*49 = " + u64s(576 * 49));
  r.info("product-orbit-note",
         "the-orbit-of-g*h-has-size-576*49;-the-full-domain-is-|T|^168-so-this-is-consistent");
  r.info("literal-f*g-reading",
         "cent(f)=" + u64s(tw.cent_f) + " cent(f*g)=" + u64s(tw.cent_fg) +
             " equality=" + (tw.literal_fg_reading_holds ? "true" : "false"));
  return r;
}

CaseResult case_tab1_m11(const VerifyContext& ctx) {
  CaseResult r;
  PermGroup m11 = mathieu(11, ctx.data_dir);
  r.expect_u64("m11-order", 7920, m11.order());
  PermGroup n11 = sylow_normalizer_small(m11, 11);
  r.expect_u64("sylow11-normalizer-order", 55, n11.order());
  PermGroup l211 = extend_to_order(m11, n11, 2, 660);
  r.expect_u64("l2-11-order", 660, l211.order());
  PermGroup m10 = m11.point_stabilizer(0);
  r.expect_u64("point-stabilizer-order", 720, m10.order());
  FactorizationRecord f1 =
      check_factorization(m11, l211.generators(), m10.generators());
  r.expect_true("m11=l2(11).m10", f1.holds);
  r.expect_u64("index-a", 12, f1.index_a);
  r.expect_u64("index-b", 11, f1.index_b);
  r.expect_true("coprime-1", f1.coprime);
  r.expect_u64("meet-1", 60, f1.meet_order);
  PermGroup m92 = sylow_normalizer_small(m11, 3);
  r.expect_u64("sylow3-normalizer-order", 144, m92.order());
  FactorizationRecord f2 =
      check_factorization(m11, l211.generators(), m92.generators());
  r.expect_true("m11=l2(11).m9.2", f2.holds);
  r.expect_u64("index-a-2", 12, f2.index_a);
  r.expect_u64("index-b-2", 55, f2.index_b);
  r.expect_true("coprime-2", f2.coprime);
  r.expect_u64("meet-2", 12, f2.meet_order);
  return r;
}

CaseResult case_tab1_m23(const VerifyContext& ctx) {
  CaseResult r;
  PermGroup m23 = mathieu(23, ctx.data_dir);
  r.expect_u64("m23-order", 10200960, m23.order());
  PermGroup frob = cyclic_sylow_normalizer(m23, 23, 253);
  r.expect_u64("23:11-order", 253, frob.order());
  PermGroup m22 = m23.point_stabilizer(0);
  r.expect_u64("m22-order", 443520, m22.order());
  FactorizationRecord f = check_factorization(m23, frob.generators(), m22.generators());
  r.expect_true("m23=(23:11).m22", f.holds);
  r.expect_u64("index-a", 40320, f.index_a);
  r.expect_u64("index-b", 23, f.index_b);
  r.expect_true("coprime", f.coprime);
  r.expect_u64("meet", 11, f.meet_order);
  return r;
}

CaseResult case_tab1_alt8(const VerifyContext&) {
  CaseResult r;
  PermGroup a8 = alt(8);
  r.expect_u64("alt8-order", 20160, a8.order());
  PermGroup a7 = a8.point_stabilizer(7);
  r.expect_u64("alt7-order", 2520, a7.order());
  // affine relabeling: point j <-> the binary vector of j
  std::vector<Perm> agl_gens;
  for (u32 bit = 0; bit < 3; ++bit) {
    std::vector<u32> img(8);
    for (u32 v = 0; v < 8; ++v) img[v] = v ^ (1u << bit);
    agl_gens.emplace_back(std::move(img));
  }
  // GL(3,2) generators acting on vector codes (bit i of v = coefficient i)
  for (const Mat& m : gl32_natural().generators()) {
    std::vector<u32> img(8);
    for (u32 v = 0; v < 8; ++v) {
      Vec x{v & 1u, (v >> 1) & 1u, (v >> 2) & 1u};
      Vec y = apply_row(x, m);
      img[v] = static_cast<u32>(y[0] + 2 * y[1] + 4 * y[2]);
    }
    agl_gens.emplace_back(std::move(img));
  }
  for (const Perm& p : agl_gens) r.expect_true("agl-gen-in-alt8", a8.contains(p));
  PermGroup agl(8, agl_gens);
  r.expect_u64("agl32-order", 1344, agl.order());
  FactorizationRecord f = check_factorization(a8, a7.generators(), agl.generators());
  r.expect_true("alt8=alt7.agl(3,2)", f.holds);
  r.expect_u64("index-a", 8, f.index_a);
  r.expect_u64("index-b", 15, f.index_b);
  r.expect_true("coprime", f.coprime);
  return r;
}

std::string signature_str(const std::vector<CoprimePair>& sigs) {
  std::ostringstream out;
  for (const auto& s : sigs)
    out << "(" << s.a_order << "," << s.b_order << ";" << s.index_a << "," << s.index_b
        << ";" << s.meet_order << ")";
  if (sigs.empty()) out << "none";
  return out.str();
}

CaseResult case_tab1_exhaustive(const VerifyContext&) {
  CaseResult r;
  {
    auto res = coprime_factorization_search(alt(5));
    r.expect("alt5-maximal-coprime", "(12,10;5,6;2)", signature_str(res.signatures));
    r.info("alt5-subgroups", u64s(res.subgroup_count));
  }
  {
    auto res = coprime_factorization_search(alt(6));
    r.expect("alt6-maximal-coprime", "none", signature_str(res.signatures));
  }
  {
    auto res = coprime_factorization_search(psl2(7));
    r.expect("psl2-7-maximal-coprime", "(24,21;7,8;3)", signature_str(res.signatures));
  }
  {
    auto res = coprime_factorization_search(psl2(11));
    r.expect("psl2-11-maximal-coprime", "(55,12;12,55;1)(60,55;11,12;5)",
             signature_str(res.signatures));
  }
  return r;
}

CaseResult case_real_classes(ClassicalFamily fam, u32 n, u64 q, ClassicalVariant var,
                             FormSign sign, bool expect_all_real) {
  CaseResult r;
  ClassicalGroup cg = classical(fam, n, q, var, sign);
  r.expect_u64("order-formula", cg.formula_order, cg.elements.size());
  RealClassReport rep = real_classes_check(cg);
  if (expect_all_real) {
    r.expect_u64("elements-checked", cg.elements.size(), rep.checked);
    r.expect_true("all-real", rep.all_real);
  } else {
    r.expect_true("non-real-element-found", !rep.all_real);
    if (rep.counterexample) r.info("counterexample", rep.counterexample->to_string());
  }
  return r;
}

CaseResult case_mu_basic(const VerifyContext&) {
  CaseResult r;
  MuReport a5 = mu(alt(5));
  r.expect_u64("mu-alt5", 2, a5.mu);
  r.expect("mu-alt5-witness", "{5,6}", list_str(a5.witness));
  MuReport l27 = mu(psl2(7));
  r.expect_u64("mu-psl2-7", 2, l27.mu);
  MuReport c30 = mu(cyclic(30));
  r.expect_u64("mu-cyclic30", 3, c30.mu);
  r.expect("mu-cyclic30-witness", "{2,3,5}", list_str(c30.witness));
  return r;
}

CaseResult case_ex112(const VerifyContext&) {
  CaseResult r;
  FrobeniusProduct fp = frobenius_product({{5, 4}, {7, 3}, {23, 11}});
  r.expect_u64("degree", 805, fp.group.degree());
  r.expect_true("transitive", fp.group.is_transitive());
  SubdegreeReport sd = subdegrees(fp.group, fp.identity_point);
  r.expect("max-coprime-set", "{3,4,11}", list_str(sd.max_coprime));
  r.expect_u64("max-coprime-size", 3, sd.max_coprime.size());
  // marked points have stabilizer orbits of the complement orders
  PermGroup stab = fp.group.point_stabilizer(fp.identity_point);
  std::vector<u64> marked;
  for (u32 pt : fp.marked_points) marked.push_back(stab.orbit_of(pt).length);
  r.expect("marked-orbit-sizes", "{4,3,11}", list_str(marked));
  // the first-coordinate fibres (codes with equal quotient by 5) are blocks
  {
    bool blocks = true;
    for (const Perm& g : fp.group.generators()) {
      for (u32 fibre = 0; fibre < fp.group.degree() / 5 && blocks; ++fibre) {
        u32 target = g[fibre * 5] / 5;
        for (u32 k = 1; k < 5; ++k)
          if (g[fibre * 5 + k] / 5 != target) {
            blocks = false;
            break;
          }
      }
    }
    r.expect_true("first-coordinate-fibres-are-blocks", blocks);
  }
  // the stabilizer is unfaithful on the first marked orbit
  {
    auto orb = stab.orbit_of(fp.marked_points[0]);
    r.expect_true("stabilizer-unfaithful-on-first-marked-orbit",
                  !stab.is_faithful_on(orb.points));
  }
  return r;
}

CaseResult case_affine_nocoprime(const VerifyContext&) {
  CaseResult r;
  u64 items = 0;
  for (const auto& it : irreducible_module_corpus()) {
    u64 space = 1;
    bool big = false;
    for (u32 i = 0; i < it.group.dim(); ++i) {
      space *= it.group.field()->q();
      if (space > 2500) big = true;
    }
    if (big) continue;
    if (!is_irreducible(it.group)) {
      r.expect_true("irreducible:" + it.term, false);
      continue;
    }
    PermGroup g = affine_holomorph(it.group);
    SubdegreeReport sd = subdegrees(g, 0);
    ++items;
    if (sd.max_coprime.size() > 1)
      r.expect("no-coprime-pairs:" + it.term, "<=1",
               "coprime set " + list_str(sd.max_coprime));
  }
  r.expect_true("items>=30", items >= 30);
  r.info("items", u64s(items));
  return r;
}

// A5 <= PSL(2,q) by a seeded (2,3)-pair search with product of order 5.
PermGroup find_alt5_subgroup(const PermGroup& g, u64 seed) {
  std::mt19937_64 rng(seed);
  auto random_element = [&] {
    Perm x = Perm::identity(g.degree());
    u32 len = 8 + rng() % 24;
    for (u32 i = 0; i < len; ++i) x = x * g.generators()[rng() % g.generators().size()];
    return x;
  };
  for (u64 attempt = 0; attempt < 200000; ++attempt) {
    Perm x = random_element();
    u64 ox = x.order();
    if (ox % 2) continue;
    x = x.power(ox / 2);
    Perm y = random_element();
    u64 oy = y.order();
    if (oy % 3) continue;
    y = y.power(oy / 3);
    if ((x * y).order() != 5) continue;
    PermGroup cand(g.degree(), {x, y});
    if (cand.order() == 60) return cand;
  }
  throw Inconclusive("no Alt(5) subgroup found within the attempt budget");
}

CaseResult case_ex42_psl2p(const VerifyContext& ctx) {
  CaseResult r;
  r.seed = ctx.seed;
  {
    PermGroup g = psl2(11);
    PermGroup a5 = find_alt5_subgroup(g, ctx.seed);
    CosetAction act = coset_action(g, a5.generators());
    r.expect_u64("psl2-11-alt5-index", 11, act.index);
    r.expect_true("psl2-11-image-transitive", act.image.is_transitive());
  }
  {
    PermGroup g = psl2(31);
    r.expect_u64("psl2-31-order", 14880, g.order());
    PermGroup a5 = find_alt5_subgroup(g, ctx.seed);
    CosetAction act = coset_action(g, a5.generators());
    r.expect_u64("psl2-31-alt5-index", 248, act.index);
    SubdegreeReport sd = subdegrees(act.image, 0);
    auto has = [&](u64 v) {
      return std::find(sd.subdegrees.begin(), sd.subdegrees.end(), v) != sd.subdegrees.end();
    };
    r.expect_true("subdegree-5", has(5));
    r.expect_true("subdegree-12", has(12));
    r.expect_true("subdegree-60=5*12", has(60));
    r.info("subdegrees", list_str(sd.subdegrees));
  }
  return r;
}

CaseResult case_hs(const VerifyContext& ctx) {
  CaseResult r;
  ParsedGroupFile parsed = parse_group_file(ctx.data_dir + "/hs100.grp");
  if (!parsed.perm || parsed.perm->degree() != 100)
    throw ParseError("hs100.grp: expected a degree-100 permutation group");
  PermGroup hs = *parsed.perm;
  r.expect_u64("hs-order", 44352000, hs.order());
  // find an elementary abelian 2^4 whose normalizer has index 3850
  std::mt19937_64 rng(ctx.seed ^ 0x45);
  auto random_element = [&] {
    Perm x = Perm::identity(100);
    u32 len = 12 + rng() % 30;
    for (u32 i = 0; i < len; ++i) x = x * hs.generators()[rng() % hs.generators().size()];
    return x;
  };
  std::vector<Perm> sub;
  PermGroup found(100, {});
  bool have = false;
  for (u64 attempt = 0; attempt < 4000 && !have; ++attempt) {
    // grow a 2-group from commuting involutions
    std::vector<Perm> gens;
    std::vector<Perm> elems{Perm::identity(100)};
    for (u64 tries = 0; tries < 600 && elems.size() < 16; ++tries) {
      Perm x = random_element();
      u64 o = x.order();
      if (o % 2) continue;
      x = x.power(o / 2);
      bool commutes = true;
      for (const Perm& e : gens)
        if (x * e != e * x) {
          commutes = false;
          break;
        }
      if (!commutes) continue;
      if (std::find(elems.begin(), elems.end(), x) != elems.end()) continue;
      gens.push_back(x);
      PermGroup grp(100, gens);
      if (grp.order() > 16) {
        gens.pop_back();
        continue;
      }
      elems = grp.elements(32);
    }
    if (elems.size() != 16) continue;
    // conjugation orbit of the element-set fingerprint
    std::sort(elems.begin(), elems.end());
    struct SetHash {
      size_t operator()(const std::vector<Perm>& v) const {
        size_t h = 0;
        for (const Perm& p : v) h = h * 1099511628211ull + PermHash{}(p);
        return h;
      }
    };
    try {
      auto rec = orbit_closure<std::vector<Perm>,
                               std::function<std::vector<Perm>(const std::vector<Perm>&, size_t)>,
                               SetHash>(
          elems, hs.generators().size(),
          [&](const std::vector<Perm>& set, size_t gi) {
            std::vector<Perm> out;
            out.reserve(set.size());
            const Perm& g = hs.generators()[gi];
            Perm gi_inv = g.inverse();
            for (const Perm& e : set) out.push_back(gi_inv * e * g);
            std::sort(out.begin(), out.end());
            return out;
          },
          5000, true);
      if (rec.length != 3850) continue;
      // Schreier generators give the normalizer
      std::unordered_map<std::vector<Perm>, u32, SetHash> where;
      for (u32 i = 0; i < rec.points.size(); ++i) where.emplace(rec.points[i], i);
      auto word_rep = [&](size_t i) {
        Perm w = Perm::identity(100);
        for (u32 gidx : rec.word(i)) w = w * hs.generators()[gidx];
        return w;
      };
      std::vector<Perm> ngens = gens;
      PermGroup current(100, ngens);
      for (size_t i = 0; i < rec.points.size() && current.order() != 11520; ++i) {
        Perm ui = word_rep(i);
        for (size_t gidx = 0; gidx < hs.generators().size(); ++gidx) {
          const Perm& g = hs.generators()[gidx];
          std::vector<Perm> image;
          Perm g_inv = g.inverse();
          for (const Perm& e : rec.points[i]) image.push_back(g_inv * e * g);
          std::sort(image.begin(), image.end());
          Perm schreier = ui * g * word_rep(where.at(image)).inverse();
          if (!current.contains(schreier)) {
            ngens.push_back(schreier);
            current = PermGroup(100, ngens);
            if (current.order() == 11520) break;
          }
        }
      }
      if (current.order() == 11520) {
        found = current;
        have = true;
      }
    } catch (const CapExceeded&) {
      continue;
    }
  }
  if (!have) {
    r.status = "inconclusive";
    r.note = "no 2^4 subgroup with a degree-3850 normalizer orbit found";
    return r;
  }
  r.expect_u64("normalizer-order", 11520, found.order());
  CosetAction act = coset_action(hs, found.generators());
  r.expect_u64("coset-degree", 3850, act.index);
  act.image.set_known_order(44352000);
  SubdegreeReport sd = subdegrees(act.image, 0);
  r.expect("subdegrees", "{1,15,32,90,120,160,192,240,240,360,960,1440}",
           list_str(sd.subdegrees));
  auto has_deg = [&](u64 v) {
    return std::find(sd.subdegrees.begin(), sd.subdegrees.end(), v) != sd.subdegrees.end();
  };
  r.expect_true("coprime-pair-15-32-present", has_deg(15) && has_deg(32));
  r.expect_true("product-480-absent", !has_deg(480));
  return r;
}

CaseResult case_j1(const VerifyContext& ctx) {
  CaseResult r;
  ParsedGroupFile parsed = parse_group_file(ctx.data_dir + "/j1-266.grp");
  if (!parsed.perm || parsed.perm->degree() != 266)
    throw ParseError("j1-266.grp: expected a degree-266 permutation group");
  PermGroup j1 = *parsed.perm;
  r.expect_u64("j1-order", 175560, j1.order());
  SubdegreeReport sd = subdegrees(j1, 0);
  r.expect("subdegrees", "{1,11,12,110,132}", list_str(sd.subdegrees));
  r.expect("max-coprime-set", "{11,12}", list_str(sd.max_coprime));
  return r;
}

CaseResult case_tab1_m24(const VerifyContext& ctx) {
  CaseResult r;
  PermGroup m24 = mathieu(24, ctx.data_dir);
  r.expect_u64("m24-order", 244823040, m24.order());
  ParsedGroupFile parsed = parse_group_file(ctx.data_dir + "/m24-sextet.grp");
  if (!parsed.perm || parsed.perm->degree() != 24)
    throw ParseError("m24-sextet.grp: expected a degree-24 permutation group");
  PermGroup sextet = *parsed.perm;
  for (const Perm& g : sextet.generators())
    r.expect_true("sextet-gen-in-m24", m24.contains(g));
  r.expect_u64("sextet-order", 138240, sextet.order());
  PermGroup m23 = m24.point_stabilizer(23);
  r.expect_u64("m23-order", 10200960, m23.order());
  FactorizationRecord f = check_factorization(m24, m23.generators(), sextet.generators());
  r.expect_true("m24=m23.sextet", f.holds);
  r.expect_u64("index-a", 24, f.index_a);
  r.expect_u64("index-b", 1771, f.index_b);
  r.expect_true("coprime", f.coprime);
  r.expect_u64("meet", 5760, f.meet_order);
  return r;
}

}  // namespace

const std::vector<VerifyCase>& verify_registry() {
  static const std::vector<VerifyCase> cases = [] {
    std::vector<VerifyCase> v;
    v.push_back({"ex3.1-p2", "fast", {}, {"A1"}, case_ex31_char2});
    v.push_back({"ex3.1-p5", "fast", {}, {"A2"}, [](const VerifyContext&) {
                   return case_ex31_odd(5);
                 }});
    v.push_back({"ex3.1-p7", "fast", {}, {"A2"}, [](const VerifyContext&) {
                   return case_ex31_odd(7);
                 }});
    v.push_back({"ex3.1-p11", "fast", {}, {"A2"}, [](const VerifyContext&) {
                   return case_ex31_odd(11);
                 }});
    v.push_back({"thm1.1-sweep", "standard", {}, {"A3"}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::T1_1, c, 200, 30, "items-with-coprime-pair");
                 }});
    v.push_back({"thm1.2-sweep", "standard", {}, {"A4"}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::T1_2, c, 20, 0, "items-with-coprime-pair");
                 }});
    v.push_back({"cor1.3-sweep", "standard", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::C1_3, c, 20, 5, "items-with-spanning-orbit");
                 }});
    v.push_back({"lemma2.2-sweep", "fast", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::L2_2, c, 4, 0, "items");
                 }});
    v.push_back({"ex4.4", "standard", {}, {"A5"}, case_ex44});
    v.push_back({"tab1-m11", "standard", {"mathieu11.grp"}, {"A6"}, case_tab1_m11});
    v.push_back({"tab1-m23", "standard", {"mathieu23.grp"}, {"A6"}, case_tab1_m23});
    v.push_back({"tab1-alt8", "standard", {}, {"A6"}, case_tab1_alt8});
    v.push_back({"tab1-exhaustive", "standard", {}, {"A6"}, case_tab1_exhaustive});
    auto rc = [](ClassicalFamily fam, u32 n, u64 q, ClassicalVariant var, FormSign sign,
                 bool all_real) {
      return [=](const VerifyContext&) {
        return case_real_classes(fam, n, q, var, sign, all_real);
      };
    };
    v.push_back({"thm2.1-gl23", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GL, 2, 3, ClassicalVariant::TauExtended,
                    FormSign::Circle, true)});
    v.push_back({"thm2.1-gl32", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GL, 3, 2, ClassicalVariant::TauExtended,
                    FormSign::Circle, true)});
    v.push_back({"thm2.1-gu22", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GU, 2, 2, ClassicalVariant::TauExtended,
                    FormSign::Circle, true)});
    v.push_back({"thm2.1-gu32", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GU, 3, 2, ClassicalVariant::TauExtended,
                    FormSign::Circle, true)});
    v.push_back({"thm2.1-sp42", "standard", {}, {"A7"},
                 rc(ClassicalFamily::SP, 4, 2, ClassicalVariant::Plain, FormSign::Circle,
                    true)});
    v.push_back({"thm2.1-csp23", "standard", {}, {"A7"},
                 rc(ClassicalFamily::SP, 2, 3, ClassicalVariant::Conformal, FormSign::Circle,
                    true)});
    v.push_back({"thm2.1-goplus43", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GO, 4, 3, ClassicalVariant::Plain, FormSign::Plus,
                    true)});
    v.push_back({"thm2.1-gominus43", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GO, 4, 3, ClassicalVariant::Plain, FormSign::Minus,
                    true)});
    v.push_back({"thm2.1-go33", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GO, 3, 3, ClassicalVariant::Plain, FormSign::Circle,
                    true)});
    v.push_back({"thm2.1-control-gl25", "standard", {}, {"A7"},
                 rc(ClassicalFamily::GL, 2, 5, ClassicalVariant::Plain, FormSign::Circle,
                    false)});
    v.push_back({"mu-basic", "fast", {}, {"A8"}, case_mu_basic});
    v.push_back({"ex1.12", "fast", {}, {"A8"}, case_ex112});
    v.push_back({"lemma6.2-sweep", "standard", {}, {"A8"}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::L6_2, c, 10, 1, "items-with-3-candidates");
                 }});
    v.push_back({"thm1.9-sweep", "standard", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::T1_9, c, 10, 0, "items-with-3-candidates");
                 }});
    v.push_back({"lemma5.2-mu", "standard", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::L5_2, c, 4, 0, "items");
                 }});
    v.push_back({"lemma5.3-sweep", "standard", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::L5_3, c, 4, 0, "items");
                 }});
    v.push_back({"thm1.6-tw", "standard", {}, {}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::T1_6, c, 1, 0, "items");
                 }});
    v.push_back({"thm1.4-sweep", "standard", {}, {"A9"}, [](const VerifyContext& c) {
                   return sweep_case(TheoremId::T1_4, c, 10, 5, "items-with-qualifying-vector");
                 }});
    v.push_back({"affine-nocoprime", "standard", {}, {"A10"}, case_affine_nocoprime});
    v.push_back({"ex4.2-psl2p", "standard", {}, {}, case_ex42_psl2p});
    v.push_back({"ex1.11-hs", "extended", {"hs100.grp"}, {"A11"}, case_hs});
    v.push_back({"ex4.2-j1", "extended", {"j1-266.grp"}, {"A11"}, case_j1});
    v.push_back({"tab1-m24", "extended", {"mathieu24.grp", "m24-sextet.grp"}, {"A11"},
                 case_tab1_m24});
    return v;
  }();
  return cases;
}

const VerifyCase* find_verify_case(const std::string& id) {
  for (const auto& c : verify_registry())
    if (c.id == id) return &c;
  return nullptr;
}

CaseResult run_verify_case(const VerifyCase& vc, const VerifyContext& ctx) {
  CaseResult r;
  r.id = vc.id;
  r.seed = ctx.seed;
  for (const std::string& f : vc.required_files) {
    if (!data_file_exists(ctx.data_dir, f)) {
      r.status = "skipped";
      r.note = "missing data file " + f;
      return r;
    }
  }
  auto start = std::chrono::steady_clock::now();
  try {
    CaseResult body = vc.run(ctx);
    body.id = vc.id;
    if (body.seed == 0) body.seed = ctx.seed;
    r = std::move(body);
  } catch (const Inconclusive& e) {
    r.status = "inconclusive";
    r.note = e.what();
  } catch (const std::exception& e) {
    r.status = "fail";
    r.note = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return r;
}

}  // namespace cgt
