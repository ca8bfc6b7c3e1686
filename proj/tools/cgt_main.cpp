#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>

#include "cgt/analysis.hpp"
#include "cgt/classical.hpp"
#include "cgt/constructions.hpp"
#include "cgt/formats.hpp"
#include "cgt/registry.hpp"
#include "cgt/sweeps.hpp"

using namespace cgt;

namespace {

std::string resolve_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CGT_DATA_DIR")) return env;
  return "data";
}

ParsedGroupFile load(const std::string& path) { return parse_group_file(path); }

int cmd_orbits(const std::string& file, u64 point1, bool tree) {
  ParsedGroupFile g = load(file);
  if (g.perm) {
    if (point1 < 1 || point1 > g.perm->degree()) {
      std::cerr << "point out of range\n";
      return 2;
    }
    auto rec = g.perm->orbit_of(static_cast<u32>(point1 - 1), default_limits().orbit_cap, tree);
    std::cout << "orbit representative=" << point1 << " length=" << rec.length << "\n";
    std::cout << "points";
    for (u32 p : rec.points) std::cout << ' ' << p + 1;
    std::cout << "\n";
    if (tree)
      for (size_t i = 1; i < rec.points.size(); ++i) {
        Perm w = Perm::identity(g.perm->degree());
        for (u32 gi : rec.word(i)) w = w * g.perm->generators()[gi];
        std::cout << "word point=" << rec.points[i] + 1 << " element=" << w.to_cycles()
                  << "\n";
      }
    return 0;
  }
  // matrix group: the point is a vector code
  auto rec = g.mat->vec_orbit(g.mat->perm_image().points.empty() && point1 == 0
                                  ? Vec(g.mat->dim(), 0)
                                  : [&] {
                                      Vec v(g.mat->dim());
                                      u64 code = point1;
                                      for (u32 i = 0; i < g.mat->dim(); ++i) {
                                        v[i] = code % g.mat->field()->q();
                                        code /= g.mat->field()->q();
                                      }
                                      return v;
                                    }());
  std::cout << "orbit vector-code=" << point1 << " length=" << rec.length << "\n";
  return 0;
}

int cmd_subdegrees(const std::string& file, u64 base1, bool show_coprime, bool show_faithful) {
  ParsedGroupFile g = load(file);
  if (!g.perm) {
    std::cerr << "subdegrees needs a permutation group file\n";
    return 2;
  }
  SubdegreeReport sd = subdegrees(*g.perm, static_cast<u32>(base1 - 1));
  std::cout << "degree " << sd.degree << "\norder " << sd.group_order << "\nbase " << base1
            << "\nsubdegrees";
  for (u64 d : sd.subdegrees) std::cout << ' ' << d;
  std::cout << "\n";
  if (show_coprime) {
    std::cout << "coprime-pairs";
    for (auto [i, j] : sd.coprime_pairs)
      std::cout << " (" << sd.subdegrees[i] << "," << sd.subdegrees[j] << ")";
    std::cout << "\nmax-coprime-set";
    for (u64 d : sd.max_coprime) std::cout << ' ' << d;
    std::cout << "\n";
  }
  if (show_faithful) {
    std::cout << "faithful";
    for (size_t i = 0; i < sd.subdegrees.size(); ++i)
      if (sd.faithful[i]) std::cout << ' ' << sd.subdegrees[i];
    std::cout << "\nmax-coprime-faithful";
    for (u64 d : sd.max_coprime_faithful) std::cout << ' ' << d;
    std::cout << "\n";
  }
  return 0;
}

int cmd_coprime(const std::string& file, u64 cap) {
  ParsedGroupFile g = load(file);
  if (!g.perm) {
    std::cerr << "coprime needs a permutation group file\n";
    return 2;
  }
  auto res = coprime_factorization_search(*g.perm, cap);
  std::cout << "order " << res.group_order << "\nsubgroups " << res.subgroup_count
            << "\nmaximal " << res.maximal_count << "\n";
  for (const auto& p : res.pairs)
    std::cout << "factorization |A|=" << p.a_order << " |B|=" << p.b_order
              << " indices=(" << p.index_a << "," << p.index_b << ") |AnB|=" << p.meet_order
              << "\n";
  if (res.pairs.empty()) std::cout << "no maximal coprime factorization\n";
  return 0;
}

int cmd_mu(const std::string& file, u64 cap) {
  ParsedGroupFile g = load(file);
  if (!g.perm) {
    std::cerr << "mu needs a permutation group file\n";
    return 2;
  }
  MuReport rep = mu(*g.perm, cap);
  std::cout << "order " << rep.group_order << "\nindices";
  for (u64 i : rep.realized_indices) std::cout << ' ' << i;
  std::cout << "\nmu " << rep.mu << "\nwitness";
  for (u64 i : rep.witness) std::cout << ' ' << i;
  std::cout << "\n";
  return 0;
}

int cmd_factor(const std::string& gfile, const std::string& afile, const std::string& bfile) {
  ParsedGroupFile g = load(gfile), a = load(afile), b = load(bfile);
  if (!g.perm || !a.perm || !b.perm) {
    std::cerr << "factor needs permutation group files\n";
    return 2;
  }
  FactorizationRecord rec =
      check_factorization(*g.perm, a.perm->generators(), b.perm->generators());
  std::cout << "|G|=" << rec.group_order << " |A|=" << rec.a_order << " |B|=" << rec.b_order
            << " |AnB|=" << rec.meet_order << "\nindices (" << rec.index_a << ","
            << rec.index_b << ")\nholds " << (rec.holds ? "yes" : "no") << "\ncoprime "
            << (rec.coprime ? "yes" : "no") << "\nexact " << (rec.exact ? "yes" : "no")
            << "\n";
  return rec.holds ? 0 : 1;
}

int cmd_real_classes(const std::string& family, u32 n, u64 q, const std::string& ext,
                     const std::string& sign_name) {
  ClassicalFamily fam;
  if (family == "GL") fam = ClassicalFamily::GL;
  else if (family == "SL") fam = ClassicalFamily::SL;
  else if (family == "SP") fam = ClassicalFamily::SP;
  else if (family == "GU") fam = ClassicalFamily::GU;
  else if (family == "GO") fam = ClassicalFamily::GO;
  else {
    std::cerr << "family must be GL|SL|SP|GU|GO\n";
    return 2;
  }
  ClassicalVariant var = ClassicalVariant::Plain;
  if (ext == "tau") var = ClassicalVariant::TauExtended;
  else if (ext == "conformal") var = ClassicalVariant::Conformal;
  else if (!ext.empty()) {
    std::cerr << "--ext must be tau or conformal\n";
    return 2;
  }
  FormSign sign = FormSign::Circle;
  if (sign_name == "plus") sign = FormSign::Plus;
  else if (sign_name == "minus") sign = FormSign::Minus;
  ClassicalGroup cg = classical(fam, n, q, var, sign);
  RealClassReport rep = real_classes_check(cg);
  std::cout << "group-order " << cg.elements.size() << "\nchecked " << rep.checked
            << "\nall-real " << (rep.all_real ? "yes" : "no") << "\n";
  if (rep.counterexample)
    std::cout << "counterexample " << rep.counterexample->to_string() << "\n";
  return rep.all_real ? 0 : 1;
}

int cmd_coset_action(const std::string& gfile, const std::string& sfile,
                     const std::string& out) {
  ParsedGroupFile g = load(gfile), s = load(sfile);
  if (!g.perm || !s.perm) {
    std::cerr << "coset-action needs permutation group files\n";
    return 2;
  }
  CosetAction act = coset_action(*g.perm, s.perm->generators());
  std::ofstream o(out);
  if (!o) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  write_perm_group(o, act.image, true);
  std::cerr << "wrote degree-" << act.index << " image to " << out << "\n";
  return 0;
}

int cmd_verify(std::vector<std::string> ids, bool all, bool extended,
               const std::string& data_flag, u64 seed, u32 jobs) {
  VerifyContext ctx;
  ctx.data_dir = resolve_data_dir(data_flag);
  ctx.seed = seed;
  std::vector<const VerifyCase*> cases;
  if (all) {
    for (const auto& c : verify_registry())
      if (extended || c.scale != "extended") cases.push_back(&c);
  } else {
    if (ids.empty()) {
      std::cerr << "verify needs case ids or --all\n";
      return 2;
    }
    for (const std::string& id : ids) {
      const VerifyCase* c = find_verify_case(id);
      if (!c) {
        std::cerr << "unknown case id '" << id << "'\n";
        return 2;
      }
      cases.push_back(c);
    }
  }
  std::vector<CaseResult> results(cases.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) {
      std::cerr << "running " << cases[i]->id << "...\n";
      results[i] = run_verify_case(*cases[i], ctx);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (u32 t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= cases.size()) break;
          results[i] = run_verify_case(*cases[i], ctx);
        }
      });
    for (auto& th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  emit_report_header(std::cout);
  for (const auto& r : results) emit_case(std::cout, r);
  return emit_summary(std::cout, results);
}

int cmd_list_cases() {
  emit_report_header(std::cout);
  for (const auto& c : verify_registry()) {
    std::cout << "case id=" << c.id << " scale=" << c.scale;
    if (!c.criteria.empty()) {
      std::cout << " criteria=";
      for (size_t i = 0; i < c.criteria.size(); ++i)
        std::cout << (i ? "," : "") << c.criteria[i];
    }
    if (!c.required_files.empty()) {
      std::cout << " requires=";
      for (size_t i = 0; i < c.required_files.size(); ++i)
        std::cout << (i ? "," : "") << c.required_files[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_make_data(const std::string& data_flag, const std::string& out) {
  std::string dir = resolve_data_dir(data_flag);
  PermGroup m24 = mathieu(24, dir);
  // pointwise stabilizer of the first five points: its unique length-3
  // orbit completes them to an octad
  StabChain with_base = StabChain::build(24, m24.generators(), {0, 1, 2, 3, 4});
  PermGroup fix5(24, with_base.stabilizer_gens(5));
  std::vector<u32> octad{0, 1, 2, 3, 4};
  {
    std::vector<bool> seen(24, false);
    for (u32 p : octad) seen[p] = true;
    bool found = false;
    for (u32 p = 5; p < 24 && !found; ++p) {
      if (seen[p]) continue;
      auto orb = fix5.orbit_of(p);
      if (orb.length == 3) {
        for (u32 q : orb.points) octad.push_back(q);
        found = true;
      }
      for (u32 q : orb.points) seen[q] = true;
    }
    if (!found) throw DomainError("no octad completion found");
    std::sort(octad.begin(), octad.end());
  }
  // orbit of the octad: 759 blocks; those through the first tetrad cut out
  // the sextet
  using PointSet = std::vector<u32>;
  struct SetHash {
    size_t operator()(const PointSet& v) const {
      size_t h = 14695981039346656037ull;
      for (u32 x : v) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  auto blocks = orbit_closure<PointSet, std::function<PointSet(const PointSet&, size_t)>,
                              SetHash>(
      octad, m24.generators().size(),
      [&](const PointSet& s, size_t gi) {
        PointSet out;
        for (u32 p : s) out.push_back(m24.generators()[gi][p]);
        std::sort(out.begin(), out.end());
        return out;
      },
      2000);
  if (blocks.length != 759) throw DomainError("octad orbit has wrong size");
  PointSet tetrad{octad[0], octad[1], octad[2], octad[3]};
  std::vector<PointSet> sextet{tetrad};
  for (const PointSet& b : blocks.points) {
    bool contains = std::includes(b.begin(), b.end(), tetrad.begin(), tetrad.end());
    if (!contains) continue;
    PointSet rest;
    std::set_difference(b.begin(), b.end(), tetrad.begin(), tetrad.end(),
                        std::back_inserter(rest));
    if (rest.size() == 4) sextet.push_back(rest);
  }
  std::sort(sextet.begin(), sextet.end());
  sextet.erase(std::unique(sextet.begin(), sextet.end()), sextet.end());
  if (sextet.size() != 6) throw DomainError("tetrad completion is not a sextet");
  // stabilizer of the partition via Schreier generators of its orbit
  using Partition = std::vector<PointSet>;
  struct PartHash {
    size_t operator()(const Partition& p) const {
      size_t h = 0;
      for (const auto& s : p) h = h * 1099511628211ull + SetHash{}(s);
      return h;
    }
  };
  auto act_part = [&](const Partition& p, size_t gi) {
    Partition out;
    for (const PointSet& s : p) {
      PointSet t;
      for (u32 x : s) t.push_back(m24.generators()[gi][x]);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto orbit = orbit_closure<Partition, decltype(act_part)&, PartHash>(
      sextet, m24.generators().size(), act_part, 5000, true);
  if (orbit.length != 1771) throw DomainError("sextet orbit has wrong size");
  std::unordered_map<Partition, u32, PartHash> where;
  for (u32 i = 0; i < orbit.points.size(); ++i) where.emplace(orbit.points[i], i);
  auto word_rep = [&](size_t i) {
    Perm w = Perm::identity(24);
    for (u32 gi : orbit.word(i)) w = w * m24.generators()[gi];
    return w;
  };
  std::vector<Perm> sgens;
  PermGroup stab(24, sgens);
  for (size_t i = 0; i < orbit.points.size() && stab.order() != 138240; ++i) {
    Perm ui = word_rep(i);
    for (size_t gi = 0; gi < m24.generators().size(); ++gi) {
      Partition image = act_part(orbit.points[i], gi);
      Perm schreier = ui * m24.generators()[gi] * word_rep(where.at(image)).inverse();
      if (!schreier.is_identity() && !stab.contains(schreier)) {
        sgens.push_back(schreier);
        stab = PermGroup(24, sgens);
        if (stab.order() == 138240) break;
      }
    }
  }
  if (stab.order() != 138240) throw DomainError("sextet stabilizer has wrong order");
  std::string path = out.empty() ? dir + "/m24-sextet.grp" : out;
  std::ofstream o(path);
  if (!o) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  o << "# sextet stabilizer 2^6:3.Sym(6) inside the degree-24 Mathieu group,\n";
  o << "# derived by `cgt make-data` from mathieu24.grp\n";
  write_perm_group(o, stab, true);
  std::cerr << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational group theory toolkit: orbits, subdegrees, coprime "
               "factorizations, module orbit structure"};
  app.require_subcommand(1);

  std::string file, afile, bfile, out, data_dir, ext, sign_name = "circle";
  std::vector<std::string> ids;
  u64 point1 = 1, base1 = 1, cap = default_limits().subgroup_enum_cap;
  u64 seed = 20260801;
  u32 n = 0, jobs = 1;
  u64 q = 0;
  bool tree = false, show_coprime = false, show_faithful = false, all = false,
       extended = false;
  std::string family;

  auto* orbits = app.add_subcommand("orbits", "orbit of a point under a group file");
  orbits->add_option("file", file)->required();
  orbits->add_option("--point", point1)->required();
  orbits->add_flag("--words", tree, "print transversal words");

  auto* subdeg = app.add_subcommand("subdegrees", "stabilizer orbit lengths");
  subdeg->add_option("file", file)->required();
  subdeg->add_option("--base", base1);
  subdeg->add_flag("--coprime", show_coprime);
  subdeg->add_flag("--faithful", show_faithful);

  auto* copr = app.add_subcommand("coprime", "exhaustive maximal coprime factorizations");
  copr->add_option("file", file)->required();
  copr->add_option("--cap", cap);

  auto* mu_cmd = app.add_subcommand("mu", "maximal pairwise-coprime proper-subgroup indices");
  mu_cmd->add_option("file", file)->required();
  mu_cmd->add_option("--cap", cap);

  auto* factor = app.add_subcommand("factor", "check G = AB");
  factor->add_option("gfile", file)->required();
  factor->add_option("--a", afile)->required();
  factor->add_option("--b", bfile)->required();

  auto* rc = app.add_subcommand("real-classes", "conjugacy of elements to their inverses");
  rc->add_option("family", family)->required();
  rc->add_option("n", n)->required();
  rc->add_option("q", q)->required();
  rc->add_option("--ext", ext, "tau or conformal");
  rc->add_option("--sign", sign_name, "plus, minus or circle (orthogonal)");

  auto* ca = app.add_subcommand("coset-action", "action on right cosets of a subgroup");
  ca->add_option("gfile", file)->required();
  ca->add_option("--sub", afile)->required();
  ca->add_option("-o,--out", out)->required();

  auto* verify = app.add_subcommand("verify", "run registered verification cases");
  verify->add_option("ids", ids);
  verify->add_flag("--all", all, "all fast and standard cases");
  verify->add_flag("--extended", extended, "include extended data-gated cases");
  verify->add_option("--data", data_dir, "data directory");
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);

  app.add_subcommand("list-cases", "list registered verification cases");

  auto* mk = app.add_subcommand("make-data", "derive bundled-optional data files");
  mk->add_option("--data", data_dir);
  mk->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (orbits->parsed()) return cmd_orbits(file, point1, tree);
    if (subdeg->parsed()) return cmd_subdegrees(file, base1, show_coprime, show_faithful);
    if (copr->parsed()) return cmd_coprime(file, cap);
    if (mu_cmd->parsed()) return cmd_mu(file, cap);
    if (factor->parsed()) return cmd_factor(file, afile, bfile);
    if (rc->parsed()) return cmd_real_classes(family, n, q, ext, sign_name);
    if (ca->parsed()) return cmd_coset_action(file, afile, out);
    if (verify->parsed()) return cmd_verify(ids, all, extended, data_dir, seed, jobs);
    if (app.get_subcommand("list-cases")->parsed()) return cmd_list_cases();
    if (mk->parsed()) return cmd_make_data(data_dir, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
