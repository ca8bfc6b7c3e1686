#include "cgt/analysis.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace cgt {

std::vector<u64> max_coprime_set(const std::vector<u64>& values) {
  std::vector<u64> cand;
  for (u64 v : values)
    if (v > 1) cand.push_back(v);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  size_t n = cand.size();
  // exhaustive search, small candidate sets only
  std::vector<u64> best;
  std::vector<u64> current;
  auto dfs = [&](auto&& self, size_t from) -> void {
    if (current.size() > best.size()) best = current;
    else if (current.size() == best.size() && !current.empty() && current < best)
      best = current;
    for (size_t i = from; i < n; ++i) {
      bool ok = true;
      for (u64 c : current)
        if (gcd_u64(c, cand[i]) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(cand[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

SubdegreeReport subdegrees(const PermGroup& g, u32 base) {
  if (!g.is_transitive()) throw DomainError("subdegrees need a transitive group");
  SubdegreeReport rep;
  rep.degree = g.degree();
  rep.base = base;
  rep.group_order = g.order();
  PermGroup stab = g.point_stabilizer(base);
  rep.stabilizer_order = stab.order();
  rep.regular = rep.stabilizer_order == 1;

  struct OrbitRec {
    u64 len;
    u32 min_point;
    std::vector<u32> points;
  };
  std::vector<OrbitRec> recs;
  std::vector<bool> seen(g.degree(), false);
  for (u32 p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    auto orb = stab.orbit_of(p);
    for (u32 q : orb.points) seen[q] = true;
    std::vector<u32> pts = orb.points;
    std::sort(pts.begin(), pts.end());
    recs.push_back({orb.length, pts.front(), std::move(pts)});
  }
  std::sort(recs.begin(), recs.end(), [](const OrbitRec& x, const OrbitRec& y) {
    if (x.len != y.len) return x.len < y.len;
    return x.min_point < y.min_point;
  });
  for (auto& r : recs) {
    rep.subdegrees.push_back(r.len);
    rep.faithful.push_back(stab.is_faithful_on(r.points));
    rep.orbits.push_back(std::move(r.points));
  }
  for (u32 i = 0; i < rep.subdegrees.size(); ++i)
    for (u32 j = i + 1; j < rep.subdegrees.size(); ++j)
      if (rep.subdegrees[i] > 1 && rep.subdegrees[j] > 1 &&
          gcd_u64(rep.subdegrees[i], rep.subdegrees[j]) == 1)
        rep.coprime_pairs.emplace_back(i, j);
  rep.max_coprime = max_coprime_set(rep.subdegrees);
  std::vector<u64> faithful_values;
  for (u32 i = 0; i < rep.subdegrees.size(); ++i)
    if (rep.faithful[i]) faithful_values.push_back(rep.subdegrees[i]);
  rep.max_coprime_faithful = max_coprime_set(faithful_values);
  return rep;
}

FactorizationRecord check_factorization(const PermGroup& g, const std::vector<Perm>& a_gens,
                                        const std::vector<Perm>& b_gens, u64 enum_cap) {
  for (const Perm& p : a_gens)
    if (!g.contains(p)) throw DomainError("A generator not in G");
  for (const Perm& p : b_gens)
    if (!g.contains(p)) throw DomainError("B generator not in G");
  PermGroup A(g.degree(), a_gens), B(g.degree(), b_gens);
  FactorizationRecord rec;
  rec.group_order = g.order();
  rec.a_order = A.order();
  rec.b_order = B.order();
  rec.index_a = rec.group_order / rec.a_order;
  rec.index_b = rec.group_order / rec.b_order;

  const PermGroup* small = rec.a_order <= rec.b_order ? &A : &B;
  const PermGroup* large = rec.a_order <= rec.b_order ? &B : &A;
  if (small->order() <= enum_cap) {
    u64 meet = 0;
    for (const Perm& x : small->elements(enum_cap + 1))
      if (large->contains(x)) ++meet;
    rec.meet_order = meet;
  } else {
    // orbit of the trivial coset of the smaller-index factor under the other
    const PermGroup* host = rec.index_a <= rec.index_b ? &A : &B;
    const PermGroup* other = rec.index_a <= rec.index_b ? &B : &A;
    CosetAction act = coset_action(g, host->generators());
    std::vector<Perm> images;
    for (const Perm& p : other->generators()) images.push_back(act.act(p));
    PermGroup image(static_cast<u32>(act.index), images);
    u64 orbit = image.orbit_of(0).length;
    rec.meet_order = other->order() / orbit;
  }
  rec.holds = rec.a_order * rec.b_order == rec.group_order * rec.meet_order;
  rec.exact = rec.meet_order == 1;
  rec.coprime = rec.a_order < rec.group_order && rec.b_order < rec.group_order &&
                gcd_u64(rec.index_a, rec.index_b) == 1;
  return rec;
}

CoprimeSearchResult coprime_factorization_search(const PermGroup& g, u64 cap) {
  SmallGroup sg(g, cap);
  auto subs = sg.all_subgroups();
  CoprimeSearchResult res;
  res.group_order = sg.size();
  res.subgroup_count = subs.size();
  // maximal = proper and contained in no other proper subgroup
  auto contained = [&](const SmallGroup::Sub& a, const SmallGroup::Sub& b) {
    for (size_t w = 0; w < a.bits.size(); ++w)
      if (a.bits[w] & ~b.bits[w]) return false;
    return true;
  };
  std::vector<size_t> maximal;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == sg.size()) continue;
    bool is_max = true;
    for (size_t j = 0; j < subs.size() && is_max; ++j) {
      if (j == i || subs[j].order() == sg.size() || subs[j].order() <= subs[i].order())
        continue;
      if (contained(subs[i], subs[j])) is_max = false;
    }
    if (is_max) maximal.push_back(i);
  }
  res.maximal_count = maximal.size();
  for (size_t ii = 0; ii < maximal.size(); ++ii) {
    for (size_t jj = ii + 1; jj < maximal.size(); ++jj) {
      const auto& A = subs[maximal[ii]];
      const auto& B = subs[maximal[jj]];
      u64 ia = sg.size() / A.order(), ib = sg.size() / B.order();
      if (gcd_u64(ia, ib) != 1) continue;
      u64 meet = 0;
      for (size_t w = 0; w < A.bits.size(); ++w) meet += __builtin_popcountll(A.bits[w] & B.bits[w]);
      // coprime indices force G = AB; checked, not assumed
      if (A.order() * B.order() != sg.size() * meet)
        throw DomainError("coprime indices without factorization (impossible)");
      CoprimePair pair;
      pair.a_order = std::max(A.order(), B.order());
      pair.b_order = std::min(A.order(), B.order());
      pair.index_a = sg.size() / pair.a_order;
      pair.index_b = sg.size() / pair.b_order;
      pair.meet_order = meet;
      res.pairs.push_back(pair);
    }
  }
  res.signatures = res.pairs;
  std::sort(res.signatures.begin(), res.signatures.end());
  res.signatures.erase(std::unique(res.signatures.begin(), res.signatures.end()),
                       res.signatures.end());
  return res;
}

MuReport mu(const PermGroup& g, u64 cap) {
  SmallGroup sg(g, cap);
  auto subs = sg.all_subgroups();
  MuReport rep;
  rep.group_order = sg.size();
  std::set<u64> idx;
  for (const auto& s : subs)
    if (s.order() < sg.size()) idx.insert(sg.size() / s.order());
  rep.realized_indices.assign(idx.begin(), idx.end());
  rep.witness = max_coprime_set(rep.realized_indices);
  rep.mu = static_cast<u32>(rep.witness.size());
  return rep;
}

namespace {

// seeded search path for groups beyond the enumeration cap
bool fitting_trivial_sampled(const PermGroup& g, u64 seed) {
  u64 order = g.order();
  std::vector<u64> primes;
  {
    u64 n = order;
    for (u64 p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        primes.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1) primes.push_back(n);
  }
  std::mt19937_64 rng(seed);
  auto random_word = [&](const std::vector<Perm>& gens) {
    Perm x = Perm::identity(g.degree());
    u32 len = 16 + rng() % 32;
    for (u32 i = 0; i < len; ++i) x = x * gens[rng() % gens.size()];
    return x;
  };
  struct SetHash {
    size_t operator()(const std::vector<Perm>& v) const {
      size_t h = 0;
      for (const Perm& p : v) h = h * 1099511628211ull + PermHash{}(p);
      return h;
    }
  };
  for (u64 p : primes) {
    u64 p_part = 1;
    for (u64 n = order; n % p == 0; n /= p) p_part *= p;
    u64 samples = 10 * static_cast<u64>(std::sqrt(static_cast<double>(order))) + 32;
    // seed subgroup: the p-part of a sampled element of maximal p-order
    Perm best = Perm::identity(g.degree());
    u64 best_ord = 1;
    for (u64 s = 0; s < samples; ++s) {
      Perm x = random_word(g.generators());
      u64 o = x.order();
      u64 q = o;
      while (q % p == 0) q /= p;
      if (o / q > best_ord) {
        best_ord = o / q;
        best = x.power(q);
      }
    }
    if (best.is_identity()) throw Inconclusive("no p-element found by sampling");
    std::vector<Perm> pgens{best};
    PermGroup P(g.degree(), pgens);
    // grow through normalizers: Schreier generators of the conjugation
    // orbit of P generate N_G(P), and N_G(P)/P has order divisible by p
    // while P is not yet Sylow
    while (P.order() < p_part) {
      std::vector<Perm> pelems = P.elements(1u << 20);
      std::sort(pelems.begin(), pelems.end());
      auto rec = orbit_closure<std::vector<Perm>,
                               std::function<std::vector<Perm>(const std::vector<Perm>&, size_t)>,
                               SetHash>(
          pelems, g.generators().size(),
          [&](const std::vector<Perm>& set, size_t gi) {
            std::vector<Perm> out;
            out.reserve(set.size());
            Perm inv = g.generators()[gi].inverse();
            for (const Perm& e : set) out.push_back(inv * e * g.generators()[gi]);
            std::sort(out.begin(), out.end());
            return out;
          },
          200000, true);
      std::unordered_map<std::vector<Perm>, u32, SetHash> where;
      for (u32 i = 0; i < rec.points.size(); ++i) where.emplace(rec.points[i], i);
      auto word_rep = [&](size_t i) {
        Perm w = Perm::identity(g.degree());
        for (u32 gi : rec.word(i)) w = w * g.generators()[gi];
        return w;
      };
      std::vector<Perm> ngens = pgens;
      for (size_t i = 0; i < rec.points.size() && ngens.size() < pgens.size() + 24; ++i) {
        Perm ui = word_rep(i);
        for (size_t gi = 0; gi < g.generators().size(); ++gi) {
          std::vector<Perm> image;
          Perm inv = g.generators()[gi].inverse();
          for (const Perm& e : rec.points[i]) image.push_back(inv * e * g.generators()[gi]);
          std::sort(image.begin(), image.end());
          Perm schreier = ui * g.generators()[gi] * word_rep(where.at(image)).inverse();
          if (!schreier.is_identity()) ngens.push_back(schreier);
        }
      }
      bool extended = false;
      for (u64 s = 0; s < samples && !extended; ++s) {
        Perm n = random_word(ngens);
        u64 o = n.order();
        u64 q = o;
        while (q % p == 0) q /= p;
        if (o / q == 1) continue;
        Perm y = n.power(q);
        if (P.contains(y)) continue;
        std::vector<Perm> next = pgens;
        next.push_back(y);
        PermGroup bigger(g.degree(), next);
        u64 bo = bigger.order();
        u64 bq = bo;
        while (bq % p == 0) bq /= p;
        if (bq != 1) continue;
        pgens = std::move(next);
        P = std::move(bigger);
        extended = true;
      }
      if (!extended) throw Inconclusive("Sylow sampling failed to reach the full p-part");
    }
    std::vector<Perm> pelems = P.elements(1u << 20);
    // O_p = intersection of the conjugates of the found Sylow subgroup
    std::sort(pelems.begin(), pelems.end());
    std::vector<std::vector<Perm>> orbit{pelems};
    std::vector<Perm> core = pelems;
    for (size_t head = 0; head < orbit.size() && core.size() > 1; ++head) {
      for (const Perm& gen : g.generators()) {
        std::vector<Perm> conj;
        conj.reserve(orbit[head].size());
        Perm gi = gen.inverse();
        for (const Perm& e : orbit[head]) conj.push_back(gi * e * gen);
        std::sort(conj.begin(), conj.end());
        if (std::find(orbit.begin(), orbit.end(), conj) == orbit.end()) {
          std::vector<Perm> meet;
          std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                                std::back_inserter(meet));
          core = std::move(meet);
          orbit.push_back(std::move(conj));
          if (core.size() <= 1) break;
        }
      }
    }
    if (core.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool fitting_is_trivial(const PermGroup& g, u64 cap, u64 seed) {
  u64 order = g.order();
  if (order > cap) throw CapExceeded("group order beyond the Fitting cap");
  if (order <= default_limits().subgroup_enum_cap) return SmallGroup(g).fitting_trivial();
  return fitting_trivial_sampled(g, seed);
}

bool is_p_soluble(const PermGroup& g, u64 p) { return SmallGroup(g).p_soluble(p); }

}  // namespace cgt
