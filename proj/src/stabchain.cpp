#include "cgt/stabchain.hpp"

#include <algorithm>

namespace cgt {

namespace {

u32 smallest_moved(const Perm& p) {
  for (u32 i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  throw DomainError("identity has no moved point");
}

}  // namespace

void StabChain::extend_base(u32 point) {
  ChainLevel level;
  level.base_point = point;
  level.pos.assign(degree_, -1);
  level.prev.assign(degree_, 0);
  level.via.assign(degree_, 0);
  levels_.push_back(std::move(level));
  recompute_orbit(levels_.size() - 1);
}

void StabChain::recompute_orbit(size_t li) {
  ChainLevel& lv = levels_[li];
  lv.orbit.clear();
  std::fill(lv.pos.begin(), lv.pos.end(), -1);
  lv.orbit.push_back(lv.base_point);
  lv.pos[lv.base_point] = 0;
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    u32 p = lv.orbit[head];
    for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
      u32 q = lv.gens[gi][p];
      if (lv.pos[q] < 0) {
        lv.pos[q] = static_cast<i64>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.prev[q] = p;
        lv.via[q] = static_cast<u32>(gi);
      }
    }
  }
}

Perm StabChain::transversal_rep(size_t li, u32 point) const {
  const ChainLevel& lv = levels_[li];
  if (lv.pos[point] < 0) throw DomainError("point outside level orbit");
  // Collect tree edges from point back to the base, then compose forward.
  std::vector<u32> edges;
  for (u32 p = point; p != lv.base_point; p = lv.prev[p]) edges.push_back(lv.via[p]);
  Perm rep = Perm::identity(degree_);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) rep = rep * lv.gens[*it];
  return rep;
}

std::pair<size_t, Perm> StabChain::strip(const Perm& g, size_t from) const {
  Perm h = g;
  for (size_t li = from; li < levels_.size(); ++li) {
    u32 x = h[levels_[li].base_point];
    if (levels_[li].pos[x] < 0) return {li, h};
    if (x != levels_[li].base_point) h = h * transversal_rep(li, x).inverse();
  }
  return {levels_.size(), h};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch");
  auto [lvl, residue] = strip(g);
  return lvl == levels_.size() && residue.is_identity();
}

u64 StabChain::transversal_product() const {
  u64 prod = 1;
  for (const auto& lv : levels_) prod *= lv.orbit.size();
  return prod;
}

u64 StabChain::order() const { return transversal_product(); }

std::vector<Perm> StabChain::stabilizer_gens(size_t fixed) const {
  if (fixed >= levels_.size()) return {};
  return levels_[fixed].gens;
}

StabChain StabChain::build(u32 degree, const std::vector<Perm>& generators,
                           const std::vector<u32>& base_hint, u64 known_order) {
  StabChain chain;
  chain.degree_ = degree;

  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  for (u32 b : base_hint) chain.extend_base(b);
  // Every generator must move some base point.
  for (const Perm& g : gens) {
    bool fixes_all = true;
    for (const auto& lv : chain.levels_)
      if (g[lv.base_point] != lv.base_point) {
        fixes_all = false;
        break;
      }
    if (fixes_all && !g.is_identity()) chain.extend_base(smallest_moved(g));
  }
  if (chain.levels_.empty()) {
    if (!gens.empty()) chain.extend_base(smallest_moved(gens.front()));
    else return chain;  // trivial group
  }

  // Distribute generators to every level whose base prefix they fix.
  for (const Perm& g : gens) {
    for (auto& lv : chain.levels_) {
      lv.gens.push_back(g);
      if (g[lv.base_point] != lv.base_point) break;
    }
  }
  for (size_t li = 0; li < chain.levels_.size(); ++li) chain.recompute_orbit(li);

  size_t li = chain.levels_.size();
  while (li-- > 0) {
    if (known_order && chain.transversal_product() == known_order) return chain;
    bool complete = true;
    ChainLevel& lv = chain.levels_[li];
    for (size_t oi = 0; oi < lv.orbit.size() && complete; ++oi) {
      u32 o = lv.orbit[oi];
      Perm u_o = chain.transversal_rep(li, o);
      for (size_t gi = 0; gi < lv.gens.size() && complete; ++gi) {
        u32 o2 = lv.gens[gi][o];
        Perm w = u_o * lv.gens[gi] * chain.transversal_rep(li, o2).inverse();
        if (w.is_identity()) continue;
        auto [j, y] = chain.strip(w, li + 1);
        if (j == chain.levels_.size() && y.is_identity()) continue;
        if (j == chain.levels_.size()) chain.extend_base(smallest_moved(y));
        for (size_t l = li + 1; l <= j && l < chain.levels_.size(); ++l) {
          chain.levels_[l].gens.push_back(y);
          chain.recompute_orbit(l);
        }
        li = std::min(j, chain.levels_.size() - 1) + 1;  // re-enter at level j
        complete = false;
      }
    }
    if (complete) continue;  // li already repositioned
  }
  return chain;
}

}  // namespace cgt
