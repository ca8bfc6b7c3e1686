#include "cgt/permgroup.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cgt {

PermGroup::PermGroup(u32 degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw DomainError("generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(*chain_mutex_);
  if (!chain_)
    chain_ = std::make_shared<StabChain>(StabChain::build(degree_, gens_, {}, known_order_));
  return *chain_;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch");
  return chain().contains(g);
}

OrbitRecord<u32> PermGroup::orbit_of(u32 point, u64 cap, bool with_tree) const {
  if (point >= degree_) throw DomainError("point out of range");
  return orbit_closure<u32>(
      point, gens_.size(), [&](u32 p, size_t gi) { return gens_[gi][p]; }, cap, with_tree);
}

std::vector<std::vector<u32>> PermGroup::point_orbits() const {
  std::vector<std::vector<u32>> orbits;
  std::vector<bool> seen(degree_, false);
  for (u32 p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto rec = orbit_of(p);
    for (u32 q : rec.points) seen[q] = true;
    orbits.push_back(std::move(rec.points));
  }
  return orbits;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return orbit_of(0).length == degree_;
}

bool PermGroup::is_faithful_on(const std::vector<u32>& points) const {
  // Pointwise stabilizer of `points` = levels past the base prefix.
  StabChain fixers = StabChain::build(degree_, gens_, points);
  u64 pointwise = 1;
  size_t prefix = std::min(points.size(), fixers.levels().size());
  for (size_t li = prefix; li < fixers.levels().size(); ++li)
    pointwise *= fixers.levels()[li].orbit.size();
  return pointwise == 1;
}

PermGroup PermGroup::point_stabilizer(u32 point) const {
  if (point >= degree_) throw DomainError("point out of range");
  StabChain with_point = StabChain::build(degree_, gens_, {point});
  PermGroup stab(degree_, with_point.stabilizer_gens(1));
  u64 orbit_len = with_point.levels().empty() ? 1 : with_point.levels()[0].orbit.size();
  stab.set_known_order(with_point.order() / orbit_len);
  return stab;
}

std::vector<Perm> PermGroup::elements(u64 cap) const {
  std::vector<Perm> elems;
  std::unordered_set<Perm, PermHash> seen;
  elems.push_back(Perm::identity(degree_));
  seen.insert(elems.front());
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens_) {
      Perm q = elems[head] * g;
      if (seen.insert(q).second) {
        if (elems.size() >= cap)
          throw CapExceeded("element enumeration cap " + std::to_string(cap) + " exceeded");
        elems.push_back(std::move(q));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

namespace {

// Canonical representative of the right coset (subgroup)*g: minimize the
// image of each chain base point in turn over the subgroup's transversals.
Perm canonical_coset_rep(const StabChain& sub, const Perm& g) {
  Perm w = g;
  for (size_t li = 0; li < sub.levels().size(); ++li) {
    const ChainLevel& lv = sub.levels()[li];
    u32 best_point = lv.orbit[0];
    u32 best_image = w[best_point];
    for (u32 o : lv.orbit) {
      if (w[o] < best_image) {
        best_image = w[o];
        best_point = o;
      }
    }
    if (best_point != lv.base_point) w = sub.transversal_rep(li, best_point) * w;
  }
  return w;
}

}  // namespace

Perm CosetAction::act(const Perm& g) const {
  if (position.empty())
    for (u32 i = 0; i < coset_reps.size(); ++i) position.emplace(coset_reps[i], i);
  std::vector<u32> img(coset_reps.size());
  for (u32 i = 0; i < coset_reps.size(); ++i) {
    Perm target = canonical_coset_rep(*sub_chain, coset_reps[i] * g);
    auto it = position.find(target);
    if (it == position.end()) throw DomainError("element does not permute the cosets");
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

CosetAction coset_action(const PermGroup& group, const std::vector<Perm>& sub_gens,
                         u64 index_cap) {
  for (const Perm& s : sub_gens)
    if (!group.contains(s)) throw DomainError("subgroup generator not in group");
  auto sub_chain =
      std::make_shared<StabChain>(StabChain::build(group.degree(), sub_gens));

  auto rec = orbit_closure<Perm, std::function<Perm(const Perm&, size_t)>, PermHash>(
      canonical_coset_rep(*sub_chain, Perm::identity(group.degree())),
      group.generators().size(),
      [&](const Perm& rep, size_t gi) {
        return canonical_coset_rep(*sub_chain, rep * group.generators()[gi]);
      },
      index_cap);

  CosetAction act;
  act.index = rec.length;
  act.coset_reps = std::move(rec.points);
  act.sub_chain_holder = sub_chain;
  act.sub_chain = sub_chain.get();

  std::unordered_map<Perm, u32, PermHash> where;
  where.reserve(act.coset_reps.size());
  for (u32 i = 0; i < act.coset_reps.size(); ++i) where.emplace(act.coset_reps[i], i);
  std::vector<Perm> image_gens;
  for (const Perm& g : group.generators()) {
    std::vector<u32> img(act.index);
    for (u32 i = 0; i < act.index; ++i) {
      Perm target = canonical_coset_rep(*sub_chain, act.coset_reps[i] * g);
      img[i] = where.at(target);
    }
    image_gens.emplace_back(std::move(img));
  }
  act.image = PermGroup(static_cast<u32>(act.index), std::move(image_gens));
  return act;
}

}  // namespace cgt
