#include "cgt/smallgroup.hpp"

#include <algorithm>
#include <queue>

namespace cgt {

namespace {
constexpr u64 kTableCap = 4096;

bool is_prime_power(u64 n, u64* base = nullptr) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      if (base) *base = p;
      return n == 1;
    }
  }
  if (base) *base = n;
  return true;
}

std::vector<u64> factor_primes(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}
}  // namespace

SmallGroup::SmallGroup(const PermGroup& g, u64 cap) : group_(g) {
  elems_ = g.elements(cap);  // sorted
  index_.reserve(elems_.size());
  for (u32 i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  inv_.resize(elems_.size());
  for (u32 i = 0; i < elems_.size(); ++i) inv_[i] = index_.at(elems_[i].inverse());
  if (elems_.size() <= kTableCap) {
    has_table_ = true;
    table_.resize(elems_.size() * elems_.size());
    for (u32 a = 0; a < elems_.size(); ++a)
      for (u32 b = 0; b < elems_.size(); ++b)
        table_[a * elems_.size() + b] = static_cast<u16>(index_.at(elems_[a] * elems_[b]));
  }
  if (!elems_.empty() && !elems_.front().is_identity())
    throw DomainError("identity is not the first sorted element");
}

u32 SmallGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("element not in group");
  return it->second;
}

u32 SmallGroup::mult(u32 a, u32 b) const {
  if (has_table_) return table_[a * elems_.size() + b];
  return index_.at(elems_[a] * elems_[b]);
}

u32 SmallGroup::inv(u32 a) const { return inv_[a]; }

u64 SmallGroup::element_order(u32 a) const {
  u64 n = 1;
  u32 x = a;
  while (x != 0) {
    x = mult(x, a);
    ++n;
  }
  return n;
}

SmallGroup::Sub SmallGroup::from_indices(std::vector<u32> idx) const {
  Sub s;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  s.elems = std::move(idx);
  s.bits.assign((elems_.size() + 63) / 64, 0);
  for (u32 i : s.elems) s.bits[i >> 6] |= 1ull << (i & 63);
  return s;
}

SmallGroup::Sub SmallGroup::closure(std::vector<u32> gens) const {
  std::vector<u32> elems{0};
  std::vector<u64> bits((elems_.size() + 63) / 64, 0);
  bits[0] |= 1;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (u32 g : gens) {
      u32 q = mult(elems[head], g);
      if (!(bits[q >> 6] >> (q & 63) & 1)) {
        bits[q >> 6] |= 1ull << (q & 63);
        elems.push_back(q);
      }
    }
  }
  Sub s = from_indices(std::move(elems));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  s.gens = std::move(gens);
  return s;
}

SmallGroup::Sub SmallGroup::whole() const {
  std::vector<u32> all(elems_.size());
  for (u32 i = 0; i < elems_.size(); ++i) all[i] = i;
  Sub s = from_indices(std::move(all));
  for (const Perm& g : group_.generators()) s.gens.push_back(index_.at(g));
  return s;
}

SmallGroup::Sub SmallGroup::trivial() const { return closure({}); }

SmallGroup::Sub SmallGroup::intersect(const Sub& a, const Sub& b) const {
  std::vector<u32> idx;
  for (u32 i : a.elems)
    if (b.contains(i)) idx.push_back(i);
  Sub s = from_indices(std::move(idx));
  s.gens = s.elems;  // safe generating set
  return s;
}

SmallGroup::Sub SmallGroup::conjugate(const Sub& s, u32 g) const {
  std::vector<u32> idx;
  idx.reserve(s.elems.size());
  for (u32 i : s.elems) idx.push_back(conj(i, g));
  Sub r = from_indices(std::move(idx));
  for (u32 i : s.gens) r.gens.push_back(conj(i, g));
  return r;
}

SmallGroup::Sub SmallGroup::normal_closure(const std::vector<u32>& gens) const {
  std::vector<u32> work = gens;
  Sub current = closure(work);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm& g : group_.generators()) {
      u32 gi = index_.at(g);
      std::vector<u32> snapshot = current.gens;
      for (u32 s : snapshot) {
        u32 c = conj(s, gi);
        if (!current.contains(c)) {
          work.push_back(c);
          current = closure(work);
          grew = true;
        }
      }
    }
  }
  return current;
}

bool SmallGroup::is_normal(const Sub& s) const {
  for (const Perm& g : group_.generators()) {
    u32 gi = index_.at(g);
    for (u32 x : s.gens)
      if (!s.contains(conj(x, gi))) return false;
  }
  return true;
}

bool SmallGroup::is_nilpotent(const Sub& s) const {
  // Nilpotent iff for every prime p the p-elements of s are closed under
  // multiplication (they then form the unique normal Sylow p-subgroup).
  for (u64 p : factor_primes(s.order())) {
    std::vector<u32> pelems;
    for (u32 i : s.elems) {
      u64 o = element_order(i);
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(i);
    }
    Sub gen = closure(pelems);
    if (gen.order() != pelems.size()) return false;
  }
  return true;
}

std::vector<SmallGroup::Sub> SmallGroup::all_subgroups() const {
  std::vector<Sub> subs;
  auto bits_hash = [](const std::vector<u64>& b) {
    size_t h = 14695981039346656037ull;
    for (u64 w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  };
  std::unordered_map<size_t, std::vector<size_t>> by_hash;
  auto known = [&](const Sub& s) {
    auto it = by_hash.find(bits_hash(s.bits));
    if (it == by_hash.end()) return false;
    for (size_t i : it->second)
      if (subs[i] == s) return true;
    return false;
  };
  auto remember = [&](Sub s) {
    by_hash[bits_hash(s.bits)].push_back(subs.size());
    subs.push_back(std::move(s));
  };
  subs.push_back(trivial());
  by_hash[bits_hash(subs[0].bits)].push_back(0);
  // cyclic seeds
  for (u32 i = 1; i < elems_.size(); ++i) {
    Sub c = closure({i});
    if (!known(c)) remember(std::move(c));
  }
  // one-generator extensions until fixpoint; extending by elements of
  // prime-power order reaches every subgroup
  std::vector<u32> ppow;
  for (u32 i = 1; i < elems_.size(); ++i)
    if (is_prime_power(element_order(i))) ppow.push_back(i);
  for (size_t head = 0; head < subs.size(); ++head) {
    Sub a = subs[head];  // copy: subs may reallocate
    if (a.order() == elems_.size()) continue;
    for (u32 g : ppow) {
      if (a.contains(g)) continue;
      // only the minimal element of each right coset a*g
      bool minimal = true;
      for (u32 x : a.elems)
        if (mult(x, g) < g) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      std::vector<u32> gens = a.gens;
      gens.push_back(g);
      Sub b = closure(std::move(gens));
      if (!known(b)) remember(std::move(b));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const Sub& x, const Sub& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elems < y.elems;
  });
  return subs;
}

std::vector<u32> SmallGroup::class_representatives() const {
  std::vector<bool> seen(elems_.size(), false);
  std::vector<u32> reps;
  for (u32 i = 0; i < elems_.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    std::vector<u32> orb{i};
    seen[i] = true;
    for (size_t head = 0; head < orb.size(); ++head) {
      for (const Perm& g : group_.generators()) {
        u32 c = conj(orb[head], index_.at(g));
        if (!seen[c]) {
          seen[c] = true;
          orb.push_back(c);
        }
      }
    }
  }
  return reps;
}

SmallGroup::Sub SmallGroup::sylow(u64 p) const {
  u64 p_part = 1;
  u64 n = elems_.size();
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  if (p_part == 1) return trivial();
  // start from an element of maximal p-power order
  u32 best = 0;
  u64 best_order = 1;
  std::vector<u32> pelems;
  for (u32 i = 1; i < elems_.size(); ++i) {
    u64 o = element_order(i);
    u64 q = o;
    while (q % p == 0) q /= p;
    if (q != 1) continue;
    pelems.push_back(i);
    if (o > best_order) {
      best_order = o;
      best = i;
    }
  }
  Sub P = closure({best});
  while (P.order() < p_part) {
    bool extended = false;
    for (u32 g : pelems) {
      if (P.contains(g)) continue;
      bool normalizes = true;
      for (u32 x : P.gens)
        if (!P.contains(conj(x, g))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<u32> gens = P.gens;
      gens.push_back(g);
      P = closure(std::move(gens));
      extended = true;
      break;
    }
    if (!extended) throw DomainError("Sylow extension stalled");
  }
  return P;
}

SmallGroup::Sub SmallGroup::core_p(u64 p) const {
  Sub P = sylow(p);
  if (P.order() == 1) return P;
  // intersect over the conjugation orbit of P
  Sub K = P;
  std::vector<Sub> orbit{P};
  auto in_orbit = [&](const Sub& s) {
    return std::any_of(orbit.begin(), orbit.end(), [&](const Sub& t) { return t == s; });
  };
  for (size_t head = 0; head < orbit.size(); ++head) {
    if (K.order() == 1) break;
    for (const Perm& g : group_.generators()) {
      Sub c = conjugate(orbit[head], index_.at(g));
      if (!in_orbit(c)) {
        K = intersect(K, c);
        orbit.push_back(std::move(c));
        if (K.order() == 1) break;
      }
    }
  }
  return K;
}

bool SmallGroup::fitting_trivial() const {
  for (u64 p : prime_divisors())
    if (core_p(p).order() > 1) return false;
  return true;
}

std::vector<u64> SmallGroup::prime_divisors() const { return factor_primes(elems_.size()); }

bool SmallGroup::p_soluble(u64 p) const {
  if (elems_.size() == 1) return true;
  // find a proper non-trivial normal closure of a class representative
  for (u32 r : class_representatives()) {
    if (r == 0) continue;
    Sub n = normal_closure({r});
    if (n.order() == elems_.size()) continue;
    // recurse on the normal subgroup and the quotient
    PermGroup sub_pg(group_.degree(), [&] {
      std::vector<Perm> gs;
      for (u32 i : n.gens) gs.push_back(elems_[i]);
      return gs;
    }());
    if (!SmallGroup(sub_pg).p_soluble(p)) return false;
    // quotient as permutation action on right cosets of n
    std::vector<u32> coset_of(elems_.size());
    std::vector<u32> reps;
    {
      std::vector<i64> tag(elems_.size(), -1);
      for (u32 i = 0; i < elems_.size(); ++i) {
        if (tag[i] >= 0) continue;
        u32 rep_id = static_cast<u32>(reps.size());
        for (u32 x : n.elems) tag[mult(x, i)] = rep_id;
        reps.push_back(i);
      }
      for (u32 i = 0; i < elems_.size(); ++i) coset_of[i] = static_cast<u32>(tag[i]);
    }
    std::vector<Perm> qgens;
    for (const Perm& g : group_.generators()) {
      u32 gi = index_.at(g);
      std::vector<u32> img(reps.size());
      for (u32 c = 0; c < reps.size(); ++c) img[c] = coset_of[mult(reps[c], gi)];
      qgens.emplace_back(std::move(img));
    }
    PermGroup quotient(static_cast<u32>(reps.size()), std::move(qgens));
    return SmallGroup(quotient).p_soluble(p);
  }
  // simple group: p-soluble iff p-group or p'-group
  u64 n = elems_.size();
  if (n % p != 0) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

SmallGroup::Sub SmallGroup::hall_p_prime(u64 p) const {
  u64 target = elems_.size();
  while (target % p == 0) target /= p;
  Sub L = trivial();
  if (target == 1) return L;
  for (u32 g = 1; g < elems_.size() && L.order() < target; ++g) {
    if (L.contains(g)) continue;
    if (element_order(g) % p == 0) continue;
    std::vector<u32> gens = L.gens;
    gens.push_back(g);
    Sub b = closure(std::move(gens));
    if (b.order() % p == 0) continue;
    L = std::move(b);
  }
  if (L.order() != target)
    throw DomainError("Hall p'-subgroup search stalled (group not p-soluble?)");
  return L;
}

}  // namespace cgt
