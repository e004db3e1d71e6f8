#include "rs3/roughset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "rs3/errors.hpp"

namespace rs3 {

namespace {

void require_enumerable(const Relation& r, const char* what) {
  if (r.universe().size() > 16)
    throw std::invalid_argument(std::string(what) + ": universe too large for 2^|U| enumeration");
}

std::vector<ApproxPair> sorted_unique(std::vector<ApproxPair> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const ApproxPair& a, const ApproxPair& b) { return canonical_less(a, b); });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

bool RoughSetSystem::contains(const ApproxPair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p,
                            [](const ApproxPair& a, const ApproxPair& b) { return canonical_less(a, b); });
}

RoughSetSystem rs_enumerate(const Relation& r) {
  require_enumerable(r, "rs_enumerate");
  const Universe& u = r.universe();
  std::vector<ApproxPair> pairs;
  const std::uint32_t full = u.full_mask();
  for (std::uint32_t x = 0;; ++x) {
    pairs.emplace_back(Subset(u, r.lower_mask(x)), Subset(u, r.upper_mask(x)));
    if (x == full) break;
  }
  return RoughSetSystem{r, sorted_unique(std::move(pairs))};
}

RoughSetSystem rs_via_representation(const Relation& r) {
  require_quasiorder(r, "rs_via_representation");
  require_enumerable(r, "rs_via_representation");
  const Universe& u = r.universe();
  const std::uint32_t full = u.full_mask();

  std::vector<std::uint32_t> lowers, uppers;
  for (std::uint32_t x = 0;; ++x) {
    lowers.push_back(r.lower_mask(x));
    uppers.push_back(r.upper_mask(x));
    if (x == full) break;
  }
  std::sort(lowers.begin(), lowers.end());
  lowers.erase(std::unique(lowers.begin(), lowers.end()), lowers.end());
  std::sort(uppers.begin(), uppers.end());
  uppers.erase(std::unique(uppers.begin(), uppers.end()), uppers.end());

  // S = elements related only to themselves
  std::uint32_t s = 0;
  for (std::size_t x = 0; x < u.size(); ++x)
    if (r.successors(x) == (std::uint32_t{1} << x)) s |= std::uint32_t{1} << x;

  std::vector<ApproxPair> pairs;
  for (std::uint32_t a : lowers) {
    for (std::uint32_t b : uppers) {
      if (a & ~b) continue;                 // need A ⊆ B
      if (s & ~(a | (~b & full))) continue; // need S ⊆ A ∪ B^c
      pairs.emplace_back(Subset(u, a), Subset(u, b));
    }
  }
  return RoughSetSystem{r, sorted_unique(std::move(pairs))};
}

std::vector<ApproxPair> rs_join_irreducibles(const Relation& r) {
  require_quasiorder(r, "rs_join_irreducibles");
  const Universe& u = r.universe();
  std::vector<ApproxPair> out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    const std::uint32_t up_x = r.successors(x);  // [x)
    if (std::popcount(up_x) >= 2)
      out.emplace_back(Subset::empty(u), Subset(u, r.upper_mask(std::uint32_t{1} << x)));
    out.emplace_back(Subset(u, up_x), Subset(u, r.upper_mask(up_x)));
  }
  return sorted_unique(std::move(out));
}

ApproxPair approx_alt(const Relation& r, const Subset& x, AltMode mode) {
  require_quasiorder(r, "approx_alt");
  require_same_universe(r.universe(), x.universe(), "approx_alt");
  const Universe& u = r.universe();
  std::uint32_t lo = 0, up = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::uint32_t succ = r.successors(i);  // [x)
    const std::uint32_t pred = r.predecessors(i);  // (x]
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (mode == AltMode::interior_closure) {
      if ((succ & ~x.bits()) == 0) lo |= bit;
      if (pred & x.bits()) up |= bit;
    } else {
      if ((pred & ~x.bits()) == 0) lo |= bit;
      if (succ & x.bits()) up |= bit;
    }
  }
  // reflexivity forces lo ⊆ X ⊆ up in both modes
  if (lo & ~up) throw internal_error("approx_alt: lower not contained in upper");
  return ApproxPair(Subset(u, lo), Subset(u, up));
}

std::vector<ApproxPair> rs_alt_enumerate(const Relation& r, AltMode mode) {
  require_quasiorder(r, "rs_alt_enumerate");
  require_enumerable(r, "rs_alt_enumerate");
  const Universe& u = r.universe();
  std::vector<ApproxPair> pairs;
  const std::uint32_t full = u.full_mask();
  for (std::uint32_t x = 0;; ++x) {
    pairs.push_back(approx_alt(r, Subset(u, x), mode));
    if (x == full) break;
  }
  return sorted_unique(std::move(pairs));
}

LatticeCheck is_lattice(const std::vector<ApproxPair>& pairs) {
  LatticeCheck out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      // least upper bound
      std::vector<ApproxPair> ub;
      for (const ApproxPair& q : pairs)
        if (pair_leq(pairs[i], q) && pair_leq(pairs[j], q)) ub.push_back(q);
      std::vector<ApproxPair> minimal;
      for (const ApproxPair& q : ub) {
        bool is_min = true;
        for (const ApproxPair& q2 : ub)
          if (q2 != q && pair_leq(q2, q)) {
            is_min = false;
            break;
          }
        if (is_min) minimal.push_back(q);
      }
      if (minimal.size() != 1) {
        out.is_lattice = false;
        out.witness_a = pairs[i];
        out.witness_b = pairs[j];
        out.join_failure = true;
        out.bounds = std::move(minimal);
        return out;
      }
      // greatest lower bound
      std::vector<ApproxPair> lb;
      for (const ApproxPair& q : pairs)
        if (pair_leq(q, pairs[i]) && pair_leq(q, pairs[j])) lb.push_back(q);
      std::vector<ApproxPair> maximal;
      for (const ApproxPair& q : lb) {
        bool is_max = true;
        for (const ApproxPair& q2 : lb)
          if (q2 != q && pair_leq(q, q2)) {
            is_max = false;
            break;
          }
        if (is_max) maximal.push_back(q);
      }
      if (maximal.size() != 1) {
        out.is_lattice = false;
        out.witness_a = pairs[i];
        out.witness_b = pairs[j];
        out.join_failure = false;
        out.bounds = std::move(maximal);
        return out;
      }
    }
  }
  return out;
}

C3RelationalResult check_c3_relational(const Relation& r) {
  if (!r.predicates().reflexive)
    throw std::invalid_argument("check_c3_relational: relation must be reflexive");
  require_enumerable(r, "check_c3_relational");
  const Universe& u = r.universe();
  const std::uint32_t full = u.full_mask();

  std::vector<std::uint32_t> low(std::size_t{full} + 1), up(std::size_t{full} + 1);
  for (std::uint32_t x = 0;; ++x) {
    low[x] = r.lower_mask(x);
    up[x] = r.upper_mask(x);
    if (x == full) break;
  }
  // intersection of Z_up over each class { Z | Z_down = L }
  std::map<std::uint32_t, std::uint32_t> class_cap;
  for (std::uint32_t z = 0;; ++z) {
    auto [it, inserted] = class_cap.try_emplace(low[z], up[z]);
    if (!inserted) it->second &= up[z];
    if (z == full) break;
  }

  C3RelationalResult out;
  for (std::uint32_t x = 0;; ++x) {
    const std::uint32_t cap = class_cap.at(low[x]);
    for (std::uint32_t y = 0;; ++y) {
      if ((low[x] & ~up[y]) == 0 && (cap & ~up[y]) != 0) {
        out.holds = false;
        out.x = Subset(u, x);
        out.y = Subset(u, y);
        return out;
      }
      if (y == full) break;
    }
    if (x == full) break;
  }
  return out;
}

}  // namespace rs3
