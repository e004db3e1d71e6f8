// Rough-set systems RS = { (X_down, X_up) | X ⊆ U }, their representation
// as increasing pairs over the approximation topologies, completely
// join-irreducible elements, the alternative approximation operators that
// need not give a lattice, and the relational form of condition C3.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rs3/approx_pair.hpp"
#include "rs3/relation.hpp"
#include "rs3/subset.hpp"

namespace rs3 {

struct RoughSetSystem {
  Relation source;
  std::vector<ApproxPair> pairs;  // deduplicated, canonical order

  std::size_t size() const { return pairs.size(); }
  bool contains(const ApproxPair& p) const;
};

// Enumerates (X_down, X_up) over all 2^|U| subsets. |U| is capped at 16.
RoughSetSystem rs_enumerate(const Relation& r);

// Builds the same system for a quasiorder from the increasing-pair
// representation: pairs (A, B) with A a lower approximation, B an upper
// approximation, A ⊆ B, and S ⊆ A ∪ B^c where S = { x | [x) = {x} }.
RoughSetSystem rs_via_representation(const Relation& r);

// J(RS) for a quasiorder:
//   { (∅, {x}_up) | |[x)| >= 2 } ∪ { ([x), [x)_up) | x in U }.
std::vector<ApproxPair> rs_join_irreducibles(const Relation& r);

enum class AltMode {
  interior_closure,  // L(X) = { x | [x) ⊆ X },  U(X) = { x | (x] ∩ X ≠ ∅ }
  ganter,            // lower uses (x] ⊆ X, upper uses [x) ∩ X ≠ ∅
};

// Alternative approximation pair of a single set under a quasiorder.
ApproxPair approx_alt(const Relation& r, const Subset& x, AltMode mode);

// All alternative pairs, deduplicated in canonical order.
std::vector<ApproxPair> rs_alt_enumerate(const Relation& r, AltMode mode);

struct LatticeCheck {
  bool is_lattice = true;
  // set on failure: the incomparable witnesses and, depending on the failing
  // side, their minimal upper bounds or maximal lower bounds within the set
  std::optional<ApproxPair> witness_a;
  std::optional<ApproxPair> witness_b;
  bool join_failure = true;
  std::vector<ApproxPair> bounds;
};

// Checks that every two members have a least upper bound and a greatest
// lower bound within the given set under the componentwise order.
LatticeCheck is_lattice(const std::vector<ApproxPair>& pairs);

struct C3RelationalResult {
  bool holds = true;
  std::optional<Subset> x;
  std::optional<Subset> y;
};

// For a reflexive relation: whenever X_down ⊆ Y_up, the intersection of
// Z_up over all Z with Z_down = X_down must lie inside Y_up. Fails for
// some tolerances; holds for every quasiorder.
C3RelationalResult check_c3_relational(const Relation& r);

}  // namespace rs3
