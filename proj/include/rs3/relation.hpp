// Binary relations on a finite universe, stored as one successor mask per
// element, with the predicates and the lower/upper rough approximation
// operators. For a quasiorder the successor set R(x) is the principal
// up-set [x).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rs3/subset.hpp"
#include "rs3/universe.hpp"

namespace rs3 {

struct RelationFlags {
  bool reflexive = false;
  bool transitive = false;
  bool symmetric = false;
  bool serial = false;
  bool quasiorder = false;   // reflexive and transitive
  bool equivalence = false;  // quasiorder and symmetric
  bool tolerance = false;    // reflexive and symmetric
};

class Relation {
 public:
  Relation(Universe universe, std::vector<std::uint32_t> adjacency);

  static Relation identity(const Universe& u);
  static Relation universal(const Universe& u);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return adjacency_.size(); }

  // R(x) as a mask; for quasiorders this is [x).
  std::uint32_t successors(std::size_t x) const { return adjacency_.at(x); }
  // { y | y R x } as a mask; for quasiorders this is (x].
  std::uint32_t predecessors(std::size_t x) const;

  bool related(std::size_t x, std::size_t y) const { return (adjacency_.at(x) >> y) & 1u; }

  Relation inverse() const;
  Relation reflexive_transitive_closure() const;

  RelationFlags predicates() const;
  bool is_quasiorder() const;
  bool is_equivalence() const;

  // X_down = { x | R(x) ⊆ X } and X_up = { x | R(x) ∩ X ≠ ∅ }.
  Subset lower(const Subset& x) const;
  Subset upper(const Subset& x) const;
  std::uint32_t lower_mask(std::uint32_t x) const;
  std::uint32_t upper_mask(std::uint32_t x) const;

  std::string to_string() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.adjacency_ == b.adjacency_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

 private:
  Universe universe_;
  std::vector<std::uint32_t> adjacency_;
};

void require_quasiorder(const Relation& r, const char* what);

// All quasiorders on the given universe, generated as reflexive relations
// filtered by transitivity, in a fixed deterministic order. Meant for
// desk-scale universes (|U| <= 5).
std::vector<Relation> all_quasiorders(const Universe& u);
std::vector<Relation> all_equivalences(const Universe& u);

}  // namespace rs3
