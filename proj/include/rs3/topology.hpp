// Alexandrov topologies on a finite universe and their bijection with
// quasiorders. On a finite set an Alexandrov topology is any family of
// subsets containing the empty set and the universe that is closed under
// unions and intersections.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rs3/relation.hpp"
#include "rs3/subset.hpp"
#include "rs3/universe.hpp"

namespace rs3 {

class Topology {
 public:
  // Validates the Alexandrov axioms; stores opens sorted ascending by mask.
  Topology(Universe universe, std::vector<std::uint32_t> opens);

  const Universe& universe() const { return universe_; }
  const std::vector<std::uint32_t>& opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }
  bool contains(std::uint32_t mask) const;

  // N(x), the intersection of all opens containing x.
  std::uint32_t least_neighbourhood(std::size_t x) const;

  std::vector<Subset> open_sets() const;
  std::string to_string() const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.universe_ == b.universe_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const Topology& a, const Topology& b) { return !(a == b); }

 private:
  Universe universe_;
  std::vector<std::uint32_t> opens_;
};

// The up-set topology of a quasiorder: B is open iff x in B and x <= y
// imply y in B. Equals the set of lower approximations of all subsets.
Topology topology_from_quasiorder(const Relation& r);

// x <= y iff y lies in the least neighbourhood of x.
Relation quasiorder_from_topology(const Topology& t);

// Complements of all opens; dual topologies correspond to inverse quasiorders.
Topology dual_topology(const Topology& t);

}  // namespace rs3
