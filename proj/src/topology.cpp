#include "rs3/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace rs3 {

Topology::Topology(Universe universe, std::vector<std::uint32_t> opens)
    : universe_(std::move(universe)), opens_(std::move(opens)) {
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (std::uint32_t m : opens_)
    if (m & ~universe_.full_mask())
      throw std::invalid_argument("topology: open set outside the universe");
  if (opens_.empty() || opens_.front() != 0)
    throw std::invalid_argument("topology must contain the empty set");
  if (opens_.back() != universe_.full_mask())
    throw std::invalid_argument("topology must contain the whole universe");
  // finite, so closure under pairwise unions/intersections is closure under
  // arbitrary ones
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!contains(opens_[i] | opens_[j]))
        throw std::invalid_argument("topology not closed under union: " +
                                    mask_to_string(universe_, opens_[i]) + " and " +
                                    mask_to_string(universe_, opens_[j]));
      if (!contains(opens_[i] & opens_[j]))
        throw std::invalid_argument("topology not closed under intersection: " +
                                    mask_to_string(universe_, opens_[i]) + " and " +
                                    mask_to_string(universe_, opens_[j]));
    }
  }
}

bool Topology::contains(std::uint32_t mask) const {
  return std::binary_search(opens_.begin(), opens_.end(), mask);
}

std::uint32_t Topology::least_neighbourhood(std::size_t x) const {
  std::uint32_t acc = universe_.full_mask();
  for (std::uint32_t m : opens_)
    if ((m >> x) & 1u) acc &= m;
  return acc;
}

std::vector<Subset> Topology::open_sets() const {
  std::vector<Subset> out;
  out.reserve(opens_.size());
  for (std::uint32_t m : opens_) out.emplace_back(universe_, m);
  return out;
}

std::string Topology::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if (i) out += ", ";
    out += mask_to_string(universe_, opens_[i]);
  }
  out += "}";
  return out;
}

Topology topology_from_quasiorder(const Relation& r) {
  require_quasiorder(r, "topology_from_quasiorder");
  const Universe& u = r.universe();
  if (u.size() > 16) throw std::invalid_argument("topology_from_quasiorder: universe too large");
  std::vector<std::uint32_t> opens;
  const std::uint32_t full = u.full_mask();
  for (std::uint32_t m = 0;; ++m) {
    bool closed = true;
    for (std::size_t x = 0; x < u.size() && closed; ++x)
      if (((m >> x) & 1u) && (r.successors(x) & ~m)) closed = false;
    if (closed) opens.push_back(m);
    if (m == full) break;
  }
  return Topology(u, std::move(opens));
}

Relation quasiorder_from_topology(const Topology& t) {
  const Universe& u = t.universe();
  std::vector<std::uint32_t> adj(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) adj[x] = t.least_neighbourhood(x);
  return Relation(u, std::move(adj));
}

Topology dual_topology(const Topology& t) {
  std::vector<std::uint32_t> opens;
  opens.reserve(t.size());
  const std::uint32_t full = t.universe().full_mask();
  for (std::uint32_t m : t.opens()) opens.push_back(~m & full);
  return Topology(t.universe(), std::move(opens));
}

}  // namespace rs3
