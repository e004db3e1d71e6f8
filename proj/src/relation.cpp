#include "rs3/relation.hpp"

#include <stdexcept>

namespace rs3 {

Relation::Relation(Universe universe, std::vector<std::uint32_t> adjacency)
    : universe_(std::move(universe)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != universe_.size())
    throw std::invalid_argument("relation needs one successor set per element");
  for (std::uint32_t row : adjacency_)
    if (row & ~universe_.full_mask())
      throw std::invalid_argument("relation successor set outside the universe");
}

Relation Relation::identity(const Universe& u) {
  std::vector<std::uint32_t> adj(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) adj[x] = std::uint32_t{1} << x;
  return Relation(u, std::move(adj));
}

Relation Relation::universal(const Universe& u) {
  return Relation(u, std::vector<std::uint32_t>(u.size(), u.full_mask()));
}

std::uint32_t Relation::predecessors(std::size_t x) const {
  std::uint32_t out = 0;
  for (std::size_t y = 0; y < adjacency_.size(); ++y)
    if ((adjacency_[y] >> x) & 1u) out |= std::uint32_t{1} << y;
  return out;
}

Relation Relation::inverse() const {
  std::vector<std::uint32_t> adj(adjacency_.size());
  for (std::size_t x = 0; x < adjacency_.size(); ++x) adj[x] = predecessors(x);
  return Relation(universe_, std::move(adj));
}

Relation Relation::reflexive_transitive_closure() const {
  std::vector<std::uint32_t> adj = adjacency_;
  for (std::size_t x = 0; x < adj.size(); ++x) adj[x] |= std::uint32_t{1} << x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < adj.size(); ++x) {
      std::uint32_t reach = adj[x];
      for (std::size_t y = 0; y < adj.size(); ++y)
        if ((adj[x] >> y) & 1u) reach |= adj[y];
      if (reach != adj[x]) {
        adj[x] = reach;
        changed = true;
      }
    }
  }
  return Relation(universe_, std::move(adj));
}

RelationFlags Relation::predicates() const {
  RelationFlags f;
  const std::size_t n = adjacency_.size();
  f.reflexive = true;
  f.transitive = true;
  f.symmetric = true;
  f.serial = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (!((adjacency_[x] >> x) & 1u)) f.reflexive = false;
    if (adjacency_[x] == 0) f.serial = false;
    std::uint32_t reach = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if ((adjacency_[x] >> y) & 1u) {
        reach |= adjacency_[y];
        if (!((adjacency_[y] >> x) & 1u)) f.symmetric = false;
      }
    }
    if (reach & ~adjacency_[x]) f.transitive = false;
  }
  f.quasiorder = f.reflexive && f.transitive;
  f.equivalence = f.quasiorder && f.symmetric;
  f.tolerance = f.reflexive && f.symmetric;
  return f;
}

bool Relation::is_quasiorder() const {
  RelationFlags f = predicates();
  return f.quasiorder;
}

bool Relation::is_equivalence() const {
  RelationFlags f = predicates();
  return f.equivalence;
}

std::uint32_t Relation::lower_mask(std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < adjacency_.size(); ++i)
    if ((adjacency_[i] & ~x) == 0) out |= std::uint32_t{1} << i;
  return out;
}

std::uint32_t Relation::upper_mask(std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < adjacency_.size(); ++i)
    if (adjacency_[i] & x) out |= std::uint32_t{1} << i;
  return out;
}

Subset Relation::lower(const Subset& x) const {
  require_same_universe(universe_, x.universe(), "lower approximation");
  return Subset(universe_, lower_mask(x.bits()));
}

Subset Relation::upper(const Subset& x) const {
  require_same_universe(universe_, x.universe(), "upper approximation");
  return Subset(universe_, upper_mask(x.bits()));
}

std::string Relation::to_string() const {
  std::string out;
  for (std::size_t x = 0; x < adjacency_.size(); ++x) {
    if (x) out += " ";
    out += universe_.name(x) + ":" + mask_to_string(universe_, adjacency_[x]);
  }
  return out;
}

void require_quasiorder(const Relation& r, const char* what) {
  if (!r.is_quasiorder())
    throw std::invalid_argument(std::string(what) + ": relation is not a quasiorder");
}

std::vector<Relation> all_quasiorders(const Universe& u) {
  const std::size_t n = u.size();
  if (n > 5) throw std::invalid_argument("all_quasiorders: universe too large");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) off.emplace_back(x, y);
  std::vector<Relation> out;
  const std::uint64_t total = std::uint64_t{1} << off.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::uint32_t> adj(n);
    for (std::size_t x = 0; x < n; ++x) adj[x] = std::uint32_t{1} << x;
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((bits >> i) & 1u) adj[off[i].first] |= std::uint32_t{1} << off[i].second;
    Relation r(u, std::move(adj));
    if (r.predicates().transitive) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> all_equivalences(const Universe& u) {
  std::vector<Relation> out;
  for (auto& r : all_quasiorders(u))
    if (r.predicates().symmetric) out.push_back(std::move(r));
  return out;
}

}  // namespace rs3
