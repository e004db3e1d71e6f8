// Subsets of a Universe with bitset semantics. The numeric order of the
// bit patterns (element 0 = least significant bit) is the canonical order
// of subsets used everywhere for deterministic output.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rs3/universe.hpp"

namespace rs3 {

class Subset {
 public:
  Subset(Universe universe, std::uint32_t bits) : universe_(std::move(universe)), bits_(bits) {
    if (bits_ & ~universe_.full_mask())
      throw std::invalid_argument("subset bits outside the universe");
  }

  static Subset empty(const Universe& u) { return Subset(u, 0); }
  static Subset full(const Universe& u) { return Subset(u, u.full_mask()); }
  static Subset single(const Universe& u, std::size_t i) {
    if (i >= u.size()) throw std::invalid_argument("element index out of range");
    return Subset(u, std::uint32_t{1} << i);
  }

  static Subset of_names(const Universe& u, const std::vector<std::string>& names) {
    std::uint32_t bits = 0;
    for (const auto& n : names) {
      auto i = u.index_of(n);
      if (!i) throw std::invalid_argument("unknown universe element: " + n);
      bits |= std::uint32_t{1} << *i;
    }
    return Subset(u, bits);
  }

  const Universe& universe() const { return universe_; }
  std::uint32_t bits() const { return bits_; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == universe_.full_mask(); }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }

  Subset complement() const { return Subset(universe_, ~bits_ & universe_.full_mask()); }

  bool subset_of(const Subset& other) const {
    require_same_universe(universe_, other.universe_, "subset_of");
    return (bits_ & ~other.bits_) == 0;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    require_same_universe(a.universe_, b.universe_, "union");
    return Subset(a.universe_, a.bits_ | b.bits_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    require_same_universe(a.universe_, b.universe_, "intersection");
    return Subset(a.universe_, a.bits_ & b.bits_);
  }

  std::vector<std::string> element_names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
      if (contains(i)) out.push_back(universe_.name(i));
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (!contains(i)) continue;
      if (!first) out += ",";
      out += universe_.name(i);
      first = false;
    }
    out += "}";
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

 private:
  Universe universe_;
  std::uint32_t bits_;
};

// Renders a raw bit mask over a universe; used where masks are handled directly.
inline std::string mask_to_string(const Universe& u, std::uint32_t mask) {
  return Subset(u, mask).to_string();
}

}  // namespace rs3
