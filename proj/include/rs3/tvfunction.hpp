// Three-valued functions U -> 3 stored as a value vector in universe order.
// The pointwise order makes 3^U a complete lattice; every operation on the
// trit chain lifts pointwise. The core and support of a function determine
// it completely and connect 3^U to the approximation pairs.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rs3/subset.hpp"
#include "rs3/trit.hpp"
#include "rs3/universe.hpp"

namespace rs3 {

class TvFunction {
 public:
  TvFunction(Universe universe, std::vector<Trit> values)
      : universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_.size())
      throw std::invalid_argument("function must assign exactly one trit per element");
  }

  static TvFunction constant(const Universe& u, Trit t) {
    return TvFunction(u, std::vector<Trit>(u.size(), t));
  }
  static TvFunction bottom(const Universe& u) { return constant(u, Trit::zero); }
  static TvFunction top(const Universe& u) { return constant(u, Trit::one); }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  Trit at(std::size_t i) const { return values_.at(i); }
  Trit operator()(std::size_t i) const { return values_[i]; }
  const std::vector<Trit>& values() const { return values_; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ",";
      out += trit_char(values_[i]);
    }
    out += ")";
    return out;
  }

  friend bool operator==(const TvFunction& a, const TvFunction& b) {
    return a.universe_ == b.universe_ && a.values_ == b.values_;
  }
  friend bool operator!=(const TvFunction& a, const TvFunction& b) { return !(a == b); }

 private:
  Universe universe_;
  std::vector<Trit> values_;
};

// Canonical order of functions: lexicographic over the value vector with
// 0 < u < 1, first universe element most significant.
inline bool canonical_less(const TvFunction& a, const TvFunction& b) {
  require_same_universe(a.universe(), b.universe(), "function order");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return trit_lt(a(i), b(i));
  }
  return false;
}

inline TvFunction lift(UnaryOp op, const TvFunction& f) {
  std::vector<Trit> vals(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) vals[i] = apply(op, f(i));
  return TvFunction(f.universe(), std::move(vals));
}

inline TvFunction lift(BinaryOp op, const TvFunction& f, const TvFunction& g) {
  require_same_universe(f.universe(), g.universe(), "lift");
  std::vector<Trit> vals(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) vals[i] = apply(op, f(i), g(i));
  return TvFunction(f.universe(), std::move(vals));
}

// Family meet is the pointwise minimum; the empty family yields top.
inline TvFunction meet_family(std::span<const TvFunction> fs, const Universe& u) {
  TvFunction acc = TvFunction::top(u);
  for (const auto& f : fs) {
    require_same_universe(f.universe(), u, "meet_family");
    acc = lift(BinaryOp::meet, acc, f);
  }
  return acc;
}

// Family join is the pointwise maximum; the empty family yields bottom.
inline TvFunction join_family(std::span<const TvFunction> fs, const Universe& u) {
  TvFunction acc = TvFunction::bottom(u);
  for (const auto& f : fs) {
    require_same_universe(f.universe(), u, "join_family");
    acc = lift(BinaryOp::join, acc, f);
  }
  return acc;
}

// core(f) = { x | f(x) = 1 }
inline Subset core(const TvFunction& f) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f(i) == Trit::one) bits |= std::uint32_t{1} << i;
  return Subset(f.universe(), bits);
}

// support(f) = { x | f(x) >= u }
inline Subset support(const TvFunction& f) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f(i) != Trit::zero) bits |= std::uint32_t{1} << i;
  return Subset(f.universe(), bits);
}

inline bool leq(const TvFunction& f, const TvFunction& g) {
  require_same_universe(f.universe(), g.universe(), "leq");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!trit_le(f(i), g(i))) return false;
  return true;
}

// All 3^|U| functions in canonical ascending order. Guarded to keep the
// result set desk-sized.
inline std::vector<TvFunction> all_functions(const Universe& u) {
  if (u.size() > 12) throw std::invalid_argument("all_functions: universe too large");
  std::size_t total = 1;
  for (std::size_t i = 0; i < u.size(); ++i) total *= 3;
  std::vector<TvFunction> out;
  out.reserve(total);
  std::vector<Trit> vals(u.size(), Trit::zero);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rem = k;
    for (std::size_t i = u.size(); i-- > 0;) {
      vals[i] = all_trits[rem % 3];
      rem /= 3;
    }
    out.emplace_back(u, vals);
  }
  return out;
}

}  // namespace rs3
