// Approximation pairs (A, B) with A ⊆ B, the order isomorphism phi between
// 3^U and the pair lattice, and the pair-level formulas for every lifted
// operation. The pair formulas are implemented directly on sets, not by
// translating through phi, so the isomorphism can be tested as two
// independent routes.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rs3/subset.hpp"
#include "rs3/tvfunction.hpp"

namespace rs3 {

class ApproxPair {
 public:
  ApproxPair(Subset lower, Subset upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    require_same_universe(lower_.universe(), upper_.universe(), "approximation pair");
    if (!lower_.subset_of(upper_))
      throw std::invalid_argument("invalid approximation pair: lower " + lower_.to_string() +
                                  " is not contained in upper " + upper_.to_string());
  }

  const Subset& lower() const { return lower_; }
  const Subset& upper() const { return upper_; }
  const Universe& universe() const { return lower_.universe(); }

  std::string to_string() const { return "(" + lower_.to_string() + "," + upper_.to_string() + ")"; }

  friend bool operator==(const ApproxPair& a, const ApproxPair& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }
  friend bool operator!=(const ApproxPair& a, const ApproxPair& b) { return !(a == b); }

 private:
  Subset lower_;
  Subset upper_;
};

// Canonical order of pairs: lexicographic by (lower, upper) bit patterns.
inline bool canonical_less(const ApproxPair& a, const ApproxPair& b) {
  if (a.lower().bits() != b.lower().bits()) return a.lower().bits() < b.lower().bits();
  return a.upper().bits() < b.upper().bits();
}

// componentwise order
inline bool pair_leq(const ApproxPair& a, const ApproxPair& b) {
  return a.lower().subset_of(b.lower()) && a.upper().subset_of(b.upper());
}

// phi: f -> (core f, support f), an order isomorphism onto the pair lattice.
inline ApproxPair phi(const TvFunction& f) { return ApproxPair(core(f), support(f)); }

// phi^-1: x in A -> 1, x in B \ A -> u, x outside B -> 0.
inline TvFunction phi_inv(const ApproxPair& p) {
  const Universe& u = p.universe();
  std::vector<Trit> vals(u.size(), Trit::zero);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (p.lower().contains(i))
      vals[i] = Trit::one;
    else if (p.upper().contains(i))
      vals[i] = Trit::u;
  }
  return TvFunction(u, std::move(vals));
}

// ~(A,B) = (B^c, A^c)
inline ApproxPair pair_neg(const ApproxPair& p) {
  return ApproxPair(p.upper().complement(), p.lower().complement());
}

// nec(A,B) = (A,A)
inline ApproxPair pair_nec(const ApproxPair& p) { return ApproxPair(p.lower(), p.lower()); }

// poss(A,B) = (B,B)
inline ApproxPair pair_poss(const ApproxPair& p) { return ApproxPair(p.upper(), p.upper()); }

// (A,B)* = (B^c, B^c)
inline ApproxPair pair_star(const ApproxPair& p) {
  Subset c = p.upper().complement();
  return ApproxPair(c, c);
}

// (A,B)+ = (A^c, A^c)
inline ApproxPair pair_plus(const ApproxPair& p) {
  Subset c = p.lower().complement();
  return ApproxPair(c, c);
}

inline ApproxPair pair_meet(const ApproxPair& p, const ApproxPair& q) {
  return ApproxPair(p.lower() & q.lower(), p.upper() & q.upper());
}

inline ApproxPair pair_join(const ApproxPair& p, const ApproxPair& q) {
  return ApproxPair(p.lower() | q.lower(), p.upper() | q.upper());
}

// (A,B) -> (C,D) = (A^c ∪ C, A^c ∪ D)
inline ApproxPair pair_nelson(const ApproxPair& p, const ApproxPair& q) {
  require_same_universe(p.universe(), q.universe(), "pair_nelson");
  Subset ac = p.lower().complement();
  return ApproxPair(ac | q.lower(), ac | q.upper());
}

// (A,B) => (C,D) = (B^c ∪ C ∪ (A^c ∩ D), B^c ∪ D)
inline ApproxPair pair_heyting(const ApproxPair& p, const ApproxPair& q) {
  require_same_universe(p.universe(), q.universe(), "pair_heyting");
  Subset bc = p.upper().complement();
  Subset ac = p.lower().complement();
  return ApproxPair(bc | q.lower() | (ac & q.upper()), bc | q.upper());
}

inline ApproxPair pair_apply(UnaryOp op, const ApproxPair& p) {
  switch (op) {
    case UnaryOp::neg: return pair_neg(p);
    case UnaryOp::poss: return pair_poss(p);
    case UnaryOp::nec: return pair_nec(p);
    case UnaryOp::star: return pair_star(p);
    case UnaryOp::plus: return pair_plus(p);
  }
  throw std::invalid_argument("unknown unary op");
}

inline ApproxPair pair_apply(BinaryOp op, const ApproxPair& p, const ApproxPair& q) {
  switch (op) {
    case BinaryOp::meet: return pair_meet(p, q);
    case BinaryOp::join: return pair_join(p, q);
    case BinaryOp::heyting: return pair_heyting(p, q);
    case BinaryOp::nelson: return pair_nelson(p, q);
  }
  throw std::invalid_argument("unknown binary op");
}

}  // namespace rs3
