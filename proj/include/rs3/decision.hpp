// Decision procedures: is a family of three-valued functions exactly the
// rough-set system of some quasiorder (or equivalence) on its universe?
// A family qualifies for a quasiorder iff it is a complete polarity
// sublattice satisfying C1..C3; for an equivalence it must additionally be
// a Lukasiewicz subalgebra. Positive answers are always certified by brute
// force against the enumerated rough-set system of the recovered relation.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rs3/family.hpp"
#include "rs3/relation.hpp"
#include "rs3/roughset.hpp"

namespace rs3 {

enum class Answer { yes_quasiorder, yes_equivalence, no };

std::string to_string(Answer a);

struct ConditionFailure {
  std::string condition;  // "polarity-sublattice", "C1", "C2", "C3", "lukasiewicz"
  std::string detail;     // rendered witness
  std::optional<std::string> element;
  std::vector<TvFunction> functions;
};

struct Verdict {
  Answer answer = Answer::no;
  std::optional<Relation> relation;  // the induced quasiorder on a yes
  std::vector<ConditionFailure> failures;
  bool certificate = false;  // brute-force A(F) = RS check passed
};

// Theorem for quasiorders, run as a procedure. The certificate is computed
// even though the theory guarantees it; a mismatch raises internal_error.
Verdict decide_quasiorder(const FunctionFamily& family);

// Theorem for equivalences: additionally requires Lukasiewicz closure; on a
// yes the induced relation is asserted symmetric.
Verdict decide_equivalence(const FunctionFamily& family);

// phi^-1 image of the rough-set system of a quasiorder.
FunctionFamily rs_to_family(const Relation& r);

enum class SweepMode { quasiorder, equivalence, both };

struct SweepSizeStats {
  int n = 0;
  long relations = 0;
  long equivalences = 0;
  long violations = 0;
};

struct SweepReport {
  SweepMode mode = SweepMode::both;
  int max_n = 0;
  std::vector<SweepSizeStats> sizes;
  long total_relations = 0;
  long total_violations = 0;
  std::string first_violation;  // empty when clean

  std::string to_text() const;
};

// Exhaustive verification over every quasiorder (or equivalence) on
// universes of size 1..max_n, 1 <= max_n <= 4. Per relation r with
// F = rs_to_family(r) it checks:
//   (i)   F is a complete polarity sublattice satisfying C1..C3,
//   (ii)  quasiorder_of_family(F) = r,
//   (iii) A(F) = rs_enumerate(r),
//   (iv)  rs_via_representation(r) = rs_enumerate(r),
//   (v)   rs_join_irreducibles(r) matches brute force over rs_enumerate(r),
//   (vi)  F is Lukasiewicz-closed iff r is an equivalence.
SweepReport sweep(int max_n, SweepMode mode);

struct RandomSweepReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long yes_count = 0;
  long no_count = 0;
  long violations = 0;
  std::string first_violation;

  std::string to_text() const;
};

// Stress test of the biconditional, 1 <= n <= 3. Each trial samples a
// random subset of 3^U (each function kept with probability 1/2 from a
// seeded mt19937_64), closes it under polarity, and decides. A yes must be
// certified against the recovered relation; a no must differ from the
// rough-set system of every quasiorder on U.
RandomSweepReport random_family_sweep(int n, int trials, std::uint64_t seed);

enum class SubalgebraKind { polarity_lattice, lukasiewicz };

// All subsets of 3^U that are complete polarity sublattices (or Lukasiewicz
// subalgebras), n <= 2, in a deterministic order.
std::vector<FunctionFamily> enumerate_subalgebras(int n, SubalgebraKind kind);

}  // namespace rs3
