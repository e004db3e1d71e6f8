#include "rs3/decision.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rs3/errors.hpp"

namespace rs3 {

namespace {

std::vector<ApproxPair> family_pairs(const FunctionFamily& family) {
  std::vector<ApproxPair> pairs;
  pairs.reserve(family.size());
  for (const TvFunction& f : family.members()) pairs.push_back(phi(f));
  std::sort(pairs.begin(), pairs.end(),
            [](const ApproxPair& a, const ApproxPair& b) { return canonical_less(a, b); });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<ApproxPair> brute_force_join_irreducibles(const std::vector<ApproxPair>& pairs) {
  std::vector<ApproxPair> out;
  for (const ApproxPair& p : pairs) {
    std::uint32_t lo = 0, up = 0;
    for (const ApproxPair& q : pairs) {
      if (q != p && pair_leq(q, p)) {
        lo |= q.lower().bits();
        up |= q.upper().bits();
      }
    }
    if (lo != p.lower().bits() || up != p.upper().bits()) out.push_back(p);
  }
  return out;
}

ConditionFailure sublattice_failure(const SublatticeCheck& check) {
  ConditionFailure fail;
  fail.condition = "polarity-sublattice";
  fail.detail = check.describe();
  if (check.f) fail.functions.push_back(*check.f);
  if (check.g) fail.functions.push_back(*check.g);
  if (check.missing) fail.functions.push_back(*check.missing);
  return fail;
}

void collect_condition_failures(const FunctionFamily& family, std::vector<ConditionFailure>& out) {
  const Universe& u = family.universe();
  C1Result c1 = check_c1(family);
  if (!c1.holds) {
    ConditionFailure fail;
    fail.condition = "C1";
    fail.element = u.name(*c1.x);
    fail.functions.push_back(*c1.f);
    fail.detail = "x=" + u.name(*c1.x) + " is a singleton inside support but not core of f=" +
                  c1.f->to_string();
    out.push_back(std::move(fail));
  }
  C2Result c2 = check_c2(family);
  if (!c2.holds) {
    ConditionFailure fail;
    fail.condition = "C2";
    fail.element = u.name(*c2.x);
    fail.functions.push_back(*c2.generator);
    fail.detail = "core of f_" + u.name(*c2.x) + " = " + c2.generator->to_string() +
                  " is not contained in {" + u.name(*c2.x) + "}";
    out.push_back(std::move(fail));
  }
  C3Result c3 = check_c3(family);
  if (!c3.holds) {
    ConditionFailure fail;
    fail.condition = "C3";
    fail.functions.push_back(*c3.f);
    fail.functions.push_back(*c3.g);
    fail.detail = "f=" + c3.f->to_string() + ", g=" + c3.g->to_string();
    out.push_back(std::move(fail));
  }
}

// The brute-force certificate: the approximation pairs of the family must
// be exactly the rough sets of the recovered quasiorder.
bool certify(const FunctionFamily& family, const Relation& r) {
  return family_pairs(family) == rs_enumerate(r).pairs;
}

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes_quasiorder: return "yes-quasiorder";
    case Answer::yes_equivalence: return "yes-equivalence";
    case Answer::no: return "no";
  }
  return "?";
}

Verdict decide_quasiorder(const FunctionFamily& family) {
  Verdict v;
  SublatticeCheck closed = is_complete_polarity_sublattice(family);
  if (!closed.ok) {
    v.failures.push_back(sublattice_failure(closed));
    return v;
  }
  collect_condition_failures(family, v.failures);
  if (!v.failures.empty()) return v;

  Relation r = quasiorder_of_family(family);
  if (!certify(family, r))
    throw internal_error("decide_quasiorder: certificate failed, A(F) != RS(<=_F)");
  v.answer = Answer::yes_quasiorder;
  v.relation = std::move(r);
  v.certificate = true;
  return v;
}

Verdict decide_equivalence(const FunctionFamily& family) {
  Verdict v;
  SublatticeCheck closed = is_complete_polarity_sublattice(family);
  if (!closed.ok) {
    v.failures.push_back(sublattice_failure(closed));
    return v;
  }
  if (!is_luk_subalgebra(family)) {
    ConditionFailure fail;
    fail.condition = "lukasiewicz";
    for (const TvFunction& f : family.members()) {
      TvFunction p = lift(UnaryOp::poss, f);
      if (!family.contains(p)) {
        fail.functions.push_back(f);
        fail.functions.push_back(p);
        fail.detail = "poss " + f.to_string() + " = " + p.to_string() + " missing";
        break;
      }
    }
    v.failures.push_back(std::move(fail));
  }
  collect_condition_failures(family, v.failures);
  if (!v.failures.empty()) return v;

  Relation r = quasiorder_of_family(family);
  if (!r.predicates().symmetric)
    throw internal_error("decide_equivalence: induced relation of a Lukasiewicz family not symmetric");
  if (!certify(family, r))
    throw internal_error("decide_equivalence: certificate failed, A(F) != RS(<=_F)");
  v.answer = Answer::yes_equivalence;
  v.relation = std::move(r);
  v.certificate = true;
  return v;
}

FunctionFamily rs_to_family(const Relation& r) {
  require_quasiorder(r, "rs_to_family");
  RoughSetSystem rs = rs_enumerate(r);
  std::vector<TvFunction> members;
  members.reserve(rs.pairs.size());
  for (const ApproxPair& p : rs.pairs) members.push_back(phi_inv(p));
  return FunctionFamily(r.universe(), std::move(members));
}

std::string SweepReport::to_text() const {
  std::string mode_name = mode == SweepMode::quasiorder    ? "quasiorder"
                          : mode == SweepMode::equivalence ? "equivalence"
                                                           : "both";
  std::string out = "sweep mode=" + mode_name + " max-size=" + std::to_string(max_n) + "\n";
  for (const auto& s : sizes) {
    out += "  n=" + std::to_string(s.n) + ": relations=" + std::to_string(s.relations) +
           " equivalences=" + std::to_string(s.equivalences) +
           " violations=" + std::to_string(s.violations) + "\n";
  }
  out += "total relations: " + std::to_string(total_relations) +
         ", violations: " + std::to_string(total_violations) + "\n";
  if (!first_violation.empty()) out += "first violation: " + first_violation + "\n";
  return out;
}

SweepReport sweep(int max_n, SweepMode mode) {
  if (max_n < 1 || max_n > 4) throw std::invalid_argument("sweep: max size must be in 1..4");
  SweepReport report;
  report.mode = mode;
  report.max_n = max_n;

  for (int n = 1; n <= max_n; ++n) {
    Universe u = default_universe(static_cast<std::size_t>(n));
    std::vector<Relation> relations =
        mode == SweepMode::equivalence ? all_equivalences(u) : all_quasiorders(u);
    SweepSizeStats stats;
    stats.n = n;
    for (const Relation& r : relations) {
      stats.relations++;
      const bool symmetric = r.predicates().symmetric;
      if (symmetric) stats.equivalences++;

      std::string problem;
      RoughSetSystem rs = rs_enumerate(r);
      FunctionFamily family = rs_to_family(r);
      if (!is_complete_polarity_sublattice(family).ok)
        problem = "rs_to_family not a complete polarity sublattice";
      else if (!check_c1(family).holds)
        problem = "C1 fails on rs_to_family";
      else if (!check_c2(family).holds)
        problem = "C2 fails on rs_to_family";
      else if (!check_c3(family).holds)
        problem = "C3 fails on rs_to_family";
      else if (quasiorder_of_family(family) != r)
        problem = "induced quasiorder differs from the source";
      else if (family_pairs(family) != rs.pairs)
        problem = "A(F) differs from rs_enumerate";
      else if (rs_via_representation(r).pairs != rs.pairs)
        problem = "representation route differs from enumeration";
      else if (rs_join_irreducibles(r) != brute_force_join_irreducibles(rs.pairs))
        problem = "join-irreducible formula differs from brute force";
      else if (is_luk_subalgebra(family) != symmetric)
        problem = "Lukasiewicz closure does not match symmetry";

      if (!problem.empty()) {
        stats.violations++;
        if (report.first_violation.empty())
          report.first_violation = "n=" + std::to_string(n) + " relation " + r.to_string() +
                                   ": " + problem;
      }
    }
    report.total_relations += stats.relations;
    report.total_violations += stats.violations;
    report.sizes.push_back(stats);
  }
  return report;
}

std::string RandomSweepReport::to_text() const {
  std::string out = "random family sweep n=" + std::to_string(n) +
                    " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed) + "\n";
  out += "yes: " + std::to_string(yes_count) + "  no: " + std::to_string(no_count) +
         "  violations: " + std::to_string(violations) + "\n";
  if (!first_violation.empty()) out += "first violation: " + first_violation + "\n";
  return out;
}

RandomSweepReport random_family_sweep(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 3) throw std::invalid_argument("random_family_sweep: size must be in 1..3");
  if (trials < 0) throw std::invalid_argument("random_family_sweep: negative trial count");
  RandomSweepReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  Universe u = default_universe(static_cast<std::size_t>(n));
  const std::vector<TvFunction> everything = all_functions(u);
  const std::vector<Relation> quasiorders = all_quasiorders(u);
  std::vector<std::vector<ApproxPair>> all_rs;
  all_rs.reserve(quasiorders.size());
  for (const Relation& r : quasiorders) all_rs.push_back(rs_enumerate(r).pairs);

  // each function is kept when the next generator word is odd
  std::mt19937_64 gen(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<TvFunction> sample;
    for (const TvFunction& f : everything)
      if (gen() & 1u) sample.push_back(f);
    FunctionFamily family = close_polarity(FunctionFamily(u, std::move(sample)));
    Verdict v = decide_quasiorder(family);

    if (v.answer == Answer::yes_quasiorder) {
      report.yes_count++;
      // re-assert the certificate against the recovered relation
      if (family_pairs(family) != rs_enumerate(*v.relation).pairs) {
        report.violations++;
        if (report.first_violation.empty())
          report.first_violation = "trial " + std::to_string(t) + ": yes not certified";
      }
    } else {
      report.no_count++;
      const std::vector<ApproxPair> pairs = family_pairs(family);
      for (std::size_t i = 0; i < all_rs.size(); ++i) {
        if (pairs == all_rs[i]) {
          report.violations++;
          if (report.first_violation.empty())
            report.first_violation = "trial " + std::to_string(t) + ": answered no but A(F) = RS(" +
                                     quasiorders[i].to_string() + ")";
          break;
        }
      }
    }
  }
  return report;
}

std::vector<FunctionFamily> enumerate_subalgebras(int n, SubalgebraKind kind) {
  if (n < 1 || n > 2) throw std::invalid_argument("enumerate_subalgebras: size must be 1 or 2");
  Universe u = default_universe(static_cast<std::size_t>(n));
  const std::vector<TvFunction> everything = all_functions(u);
  const std::size_t count = everything.size();  // 3 or 9
  std::vector<FunctionFamily> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
    std::vector<TvFunction> members;
    for (std::size_t i = 0; i < count; ++i)
      if ((mask >> i) & 1u) members.push_back(everything[i]);
    FunctionFamily family(u, std::move(members));
    const bool keep = kind == SubalgebraKind::lukasiewicz
                          ? is_luk_subalgebra(family)
                          : is_complete_polarity_sublattice(family).ok;
    if (keep) out.push_back(std::move(family));
  }
  return out;
}

}  // namespace rs3
