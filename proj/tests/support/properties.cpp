#include "properties.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rs3/decision.hpp"
#include "rs3/family.hpp"
#include "rs3/roughset.hpp"
#include "rs3/topology.hpp"

namespace rs3::testing {

namespace {

std::string fn3(Trit a) { return trit_string(a); }

bool sorted_equal(std::vector<ApproxPair> a, std::vector<ApproxPair> b) {
  auto less = [](const ApproxPair& x, const ApproxPair& y) { return canonical_less(x, y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

PropertyStats check_three_invariants() {
  PropertyStats st;
  const Trit O = Trit::zero, I = Trit::one;

  for (Trit a : all_trits) {
    st.expect(neg(neg(a)) == a, "~~a != a at " + fn3(a));
    st.expect(join(neg(a), poss(a)) == I, "L1 fails at " + fn3(a));
    st.expect(meet(neg(a), a) == meet(neg(a), poss(a)), "L2 fails at " + fn3(a));
    st.expect(nec(poss(a)) == poss(a), "nec poss != poss at " + fn3(a));
    st.expect(poss(nec(a)) == nec(a), "poss nec != nec at " + fn3(a));
    st.expect(nec(a) == neg(poss(neg(a))), "nec != ~poss~ at " + fn3(a));
    st.expect(join(star(a), star(star(a))) == I, "Stone fails at " + fn3(a));
    st.expect(meet(plus(a), plus(plus(a))) == O, "dual Stone fails at " + fn3(a));
    st.expect(poss(a) == star(star(a)), "poss != ** at " + fn3(a));
    st.expect(star(a) == neg(poss(a)), "* != ~poss at " + fn3(a));
    st.expect(plus(a) == poss(neg(a)), "+ != poss~ at " + fn3(a));
    st.expect(neg(star(a)) == plus(neg(a)), "~* != +~ at " + fn3(a));
    st.expect(poss(a) == nelson(neg(a), O), "poss != (~a -> 0) at " + fn3(a));
    st.expect(join(a, nelson(a, O)) == I, "N6 fails at " + fn3(a));
    st.expect(nelson(a, a) == I, "N1 fails at " + fn3(a));
    st.expect(meet(a, star(a)) == O, "a & a* != 0 at " + fn3(a));
    st.expect(join(a, plus(a)) == I, "a | a+ != 1 at " + fn3(a));
    st.expect(meet(a, star(O)) == a, "P2 fails at " + fn3(a));
    st.expect(join(a, plus(I)) == a, "dual P2 fails at " + fn3(a));
  }
  st.expect(star(star(O)) == O, "P3 fails");
  st.expect(plus(plus(I)) == I, "dual P3 fails");

  for (Trit a : all_trits) {
    for (Trit b : all_trits) {
      const std::string at = " at (" + fn3(a) + "," + fn3(b) + ")";
      st.expect(neg(meet(a, b)) == join(neg(a), neg(b)), "De Morgan" + at);
      st.expect(trit_le(meet(a, neg(a)), join(b, neg(b))), "Kleene" + at);
      st.expect(poss(meet(a, b)) == meet(poss(a), poss(b)), "L3" + at);
      if (nec(a) == nec(b) && poss(a) == poss(b))
        st.expect(a == b, "Moisil determination" + at);
      else
        st.pass();
      st.expect(meet(a, heyting(a, b)) == meet(a, b), "H1" + at);
      st.expect(heyting(a, b) == join(nec(neg(a)), join(b, meet(poss(neg(a)), poss(b)))),
                "Heyting from possibility" + at);
      st.expect(nelson(a, b) == heyting(a, join(neg(a), b)), "Nelson from Heyting" + at);
      st.expect(nelson(a, b) == join(poss(neg(a)), b), "Nelson from possibility" + at);
      st.expect(meet(join(neg(a), b), nelson(a, b)) == join(neg(a), b), "N2" + at);
      st.expect(meet(a, nelson(a, b)) == meet(a, join(neg(a), b)), "N3" + at);
      st.expect(meet(a, star(meet(a, b))) == meet(a, star(b)), "P1" + at);
      st.expect(join(a, plus(join(a, b))) == join(a, plus(b)), "dual P1" + at);
      if (star(a) == star(b) && plus(a) == plus(b))
        st.expect(a == b, "regularity" + at);
      else
        st.pass();
      // pseudocomplement characterisations
      st.expect((meet(a, b) == O) == trit_le(b, star(a)), "pseudocomplement law" + at);
      st.expect((join(a, b) == I) == trit_le(plus(a), b), "dual pseudocomplement law" + at);
      // Katrinak: a => b = (a* | b**) & ((a | a*)+ | a* | b | b*)
      Trit katrinak = meet(join(star(a), star(star(b))),
                           join(join(plus(join(a, star(a))), star(a)), join(b, star(b))));
      st.expect(heyting(a, b) == katrinak, "Katrinak formula" + at);
    }
  }

  for (Trit a : all_trits) {
    for (Trit b : all_trits) {
      for (Trit c : all_trits) {
        const std::string at = " at (" + fn3(a) + "," + fn3(b) + "," + fn3(c) + ")";
        st.expect(trit_le(meet(a, c), b) == trit_le(c, heyting(a, b)), "residuation" + at);
        st.expect(meet(a, heyting(b, c)) == meet(a, heyting(meet(a, b), meet(a, c))), "H2" + at);
        st.expect(meet(c, heyting(meet(a, b), a)) == c, "H3" + at);
        st.expect(nelson(a, meet(b, c)) == meet(nelson(a, b), nelson(a, c)), "N4" + at);
        st.expect(nelson(meet(a, b), c) == nelson(a, nelson(b, c)), "N5" + at);
      }
    }
  }
  return st;
}

namespace {

// every `three` identity, lifted to given functions
void check_lifted_identities(PropertyStats& st, const TvFunction& f, const TvFunction& g,
                             const TvFunction& h) {
  const Universe& u = f.universe();
  const TvFunction bot = TvFunction::bottom(u);
  const TvFunction top = TvFunction::top(u);
  auto NEG = [](const TvFunction& x) { return lift(UnaryOp::neg, x); };
  auto POSS = [](const TvFunction& x) { return lift(UnaryOp::poss, x); };
  auto NEC = [](const TvFunction& x) { return lift(UnaryOp::nec, x); };
  auto STAR = [](const TvFunction& x) { return lift(UnaryOp::star, x); };
  auto PLUS = [](const TvFunction& x) { return lift(UnaryOp::plus, x); };
  auto MEET = [](const TvFunction& x, const TvFunction& y) { return lift(BinaryOp::meet, x, y); };
  auto JOIN = [](const TvFunction& x, const TvFunction& y) { return lift(BinaryOp::join, x, y); };
  auto HEY = [](const TvFunction& x, const TvFunction& y) { return lift(BinaryOp::heyting, x, y); };
  auto NEL = [](const TvFunction& x, const TvFunction& y) { return lift(BinaryOp::nelson, x, y); };

  const std::string at = " at f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string();
  st.expect(NEG(NEG(f)) == f, "lifted ~~" + at);
  st.expect(NEG(MEET(f, g)) == JOIN(NEG(f), NEG(g)), "lifted De Morgan" + at);
  st.expect(leq(MEET(f, NEG(f)), JOIN(g, NEG(g))), "lifted Kleene" + at);
  st.expect(JOIN(NEG(f), POSS(f)) == top, "lifted L1" + at);
  st.expect(MEET(NEG(f), f) == MEET(NEG(f), POSS(f)), "lifted L2" + at);
  st.expect(POSS(MEET(f, g)) == MEET(POSS(f), POSS(g)), "lifted L3" + at);
  st.expect(MEET(f, HEY(f, g)) == MEET(f, g), "lifted H1" + at);
  st.expect(MEET(f, HEY(g, h)) == MEET(f, HEY(MEET(f, g), MEET(f, h))), "lifted H2" + at);
  st.expect(MEET(h, HEY(MEET(f, g), f)) == h, "lifted H3" + at);
  st.expect(HEY(f, g) == JOIN(NEC(NEG(f)), JOIN(g, MEET(POSS(NEG(f)), POSS(g)))),
            "lifted Heyting formula" + at);
  st.expect(leq(MEET(f, h), g) == leq(h, HEY(f, g)), "lifted residuation" + at);
  st.expect(NEL(f, g) == HEY(f, JOIN(NEG(f), g)), "lifted Nelson def" + at);
  st.expect(NEL(f, g) == JOIN(POSS(NEG(f)), g), "lifted Nelson formula" + at);
  st.expect(JOIN(f, NEL(f, bot)) == top, "lifted N6" + at);
  st.expect(JOIN(STAR(f), STAR(STAR(f))) == top, "lifted Stone" + at);
  st.expect(MEET(PLUS(f), PLUS(PLUS(f))) == bot, "lifted dual Stone" + at);
  st.expect(POSS(f) == STAR(STAR(f)), "lifted poss = **" + at);
  if (NEC(f) == NEC(g) && POSS(f) == POSS(g))
    st.expect(f == g, "lifted Moisil" + at);
  else
    st.pass();
}

void check_core_support_laws(PropertyStats& st, const std::vector<TvFunction>& sample,
                             const Universe& u) {
  for (const TvFunction& f : sample) {
    const std::string at = " at " + f.to_string();
    st.expect(core(f).subset_of(support(f)), "core not inside support" + at);
    st.expect(core(lift(UnaryOp::neg, f)) == support(f).complement(), "C(~f) law" + at);
    st.expect(support(lift(UnaryOp::neg, f)) == core(f).complement(), "S(~f) law" + at);
    st.expect(core(lift(UnaryOp::poss, f)) == support(f), "C(poss f) law" + at);
    st.expect(support(lift(UnaryOp::poss, f)) == support(f), "S(poss f) law" + at);
    st.expect(core(lift(UnaryOp::star, f)) == support(f).complement(), "C(f*) law" + at);
    st.expect(support(lift(UnaryOp::star, f)) == support(f).complement(), "S(f*) law" + at);
    st.expect(core(lift(UnaryOp::plus, f)) == core(f).complement(), "C(f+) law" + at);
    st.expect(support(lift(UnaryOp::plus, f)) == core(f).complement(), "S(f+) law" + at);
  }
  // meets/joins of a subfamily
  TvFunction m = meet_family(sample, u);
  TvFunction j = join_family(sample, u);
  Subset cm = Subset::full(u), sm = Subset::full(u), cj = Subset::empty(u), sj = Subset::empty(u);
  for (const TvFunction& f : sample) {
    cm = cm & core(f);
    sm = sm & support(f);
    cj = cj | core(f);
    sj = sj | support(f);
  }
  st.expect(core(m) == cm, "core of meet != intersection of cores");
  st.expect(support(m) == sm, "support of meet != intersection of supports");
  st.expect(core(j) == cj, "core of join != union of cores");
  st.expect(support(j) == sj, "support of join != union of supports");
}

}  // namespace

PropertyStats check_tvfunc_invariants(int exhaustive_max_n, long random_cases, std::uint64_t seed) {
  PropertyStats st;
  for (int n = 1; n <= exhaustive_max_n; ++n) {
    Universe u = default_universe(static_cast<std::size_t>(n));
    std::vector<TvFunction> fs = all_functions(u);
    std::size_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;
    st.expect(fs.size() == expected, "|3^U| != 3^|U| at n=" + std::to_string(n));
    check_core_support_laws(st, fs, u);
    for (const TvFunction& f : fs)
      for (const TvFunction& g : fs)
        for (const TvFunction& h : fs) check_lifted_identities(st, f, g, h);
  }
  std::mt19937_64 gen(seed);
  for (long t = 0; t < random_cases; ++t) {
    Universe u = default_universe(1 + static_cast<std::size_t>(gen() % 6));
    TvFunction f = random_function(u, gen);
    TvFunction g = random_function(u, gen);
    TvFunction h = random_function(u, gen);
    check_lifted_identities(st, f, g, h);
    check_core_support_laws(st, {f, g, h}, u);
  }
  return st;
}

namespace {

void check_pair_iso(PropertyStats& st, const TvFunction& f, const TvFunction& g) {
  const std::string at = " at f=" + f.to_string() + " g=" + g.to_string();
  for (UnaryOp op : all_unary_ops)
    st.expect(phi(lift(op, f)) == pair_apply(op, phi(f)),
              std::string("phi not isomorphic for ") + std::string(op_name(op)) + at);
  for (BinaryOp op : all_binary_ops)
    st.expect(phi(lift(op, f, g)) == pair_apply(op, phi(f), phi(g)),
              std::string("phi not isomorphic for ") + std::string(op_name(op)) + at);
  st.expect(leq(f, g) == pair_leq(phi(f), phi(g)), "phi not order-preserving" + at);
}

// algebra laws asserted directly on pairs
void check_pair_laws(PropertyStats& st, const ApproxPair& p, const ApproxPair& q,
                     const ApproxPair& r) {
  const Universe& u = p.universe();
  const ApproxPair bot(Subset::empty(u), Subset::empty(u));
  const ApproxPair top(Subset::full(u), Subset::full(u));
  const std::string at = " at p=" + p.to_string() + " q=" + q.to_string() + " r=" + r.to_string();

  st.expect(pair_neg(pair_neg(p)) == p, "pair ~~" + at);
  st.expect(pair_neg(pair_meet(p, q)) == pair_join(pair_neg(p), pair_neg(q)),
            "pair De Morgan" + at);
  st.expect(pair_leq(pair_meet(p, pair_neg(p)), pair_join(q, pair_neg(q))), "pair Kleene" + at);
  st.expect(pair_join(pair_neg(p), pair_poss(p)) == top, "pair L1" + at);
  st.expect(pair_meet(pair_neg(p), p) == pair_meet(pair_neg(p), pair_poss(p)), "pair L2" + at);
  st.expect(pair_poss(pair_meet(p, q)) == pair_meet(pair_poss(p), pair_poss(q)), "pair L3" + at);
  if (pair_nec(p) == pair_nec(q) && pair_poss(p) == pair_poss(q))
    st.expect(p == q, "pair Moisil" + at);
  else
    st.pass();
  st.expect(pair_meet(p, pair_heyting(p, q)) == pair_meet(p, q), "pair H1" + at);
  st.expect(pair_meet(p, pair_heyting(q, r)) ==
                pair_meet(p, pair_heyting(pair_meet(p, q), pair_meet(p, r))),
            "pair H2" + at);
  st.expect(pair_meet(r, pair_heyting(pair_meet(p, q), p)) == r, "pair H3" + at);
  st.expect(pair_leq(pair_meet(p, r), q) == pair_leq(r, pair_heyting(p, q)),
            "pair residuation" + at);
  st.expect(pair_nelson(p, q) == pair_heyting(p, pair_join(pair_neg(p), q)),
            "pair Nelson def" + at);
  st.expect(pair_nelson(p, q) == pair_join(pair_poss(pair_neg(p)), q), "pair Nelson formula" + at);
  st.expect(pair_nelson(p, p) == top, "pair N1" + at);
  st.expect(pair_meet(pair_join(pair_neg(p), q), pair_nelson(p, q)) == pair_join(pair_neg(p), q),
            "pair N2" + at);
  st.expect(pair_meet(p, pair_nelson(p, q)) == pair_meet(p, pair_join(pair_neg(p), q)),
            "pair N3" + at);
  st.expect(pair_nelson(p, pair_meet(q, r)) == pair_meet(pair_nelson(p, q), pair_nelson(p, r)),
            "pair N4" + at);
  st.expect(pair_nelson(pair_meet(p, q), r) == pair_nelson(p, pair_nelson(q, r)), "pair N5" + at);
  st.expect(pair_join(p, pair_nelson(p, bot)) == top, "pair N6" + at);
  st.expect(pair_join(pair_star(p), pair_star(pair_star(p))) == top, "pair Stone" + at);
  st.expect(pair_meet(pair_plus(p), pair_plus(pair_plus(p))) == bot, "pair dual Stone" + at);
  if (pair_star(p) == pair_star(q) && pair_plus(p) == pair_plus(q))
    st.expect(p == q, "pair regularity" + at);
  else
    st.pass();
  // componentwise meets and joins
  st.expect(pair_meet(p, q).lower() == (p.lower() & q.lower()) &&
                pair_meet(p, q).upper() == (p.upper() & q.upper()),
            "pair meet not componentwise" + at);
  st.expect(pair_join(p, q).lower() == (p.lower() | q.lower()) &&
                pair_join(p, q).upper() == (p.upper() | q.upper()),
            "pair join not componentwise" + at);
  // Katrinak on pairs
  ApproxPair katrinak = pair_meet(
      pair_join(pair_star(p), pair_star(pair_star(q))),
      pair_join(pair_join(pair_plus(pair_join(p, pair_star(p))), pair_star(p)),
                pair_join(q, pair_star(q))));
  st.expect(pair_heyting(p, q) == katrinak, "pair Katrinak" + at);
}

}  // namespace

PropertyStats check_pairs_invariants(int exhaustive_max_n, long random_cases, std::uint64_t seed) {
  PropertyStats st;
  // bijection and order embedding, exhaustive up to size 3
  for (int n = 1; n <= 3; ++n) {
    Universe u = default_universe(static_cast<std::size_t>(n));
    std::vector<ApproxPair> pairs = all_pairs(u);
    std::vector<TvFunction> fs = all_functions(u);
    st.expect(pairs.size() == fs.size(), "|A(U)| != |3^U| at n=" + std::to_string(n));
    for (const ApproxPair& p : pairs)
      st.expect(phi(phi_inv(p)) == p, "phi(phi_inv) != id at " + p.to_string());
    for (const TvFunction& f : fs)
      st.expect(phi_inv(phi(f)) == f, "phi_inv(phi) != id at " + f.to_string());
    for (const TvFunction& f : fs)
      for (const TvFunction& g : fs)
        st.expect(leq(f, g) == pair_leq(phi(f), phi(g)),
                  "order not preserved at " + f.to_string() + "," + g.to_string());
  }
  for (int n = 1; n <= exhaustive_max_n; ++n) {
    Universe u = default_universe(static_cast<std::size_t>(n));
    std::vector<TvFunction> fs = all_functions(u);
    for (const TvFunction& f : fs)
      for (const TvFunction& g : fs) check_pair_iso(st, f, g);
    std::vector<ApproxPair> pairs = all_pairs(u);
    for (const ApproxPair& p : pairs)
      for (const ApproxPair& q : pairs)
        for (const ApproxPair& r : pairs) check_pair_laws(st, p, q, r);
  }
  std::mt19937_64 gen(seed);
  for (long t = 0; t < random_cases; ++t) {
    Universe u = default_universe(1 + static_cast<std::size_t>(gen() % 6));
    check_pair_iso(st, random_function(u, gen), random_function(u, gen));
    check_pair_laws(st, random_pair(u, gen), random_pair(u, gen), random_pair(u, gen));
  }
  return st;
}

PropertyStats check_relspace_invariants(int exhaustive_max_n, long random_cases,
                                        std::uint64_t seed) {
  PropertyStats st;

  auto check_duality = [&st](const Relation& r) {
    const Universe& u = r.universe();
    const std::uint32_t full = u.full_mask();
    for (std::uint32_t x = 0;; ++x) {
      Subset xs(u, x);
      st.expect(r.lower(xs.complement()).complement() == r.upper(xs),
                "approximation duality fails for " + r.to_string() + " X=" + xs.to_string());
      if (r.predicates().reflexive) {
        st.expect(r.lower(xs).subset_of(xs) && xs.subset_of(r.upper(xs)),
                  "reflexive containment fails for " + r.to_string() + " X=" + xs.to_string());
      }
      if (x == full) break;
    }
  };

  // exhaustive over all relations on 2 elements
  for (const Relation& r : all_relations(default_universe(2))) check_duality(r);

  // exhaustive over quasiorders
  for (int n = 1; n <= exhaustive_max_n; ++n) {
    Universe u = default_universe(static_cast<std::size_t>(n));
    for (const Relation& r : all_quasiorders(u)) {
      check_duality(r);

      Topology t = topology_from_quasiorder(r);
      st.expect(quasiorder_from_topology(t) == r,
                "topology round trip fails for " + r.to_string());
      st.expect(quasiorder_from_topology(dual_topology(t)) == r.inverse(),
                "dual topology is not the inverse quasiorder for " + r.to_string());

      // T = set of lower approximations; dual T = set of upper approximations
      std::vector<std::uint32_t> lowers, uppers;
      const std::uint32_t full = u.full_mask();
      for (std::uint32_t x = 0;; ++x) {
        lowers.push_back(r.lower_mask(x));
        uppers.push_back(r.upper_mask(x));
        if (x == full) break;
      }
      st.expect(Topology(u, lowers) == t, "T != lower approximations for " + r.to_string());
      st.expect(Topology(u, uppers) == dual_topology(t),
                "dual T != upper approximations for " + r.to_string());

      RoughSetSystem rs = rs_enumerate(r);
      st.expect(rs_via_representation(r).pairs == rs.pairs,
                "representation route differs for " + r.to_string());
      st.expect(rs_join_irreducibles(r) == brute_join_irreducibles(rs.pairs),
                "join-irreducible formula differs for " + r.to_string());
      for (const ApproxPair& p : rs.pairs)
        st.expect(rs.contains(pair_neg(p)), "RS not closed under ~ for " + r.to_string());
      st.expect(is_lattice(rs.pairs).is_lattice, "RS not a lattice for " + r.to_string());
      if (n <= 3) {
        st.expect(check_c3_relational(r).holds, "relational C3 fails for " + r.to_string());
        // both components of the alternative pairs live in one topology:
        // interior-closure in the up-set topology, ganter in its dual
        Topology up_sets = topology_from_quasiorder(r);
        Topology down_sets = dual_topology(up_sets);
        for (std::uint32_t x = 0;; ++x) {
          ApproxPair ic = approx_alt(r, Subset(u, x), AltMode::interior_closure);
          st.expect(up_sets.contains(ic.lower().bits()) && up_sets.contains(ic.upper().bits()),
                    "interior-closure pair leaves the up-set topology for " + r.to_string());
          ApproxPair ga = approx_alt(r, Subset(u, x), AltMode::ganter);
          st.expect(down_sets.contains(ga.lower().bits()) && down_sets.contains(ga.upper().bits()),
                    "ganter pair leaves the down-set topology for " + r.to_string());
          if (x == full) break;
        }
      }
    }
    if (n <= 3) {
      for (const Relation& r : all_equivalences(default_universe(static_cast<std::size_t>(n))))
        st.expect(check_c3_relational(r).holds,
                  "relational C3 fails for equivalence " + r.to_string());
    }
  }

  std::mt19937_64 gen(seed);
  for (long t = 0; t < random_cases; ++t) {
    Universe u = default_universe(1 + static_cast<std::size_t>(gen() % 6));
    check_duality(random_relation(u, gen));
  }
  return st;
}

namespace {

FunctionFamily random_closed_family(std::mt19937_64& gen) {
  const std::size_t n = 1 + static_cast<std::size_t>(gen() % 6);
  Universe u = default_universe(n);
  const std::size_t generators = n <= 3 ? 3 : (n <= 5 ? 2 : 1);
  std::vector<TvFunction> seeds;
  const std::size_t count = gen() % (generators + 1);
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(random_function(u, gen));
  return close_polarity(FunctionFamily(u, std::move(seeds)));
}

}  // namespace

PropertyStats check_family_invariants(long random_cases, std::uint64_t seed) {
  PropertyStats st;

  // closure under one extra operation implies closure under all: census on 3^2
  for (const FunctionFamily& family : enumerate_subalgebras(2, SubalgebraKind::polarity_lattice)) {
    OpClosureFlags flags = closure_ops_check(family);
    const bool all_equal = flags.star == flags.plus && flags.plus == flags.poss &&
                           flags.poss == flags.nec && flags.nec == flags.nelson &&
                           flags.nelson == flags.heyting;
    st.expect(all_equal, "closure-transfer fails on a polarity sublattice of 3^2");
    st.expect(flags.neg, "polarity sublattice not closed under ~");
    st.expect(is_luk_subalgebra(family) == flags.poss, "is_luk_subalgebra mismatch");
  }

  std::mt19937_64 gen(seed);
  for (long t = 0; t < random_cases; ++t) {
    FunctionFamily family = random_closed_family(gen);
    const Universe& u = family.universe();
    const std::size_t n = u.size();

    st.expect(is_complete_polarity_sublattice(family).ok, "close_polarity output not closed");
    // closure operator laws
    st.expect(close_polarity(family) == family, "close_polarity not idempotent");
    {
      std::vector<TvFunction> extended = family.members();
      extended.push_back(random_function(u, gen));
      FunctionFamily bigger = close_polarity(FunctionFamily(u, extended));
      bool contains_all = true;
      for (const TvFunction& f : family.members())
        if (!bigger.contains(f)) contains_all = false;
      st.expect(contains_all, "close_polarity not monotone");
    }

    Relation order = quasiorder_of_family(family);
    std::vector<TvFunction> fx, gx;
    for (std::size_t x = 0; x < n; ++x) {
      fx.push_back(support_generator(family, x));
      gx.push_back(core_generator(family, x));
    }

    for (std::size_t x = 0; x < n; ++x) {
      st.expect(leq(fx[x], gx[x]), "f_x not below f^x");
      // generator cores/supports are the least neighbourhoods
      st.expect(core(gx[x]).bits() == order.successors(x), "core of f^x != [x)");
      st.expect(support(fx[x]).bits() == order.predecessors(x), "support of f_x != (x]");
      // f^x equals the meet of its own core class
      std::vector<TvFunction> cls;
      for (const TvFunction& h : family.members())
        if (core(h) == core(gx[x])) cls.push_back(h);
      st.expect(meet_family(cls, u) == gx[x], "f^x != meet of its core class");
      for (std::size_t y = 0; y < n; ++y) {
        const bool rel = order.related(x, y);
        st.expect(rel == leq(fx[x], fx[y]), "x<=y vs f_x<=f_y mismatch");
        st.expect(rel == leq(gx[y], gx[x]), "x<=y vs f^y<=f^x mismatch");
        bool zero_implies = true;
        for (const TvFunction& f : family.members())
          if (f(x) == Trit::zero && f(y) != Trit::zero) zero_implies = false;
        st.expect(rel == zero_implies, "zero-propagation characterisation fails");
      }
    }

    // approximations of the induced order from the family
    const std::uint32_t full = u.full_mask();
    for (std::uint32_t xm = 0;; ++xm) {
      Subset xs(u, xm);
      std::vector<TvFunction> above, below;
      for (const TvFunction& f : family.members()) {
        if (xs.subset_of(support(f))) above.push_back(f);
        if (core(f).subset_of(xs)) below.push_back(f);
      }
      st.expect(order.upper(xs) == support(meet_family(above, u)),
                "upper(X) != S(meet{f : X within S(f)})");
      st.expect(order.lower(xs) == core(join_family(below, u)),
                "lower(X) != C(join{f : C(f) within X})");
      if (xm == full) break;
    }

    // polarity closure makes the core and support topologies dual, and the
    // quasiorder of the family is the one induced by the core topology
    st.expect(dual_topology(cores(family)) == supports(family),
              "cores and supports are not dual topologies");
    st.expect(quasiorder_from_topology(cores(family)) == order,
              "family quasiorder differs from the core-topology quasiorder");

    if (is_luk_subalgebra(family)) {
      st.expect(order.predicates().symmetric, "Lukasiewicz family with asymmetric order");
      Topology ct = cores(family);
      st.expect(ct == supports(family), "Lukasiewicz family with cores != supports");
      st.expect(ct == dual_topology(ct), "Lukasiewicz family topology not complement-closed");
    } else {
      st.pass();
    }

    // join irreducibles match brute force and every member is a join of them
    std::vector<TvFunction> irr = join_irreducibles(family);
    st.expect(irr == brute_join_irreducibles(family.members(), u),
              "join-irreducible formula differs from brute force");
    for (const TvFunction& f : family.members()) {
      std::vector<TvFunction> under;
      for (const TvFunction& j : irr)
        if (leq(j, f)) under.push_back(j);
      st.expect(join_family(under, u) == f, "member is not a join of irreducibles");
    }
  }
  return st;
}

}  // namespace rs3::testing
