#include "rs3/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rs3/errors.hpp"

namespace rs3 {

namespace {

std::vector<TvFunction> sorted_unique(std::vector<TvFunction> fs) {
  std::sort(fs.begin(), fs.end(),
            [](const TvFunction& a, const TvFunction& b) { return canonical_less(a, b); });
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

void require_cpsl(const FunctionFamily& family, const char* what) {
  SublatticeCheck check = is_complete_polarity_sublattice(family);
  if (!check.ok)
    throw std::invalid_argument(std::string(what) +
                                ": family is not a complete polarity sublattice (" +
                                check.describe() + ")");
}

TvFunction core_gen(const FunctionFamily& family, std::size_t x) {
  TvFunction acc = TvFunction::top(family.universe());
  for (const TvFunction& f : family.members())
    if (f(x) == Trit::one) acc = lift(BinaryOp::meet, acc, f);
  return acc;
}

TvFunction supp_gen(const FunctionFamily& family, std::size_t x) {
  TvFunction acc = TvFunction::top(family.universe());
  for (const TvFunction& f : family.members())
    if (f(x) != Trit::zero) acc = lift(BinaryOp::meet, acc, f);
  return acc;
}

Subset singletons_unchecked(const FunctionFamily& family) {
  const Universe& u = family.universe();
  std::uint32_t by_neighbourhood = 0;
  for (std::size_t x = 0; x < u.size(); ++x)
    if (core(core_gen(family, x)).bits() == (std::uint32_t{1} << x))
      by_neighbourhood |= std::uint32_t{1} << x;
  std::uint32_t by_member = 0;
  for (const TvFunction& f : family.members()) {
    Subset c = core(f);
    if (c.count() == 1) by_member |= c.bits();
  }
  if (by_neighbourhood != by_member)
    throw internal_error("singletons: characterisations disagree");
  return Subset(u, by_neighbourhood);
}

}  // namespace

FunctionFamily::FunctionFamily(Universe universe, std::vector<TvFunction> members)
    : universe_(std::move(universe)), members_(sorted_unique(std::move(members))) {
  for (const TvFunction& f : members_)
    require_same_universe(universe_, f.universe(), "family member");
}

bool FunctionFamily::contains(const TvFunction& f) const {
  return std::binary_search(
      members_.begin(), members_.end(), f,
      [](const TvFunction& a, const TvFunction& b) { return canonical_less(a, b); });
}

std::string SublatticeCheck::describe() const {
  switch (violation) {
    case Violation::none:
      return "ok";
    case Violation::missing_bottom:
      return "bottom element missing";
    case Violation::missing_top:
      return "top element missing";
    case Violation::neg:
      return "~" + f->to_string() + " = " + missing->to_string() + " missing";
    case Violation::meet:
      return f->to_string() + " meet " + g->to_string() + " = " + missing->to_string() +
             " missing";
    case Violation::join:
      return f->to_string() + " join " + g->to_string() + " = " + missing->to_string() +
             " missing";
  }
  return "?";
}

FunctionFamily close_polarity(const FunctionFamily& family) {
  const Universe& u = family.universe();
  std::set<std::vector<Trit>> seen;
  std::vector<TvFunction> work;
  auto add = [&](const TvFunction& f) {
    if (seen.insert(f.values()).second) work.push_back(f);
  };
  add(TvFunction::bottom(u));
  add(TvFunction::top(u));
  for (const TvFunction& f : family.members()) add(f);

  // worklist closure; every new element is combined with everything seen
  for (std::size_t i = 0; i < work.size(); ++i) {
    TvFunction f = work[i];
    add(lift(UnaryOp::neg, f));
    for (std::size_t j = 0; j <= i; ++j) {
      add(lift(BinaryOp::meet, f, work[j]));
      add(lift(BinaryOp::join, f, work[j]));
    }
  }
  return FunctionFamily(u, std::move(work));
}

SublatticeCheck is_complete_sublattice(const FunctionFamily& family) {
  SublatticeCheck out;
  const Universe& u = family.universe();
  if (!family.contains(TvFunction::bottom(u))) {
    out.ok = false;
    out.violation = SublatticeCheck::Violation::missing_bottom;
    out.missing = TvFunction::bottom(u);
    return out;
  }
  if (!family.contains(TvFunction::top(u))) {
    out.ok = false;
    out.violation = SublatticeCheck::Violation::missing_top;
    out.missing = TvFunction::top(u);
    return out;
  }
  const auto& fs = family.members();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      TvFunction m = lift(BinaryOp::meet, fs[i], fs[j]);
      if (!family.contains(m)) {
        out.ok = false;
        out.violation = SublatticeCheck::Violation::meet;
        out.f = fs[i];
        out.g = fs[j];
        out.missing = m;
        return out;
      }
      TvFunction jn = lift(BinaryOp::join, fs[i], fs[j]);
      if (!family.contains(jn)) {
        out.ok = false;
        out.violation = SublatticeCheck::Violation::join;
        out.f = fs[i];
        out.g = fs[j];
        out.missing = jn;
        return out;
      }
    }
  }
  return out;
}

SublatticeCheck is_complete_polarity_sublattice(const FunctionFamily& family) {
  SublatticeCheck out = is_complete_sublattice(family);
  if (!out.ok) return out;
  for (const TvFunction& f : family.members()) {
    TvFunction n = lift(UnaryOp::neg, f);
    if (!family.contains(n)) {
      out.ok = false;
      out.violation = SublatticeCheck::Violation::neg;
      out.f = f;
      out.missing = n;
      return out;
    }
  }
  return out;
}

Topology cores(const FunctionFamily& family) {
  SublatticeCheck check = is_complete_sublattice(family);
  if (!check.ok)
    throw std::invalid_argument("cores: family is not a complete sublattice (" +
                                check.describe() + ")");
  std::vector<std::uint32_t> opens;
  for (const TvFunction& f : family.members()) opens.push_back(core(f).bits());
  return Topology(family.universe(), std::move(opens));
}

Topology supports(const FunctionFamily& family) {
  SublatticeCheck check = is_complete_sublattice(family);
  if (!check.ok)
    throw std::invalid_argument("supports: family is not a complete sublattice (" +
                                check.describe() + ")");
  std::vector<std::uint32_t> opens;
  for (const TvFunction& f : family.members()) opens.push_back(support(f).bits());
  return Topology(family.universe(), std::move(opens));
}

Relation quasiorder_of_family(const FunctionFamily& family) {
  require_cpsl(family, "quasiorder_of_family");
  const Universe& u = family.universe();
  std::vector<std::uint32_t> adj(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) {
    std::uint32_t row = u.full_mask();
    for (const TvFunction& f : family.members())
      if (f(x) == Trit::one) row &= core(f).bits();
    adj[x] = row;
  }
  return Relation(u, std::move(adj));
}

TvFunction core_generator(const FunctionFamily& family, std::size_t x) {
  require_cpsl(family, "core_generator");
  return core_gen(family, x);
}

TvFunction support_generator(const FunctionFamily& family, std::size_t x) {
  require_cpsl(family, "support_generator");
  return supp_gen(family, x);
}

std::vector<std::vector<TvFunction>> partition_by_core(const FunctionFamily& family) {
  std::map<std::uint32_t, std::vector<TvFunction>> classes;
  for (const TvFunction& f : family.members()) classes[core(f).bits()].push_back(f);
  std::vector<std::vector<TvFunction>> out;
  out.reserve(classes.size());
  for (auto& [bits, fs] : classes) out.push_back(std::move(fs));
  return out;
}

Subset singletons(const FunctionFamily& family) {
  require_cpsl(family, "singletons");
  return singletons_unchecked(family);
}

C1Result check_c1(const FunctionFamily& family) {
  require_cpsl(family, "check_c1");
  C1Result out;
  Subset singles = singletons_unchecked(family);
  for (std::size_t x = 0; x < family.universe().size(); ++x) {
    if (!singles.contains(x)) continue;
    for (const TvFunction& f : family.members()) {
      if (f(x) == Trit::u) {  // in the support but not the core
        out.holds = false;
        out.x = x;
        out.f = f;
        return out;
      }
    }
  }
  return out;
}

C2Result check_c2(const FunctionFamily& family) {
  require_cpsl(family, "check_c2");
  C2Result out;
  const Universe& u = family.universe();
  for (std::size_t x = 0; x < u.size(); ++x) {
    TvFunction gen = supp_gen(family, x);
    if (core(gen).bits() & ~(std::uint32_t{1} << x)) {
      out.holds = false;
      out.x = x;
      out.generator = gen;
      break;
    }
  }
  for (std::size_t x = 0; x < u.size(); ++x) {
    TvFunction gen = core_gen(family, x);
    if (core(gen).bits() & ~(std::uint32_t{1} << x)) {
      out.variant_holds = false;
      out.variant_x = x;
      out.variant_generator = gen;
      break;
    }
  }
  return out;
}

C3Result check_c3(const FunctionFamily& family) {
  require_cpsl(family, "check_c3");
  C3Result out;
  const Universe& u = family.universe();

  // support of the meet of each core-class
  std::map<std::uint32_t, std::uint32_t> class_support;
  for (const auto& cls : partition_by_core(family)) {
    TvFunction m = meet_family(cls, u);
    class_support[core(cls.front()).bits()] = support(m).bits();
  }

  for (const TvFunction& f : family.members()) {
    const std::uint32_t cf = core(f).bits();
    const std::uint32_t s_theta = class_support.at(cf);
    for (const TvFunction& g : family.members()) {
      const std::uint32_t sg = support(g).bits();
      if ((cf & ~sg) == 0 && (s_theta & ~sg) != 0) {
        out.holds = false;
        out.f = f;
        out.g = g;
        return out;
      }
    }
  }
  return out;
}

std::vector<TvFunction> join_irreducibles(const FunctionFamily& family) {
  require_cpsl(family, "join_irreducibles");
  std::vector<TvFunction> out;
  for (std::size_t x = 0; x < family.universe().size(); ++x) {
    out.push_back(supp_gen(family, x));
    out.push_back(core_gen(family, x));
  }
  return sorted_unique(std::move(out));
}

OpClosureFlags closure_ops_check(const FunctionFamily& family) {
  OpClosureFlags flags;
  const auto& fs = family.members();
  auto closed_unary = [&](UnaryOp op) {
    for (const TvFunction& f : fs)
      if (!family.contains(lift(op, f))) return false;
    return true;
  };
  auto closed_binary = [&](BinaryOp op) {
    for (const TvFunction& f : fs)
      for (const TvFunction& g : fs)
        if (!family.contains(lift(op, f, g))) return false;
    return true;
  };
  flags.neg = closed_unary(UnaryOp::neg);
  flags.star = closed_unary(UnaryOp::star);
  flags.plus = closed_unary(UnaryOp::plus);
  flags.poss = closed_unary(UnaryOp::poss);
  flags.nec = closed_unary(UnaryOp::nec);
  flags.nelson = closed_binary(BinaryOp::nelson);
  flags.heyting = closed_binary(BinaryOp::heyting);
  return flags;
}

bool is_luk_subalgebra(const FunctionFamily& family) {
  if (!is_complete_polarity_sublattice(family).ok) return false;
  for (const TvFunction& f : family.members())
    if (!family.contains(lift(UnaryOp::poss, f))) return false;
  return true;
}

}  // namespace rs3
