// Python bindings for the main operations. Universes, subsets, functions,
// pairs, relations, topologies and families are exposed as value types;
// the decision procedures and sweeps return the same structured results
// the CLI renders.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rs3/decision.hpp"
#include "rs3/dot.hpp"
#include "rs3/errors.hpp"
#include "rs3/io.hpp"
#include "rs3/roughset.hpp"
#include "rs3/topology.hpp"

namespace py = pybind11;
using namespace rs3;

namespace {

TvFunction make_function(const Universe& u, const std::vector<std::string>& literals) {
  if (literals.size() != u.size())
    throw std::invalid_argument("need exactly one trit literal per universe element");
  std::vector<Trit> vals;
  vals.reserve(literals.size());
  for (const auto& lit : literals) {
    auto t = trit_from_string(lit);
    if (!t) throw std::invalid_argument("invalid trit literal: \"" + lit + "\"");
    vals.push_back(*t);
  }
  return TvFunction(u, std::move(vals));
}

Relation make_relation(const Universe& u,
                       const std::map<std::string, std::vector<std::string>>& rows) {
  std::vector<std::uint32_t> adj(u.size(), 0);
  for (const auto& [name, succ] : rows) {
    auto x = u.index_of(name);
    if (!x) throw std::invalid_argument("relation row for unknown element: " + name);
    adj[*x] = Subset::of_names(u, succ).bits();
  }
  return Relation(u, std::move(adj));
}

std::vector<std::string> trit_strings(const TvFunction& f) {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (Trit t : f.values()) out.push_back(trit_string(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_rs3, m) {
  m.doc() = "three-valued function lattices, rough-set approximation and representability checks";

  py::register_exception<internal_error>(m, "InternalInvariantError");

  py::enum_<Trit>(m, "Trit")
      .value("zero", Trit::zero)
      .value("u", Trit::u)
      .value("one", Trit::one);

  m.def("trit_meet", [](Trit a, Trit b) { return meet(a, b); });
  m.def("trit_join", [](Trit a, Trit b) { return join(a, b); });
  m.def("trit_neg", [](Trit a) { return neg(a); });
  m.def("trit_poss", [](Trit a) { return poss(a); });
  m.def("trit_nec", [](Trit a) { return nec(a); });
  m.def("trit_star", [](Trit a) { return star(a); });
  m.def("trit_plus", [](Trit a) { return plus(a); });
  m.def("trit_heyting", [](Trit a, Trit b) { return heyting(a, b); });
  m.def("trit_nelson", [](Trit a, Trit b) { return nelson(a, b); });

  py::class_<Universe>(m, "Universe")
      .def(py::init<std::vector<std::string>>())
      .def("__len__", &Universe::size)
      .def("names", &Universe::names)
      .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
      .def("__repr__", [](const Universe& u) {
        std::string out = "Universe([";
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (i) out += ", ";
          out += "'" + u.name(i) + "'";
        }
        return out + "])";
      });

  py::class_<Subset>(m, "Subset")
      .def(py::init([](const Universe& u, const std::vector<std::string>& names) {
        return Subset::of_names(u, names);
      }))
      .def("names", &Subset::element_names)
      .def("bits", &Subset::bits)
      .def("complement", &Subset::complement)
      .def("__eq__", [](const Subset& a, const Subset& b) { return a == b; })
      .def("__len__", &Subset::count)
      .def("__repr__", &Subset::to_string);

  py::class_<TvFunction>(m, "TvFunction")
      .def(py::init(&make_function))
      .def("values", &trit_strings)
      .def("core", [](const TvFunction& f) { return core(f); })
      .def("support", [](const TvFunction& f) { return support(f); })
      .def("__eq__", [](const TvFunction& a, const TvFunction& b) { return a == b; })
      .def("__le__", [](const TvFunction& a, const TvFunction& b) { return leq(a, b); })
      .def("__repr__", &TvFunction::to_string);

  py::class_<ApproxPair>(m, "ApproxPair")
      .def(py::init<Subset, Subset>())
      .def_property_readonly("lower", &ApproxPair::lower)
      .def_property_readonly("upper", &ApproxPair::upper)
      .def("__eq__", [](const ApproxPair& a, const ApproxPair& b) { return a == b; })
      .def("__repr__", &ApproxPair::to_string);

  m.def("phi", &phi);
  m.def("phi_inv", &phi_inv);

  m.def("lift_neg", [](const TvFunction& f) { return lift(UnaryOp::neg, f); });
  m.def("lift_poss", [](const TvFunction& f) { return lift(UnaryOp::poss, f); });
  m.def("lift_nec", [](const TvFunction& f) { return lift(UnaryOp::nec, f); });
  m.def("lift_star", [](const TvFunction& f) { return lift(UnaryOp::star, f); });
  m.def("lift_plus", [](const TvFunction& f) { return lift(UnaryOp::plus, f); });
  m.def("lift_meet", [](const TvFunction& f, const TvFunction& g) { return lift(BinaryOp::meet, f, g); });
  m.def("lift_join", [](const TvFunction& f, const TvFunction& g) { return lift(BinaryOp::join, f, g); });
  m.def("lift_heyting",
        [](const TvFunction& f, const TvFunction& g) { return lift(BinaryOp::heyting, f, g); });
  m.def("lift_nelson",
        [](const TvFunction& f, const TvFunction& g) { return lift(BinaryOp::nelson, f, g); });

  py::class_<RelationFlags>(m, "RelationFlags")
      .def_readonly("reflexive", &RelationFlags::reflexive)
      .def_readonly("transitive", &RelationFlags::transitive)
      .def_readonly("symmetric", &RelationFlags::symmetric)
      .def_readonly("serial", &RelationFlags::serial)
      .def_readonly("quasiorder", &RelationFlags::quasiorder)
      .def_readonly("equivalence", &RelationFlags::equivalence)
      .def_readonly("tolerance", &RelationFlags::tolerance);

  py::class_<Relation>(m, "Relation")
      .def(py::init(&make_relation))
      .def_static("identity", &Relation::identity)
      .def_static("universal", &Relation::universal)
      .def_property_readonly("universe", &Relation::universe)
      .def("successors",
           [](const Relation& r, const std::string& name) {
             auto x = r.universe().index_of(name);
             if (!x) throw std::invalid_argument("unknown element: " + name);
             return Subset(r.universe(), r.successors(*x));
           })
      .def("predicates", &Relation::predicates)
      .def("inverse", &Relation::inverse)
      .def("reflexive_transitive_closure", &Relation::reflexive_transitive_closure)
      .def("lower", &Relation::lower)
      .def("upper", &Relation::upper)
      .def("__eq__", [](const Relation& a, const Relation& b) { return a == b; })
      .def("__repr__", [](const Relation& r) { return "Relation(" + r.to_string() + ")"; });

  py::class_<Topology>(m, "Topology")
      .def("open_sets", &Topology::open_sets)
      .def("__len__", &Topology::size)
      .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; })
      .def("__repr__", &Topology::to_string);

  m.def("topology_from_quasiorder", &topology_from_quasiorder);
  m.def("quasiorder_from_topology", &quasiorder_from_topology);
  m.def("dual_topology", &dual_topology);

  py::class_<RoughSetSystem>(m, "RoughSetSystem")
      .def_readonly("pairs", &RoughSetSystem::pairs)
      .def("__len__", &RoughSetSystem::size);

  m.def("rs_enumerate", &rs_enumerate);
  m.def("rs_via_representation", &rs_via_representation);
  m.def("rs_join_irreducibles", &rs_join_irreducibles);

  py::enum_<AltMode>(m, "AltMode")
      .value("interior_closure", AltMode::interior_closure)
      .value("ganter", AltMode::ganter);
  m.def("approx_alt", &approx_alt);
  m.def("rs_alt_enumerate", &rs_alt_enumerate);

  py::class_<LatticeCheck>(m, "LatticeCheck")
      .def_readonly("is_lattice", &LatticeCheck::is_lattice)
      .def_readonly("witness_a", &LatticeCheck::witness_a)
      .def_readonly("witness_b", &LatticeCheck::witness_b)
      .def_readonly("join_failure", &LatticeCheck::join_failure)
      .def_readonly("bounds", &LatticeCheck::bounds);
  m.def("is_lattice", &is_lattice);

  py::class_<C3RelationalResult>(m, "C3RelationalResult")
      .def_readonly("holds", &C3RelationalResult::holds)
      .def_readonly("x", &C3RelationalResult::x)
      .def_readonly("y", &C3RelationalResult::y);
  m.def("check_c3_relational", &check_c3_relational);

  py::class_<FunctionFamily>(m, "FunctionFamily")
      .def(py::init<Universe, std::vector<TvFunction>>())
      .def_property_readonly("universe", &FunctionFamily::universe)
      .def("members", &FunctionFamily::members)
      .def("__contains__", &FunctionFamily::contains)
      .def("__len__", &FunctionFamily::size)
      .def("__eq__", [](const FunctionFamily& a, const FunctionFamily& b) { return a == b; })
      .def("__repr__", [](const FunctionFamily& f) {
        return "FunctionFamily(" + std::to_string(f.size()) + " members)";
      });

  py::class_<SublatticeCheck>(m, "SublatticeCheck")
      .def_readonly("ok", &SublatticeCheck::ok)
      .def("describe", &SublatticeCheck::describe);

  m.def("close_polarity", &close_polarity);
  m.def("is_complete_sublattice", &is_complete_sublattice);
  m.def("is_complete_polarity_sublattice", &is_complete_polarity_sublattice);
  m.def("cores", &cores);
  m.def("supports", &supports);
  m.def("quasiorder_of_family", &quasiorder_of_family);
  m.def("core_generator", &core_generator);
  m.def("support_generator", &support_generator);
  m.def("partition_by_core", &partition_by_core);
  m.def("singletons", &singletons);

  py::class_<C1Result>(m, "C1Result")
      .def_readonly("holds", &C1Result::holds)
      .def_readonly("x", &C1Result::x)
      .def_readonly("f", &C1Result::f);
  py::class_<C2Result>(m, "C2Result")
      .def_readonly("holds", &C2Result::holds)
      .def_readonly("x", &C2Result::x)
      .def_readonly("generator", &C2Result::generator)
      .def_readonly("variant_holds", &C2Result::variant_holds)
      .def_readonly("variant_x", &C2Result::variant_x)
      .def_readonly("variant_generator", &C2Result::variant_generator);
  py::class_<C3Result>(m, "C3Result")
      .def_readonly("holds", &C3Result::holds)
      .def_readonly("f", &C3Result::f)
      .def_readonly("g", &C3Result::g);
  m.def("check_c1", &check_c1);
  m.def("check_c2", &check_c2);
  m.def("check_c3", &check_c3);
  m.def("join_irreducibles", &join_irreducibles);

  py::class_<OpClosureFlags>(m, "OpClosureFlags")
      .def_readonly("neg", &OpClosureFlags::neg)
      .def_readonly("star", &OpClosureFlags::star)
      .def_readonly("plus", &OpClosureFlags::plus)
      .def_readonly("poss", &OpClosureFlags::poss)
      .def_readonly("nec", &OpClosureFlags::nec)
      .def_readonly("nelson", &OpClosureFlags::nelson)
      .def_readonly("heyting", &OpClosureFlags::heyting);
  m.def("closure_ops_check", &closure_ops_check);
  m.def("is_luk_subalgebra", &is_luk_subalgebra);

  py::enum_<Answer>(m, "Answer")
      .value("yes_quasiorder", Answer::yes_quasiorder)
      .value("yes_equivalence", Answer::yes_equivalence)
      .value("no", Answer::no);

  py::class_<ConditionFailure>(m, "ConditionFailure")
      .def_readonly("condition", &ConditionFailure::condition)
      .def_readonly("detail", &ConditionFailure::detail)
      .def_readonly("element", &ConditionFailure::element)
      .def_readonly("functions", &ConditionFailure::functions);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("answer", &Verdict::answer)
      .def_readonly("relation", &Verdict::relation)
      .def_readonly("failures", &Verdict::failures)
      .def_readonly("certificate", &Verdict::certificate)
      .def("__repr__", [](const Verdict& v) { return "Verdict(" + to_string(v.answer) + ")"; });

  m.def("decide_quasiorder", &decide_quasiorder);
  m.def("decide_equivalence", &decide_equivalence);
  m.def("rs_to_family", &rs_to_family);

  py::enum_<SweepMode>(m, "SweepMode")
      .value("quasiorder", SweepMode::quasiorder)
      .value("equivalence", SweepMode::equivalence)
      .value("both", SweepMode::both);

  py::class_<SweepSizeStats>(m, "SweepSizeStats")
      .def_readonly("n", &SweepSizeStats::n)
      .def_readonly("relations", &SweepSizeStats::relations)
      .def_readonly("equivalences", &SweepSizeStats::equivalences)
      .def_readonly("violations", &SweepSizeStats::violations);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("sizes", &SweepReport::sizes)
      .def_readonly("total_relations", &SweepReport::total_relations)
      .def_readonly("total_violations", &SweepReport::total_violations)
      .def_readonly("first_violation", &SweepReport::first_violation)
      .def("__repr__", &SweepReport::to_text);
  m.def("sweep", &sweep);

  py::class_<RandomSweepReport>(m, "RandomSweepReport")
      .def_readonly("n", &RandomSweepReport::n)
      .def_readonly("trials", &RandomSweepReport::trials)
      .def_readonly("seed", &RandomSweepReport::seed)
      .def_readonly("yes_count", &RandomSweepReport::yes_count)
      .def_readonly("no_count", &RandomSweepReport::no_count)
      .def_readonly("violations", &RandomSweepReport::violations)
      .def_readonly("first_violation", &RandomSweepReport::first_violation)
      .def("__repr__", &RandomSweepReport::to_text);
  m.def("random_family_sweep", &random_family_sweep);

  py::enum_<SubalgebraKind>(m, "SubalgebraKind")
      .value("polarity_lattice", SubalgebraKind::polarity_lattice)
      .value("lukasiewicz", SubalgebraKind::lukasiewicz);
  m.def("enumerate_subalgebras", &enumerate_subalgebras);

  m.def("hasse_dot",
        [](const std::vector<ApproxPair>& pairs, const std::string& name) {
          return hasse_dot(pairs, name);
        },
        py::arg("pairs"), py::arg("name") = "hasse");

  m.def("load_relation_file", &load_relation_file);
  m.def("load_family_file", &load_family_file);
}
