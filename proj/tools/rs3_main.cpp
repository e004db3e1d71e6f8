// Command-line front end: file ingestion, dispatch, human and JSON output,
// DOT diagrams. Exit codes: 0 success or positive verdict, 1 negative
// verdict under --strict, 2 malformed input or broken precondition,
// 3 internal invariant violation.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rs3/decision.hpp"
#include "rs3/dot.hpp"
#include "rs3/errors.hpp"
#include "rs3/io.hpp"
#include "rs3/roughset.hpp"

namespace {

using rs3::json;

struct CommonOpts {
  std::string input;
  bool as_json = false;
  bool strict = false;
  bool close = false;
  bool closure = false;
  std::string dot_path;
};

void add_json_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--json", o.as_json, "emit a machine-readable mirror of the output");
}
void add_strict_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--strict", o.strict, "exit 1 when a check verdict is negative");
}

// Collects the human-readable lines and the JSON mirror side by side.
struct Report {
  explicit Report(bool as_json) : as_json(as_json) {}
  bool as_json;
  bool negative = false;  // drives --strict
  std::string text;
  json doc = json::object();

  void line(const std::string& s) {
    text += s;
    text += '\n';
  }
  int finish(const CommonOpts& o) const {
    if (as_json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
    return (o.strict && negative) ? 1 : 0;
  }
};

std::string flags_text(const rs3::RelationFlags& f) {
  std::string out;
  auto add = [&](bool v, const char* name) {
    if (v) {
      if (!out.empty()) out += " ";
      out += name;
    }
  };
  add(f.reflexive, "reflexive");
  add(f.transitive, "transitive");
  add(f.symmetric, "symmetric");
  add(f.serial, "serial");
  add(f.quasiorder, "quasiorder");
  add(f.equivalence, "equivalence");
  add(f.tolerance, "tolerance");
  return out.empty() ? "(none)" : out;
}

json flags_json(const rs3::RelationFlags& f) {
  return json{{"reflexive", f.reflexive},   {"transitive", f.transitive},
              {"symmetric", f.symmetric},   {"serial", f.serial},
              {"quasiorder", f.quasiorder}, {"equivalence", f.equivalence},
              {"tolerance", f.tolerance}};
}

json relation_rows_json(const rs3::Relation& r) {
  json rows = json::object();
  for (std::size_t x = 0; x < r.universe().size(); ++x)
    rows[r.universe().name(x)] = rs3::Subset(r.universe(), r.successors(x)).element_names();
  return rows;
}

rs3::Relation load_relation(const CommonOpts& o, Report& report) {
  rs3::Relation r = rs3::load_relation_file(o.input);
  if (o.closure) {
    r = r.reflexive_transitive_closure();
    report.line("note: input replaced by its reflexive-transitive closure");
    report.doc["closure_applied"] = true;
  }
  return r;
}

rs3::FunctionFamily load_family(const CommonOpts& o, Report& report) {
  rs3::FunctionFamily family = rs3::load_family_file(o.input);
  if (o.close) {
    rs3::FunctionFamily closed = rs3::close_polarity(family);
    if (closed.size() != family.size()) {
      report.line("note: input closed under polarity, meet and join (" +
                  std::to_string(family.size()) + " -> " + std::to_string(closed.size()) +
                  " members)");
    }
    report.doc["close_applied"] = true;
    return closed;
  }
  return family;
}

void write_dot(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write DOT file: " + path);
  out << content;
}

std::string pairs_line(const std::vector<rs3::ApproxPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += " ";
    out += p.to_string();
  }
  return out;
}

json pairs_json(const std::vector<rs3::ApproxPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back(rs3::pair_to_json(p));
  return arr;
}

json functions_json(const std::vector<rs3::TvFunction>& fns) {
  json arr = json::array();
  for (const auto& f : fns) arr.push_back(rs3::function_to_json(f));
  return arr;
}

int cmd_approx(const CommonOpts& o, const std::string& set_csv) {
  Report report(o.as_json);
  rs3::Relation r = load_relation(o, report);
  rs3::Subset x = rs3::subset_from_csv(r.universe(), set_csv);
  rs3::RelationFlags flags = r.predicates();
  rs3::Subset lo = r.lower(x);
  rs3::Subset up = r.upper(x);

  report.line("universe: " + rs3::Subset::full(r.universe()).to_string());
  report.line("relation: " + flags_text(flags));
  report.line("X = " + x.to_string());
  report.line("lower(X) = " + lo.to_string());
  report.line("upper(X) = " + up.to_string());
  report.doc["universe"] = r.universe().names();
  report.doc["flags"] = flags_json(flags);
  report.doc["set"] = rs3::subset_to_json(x);
  report.doc["lower"] = rs3::subset_to_json(lo);
  report.doc["upper"] = rs3::subset_to_json(up);
  return report.finish(o);
}

int cmd_rs_enumerate(const CommonOpts& o) {
  Report report(o.as_json);
  rs3::Relation r = load_relation(o, report);
  rs3::RelationFlags flags = r.predicates();
  rs3::RoughSetSystem rs = rs3::rs_enumerate(r);

  report.line("universe: " + rs3::Subset::full(r.universe()).to_string());
  report.line("relation: " + flags_text(flags));
  report.line("rough sets (" + std::to_string(rs.size()) + "):");
  for (const auto& p : rs.pairs) report.line("  " + p.to_string());
  report.doc["universe"] = r.universe().names();
  report.doc["flags"] = flags_json(flags);
  report.doc["pairs"] = pairs_json(rs.pairs);
  report.doc["count"] = rs.size();

  if (flags.reflexive) {
    rs3::C3RelationalResult c3 = rs3::check_c3_relational(r);
    if (c3.holds) {
      report.line("c3-relational: holds");
      report.doc["c3_relational"] = json{{"holds", true}};
    } else {
      report.line("c3-relational: fails  witness: X=" + c3.x->to_string() +
                  ", Y=" + c3.y->to_string());
      report.doc["c3_relational"] = json{{"holds", false},
                                         {"x", rs3::subset_to_json(*c3.x)},
                                         {"y", rs3::subset_to_json(*c3.y)}};
      report.negative = true;
    }
  }
  if (!o.dot_path.empty()) {
    write_dot(o.dot_path, rs3::hasse_dot(rs.pairs, "roughsets"));
    report.line("DOT written to " + o.dot_path);
    report.doc["dot"] = o.dot_path;
  }
  return report.finish(o);
}

int cmd_rs_alt(const CommonOpts& o, const std::string& mode_name) {
  Report report(o.as_json);
  rs3::Relation r = load_relation(o, report);
  rs3::AltMode mode;
  if (mode_name == "interior-closure")
    mode = rs3::AltMode::interior_closure;
  else if (mode_name == "ganter")
    mode = rs3::AltMode::ganter;
  else
    throw std::invalid_argument("rs-alt mode must be interior-closure or ganter");

  std::vector<rs3::ApproxPair> pairs = rs3::rs_alt_enumerate(r, mode);
  report.line("alternative rough sets, mode=" + mode_name + " (" + std::to_string(pairs.size()) +
              "):");
  for (const auto& p : pairs) report.line("  " + p.to_string());
  report.doc["universe"] = r.universe().names();
  report.doc["mode"] = mode_name;
  report.doc["pairs"] = pairs_json(pairs);
  report.doc["count"] = pairs.size();

  rs3::LatticeCheck lattice = rs3::is_lattice(pairs);
  if (lattice.is_lattice) {
    report.line("lattice: yes");
    report.doc["lattice"] = json{{"is_lattice", true}};
  } else {
    report.negative = true;
    const char* side = lattice.join_failure ? "minimal upper bounds" : "maximal lower bounds";
    report.line("lattice: no");
    report.line("  witness: " + lattice.witness_a->to_string() + " and " +
                lattice.witness_b->to_string());
    report.line(std::string("  ") + side + ": " + pairs_line(lattice.bounds));
    report.doc["lattice"] = json{{"is_lattice", false},
                                 {"witness", pairs_json({*lattice.witness_a, *lattice.witness_b})},
                                 {"side", lattice.join_failure ? "join" : "meet"},
                                 {"bounds", pairs_json(lattice.bounds)}};
  }
  if (!o.dot_path.empty()) {
    write_dot(o.dot_path, rs3::hasse_dot(pairs, "altroughsets"));
    report.line("DOT written to " + o.dot_path);
    report.doc["dot"] = o.dot_path;
  }
  return report.finish(o);
}

json verdict_json(const rs3::Verdict& v) {
  json out{{"answer", rs3::to_string(v.answer)}, {"certificate", v.certificate}};
  if (v.relation) out["relation"] = relation_rows_json(*v.relation);
  json fails = json::array();
  for (const auto& f : v.failures) {
    json entry{{"condition", f.condition}, {"detail", f.detail}};
    if (f.element) entry["element"] = *f.element;
    if (!f.functions.empty()) entry["functions"] = functions_json(f.functions);
    fails.push_back(std::move(entry));
  }
  out["failures"] = std::move(fails);
  return out;
}

void report_verdict(Report& report, const std::string& label, const rs3::Verdict& v) {
  report.line("decision (" + label + "): " + rs3::to_string(v.answer));
  if (v.relation) report.line("  relation: " + v.relation->to_string());
  for (const auto& f : v.failures) report.line("  failed " + f.condition + ": " + f.detail);
}

int cmd_family_check(const CommonOpts& o) {
  Report report(o.as_json);
  rs3::FunctionFamily family = load_family(o, report);
  const rs3::Universe& u = family.universe();

  report.line("universe: " + rs3::Subset::full(u).to_string());
  report.line("members: " + std::to_string(family.size()));
  report.doc["universe"] = u.names();
  report.doc["members"] = functions_json(family.members());

  rs3::SublatticeCheck closed = rs3::is_complete_polarity_sublattice(family);
  report.line(closed.ok ? "polarity sublattice: yes (already closed)"
                        : "polarity sublattice: no (" + closed.describe() + ")");
  report.doc["polarity_sublattice"] = json{{"ok", closed.ok}, {"detail", closed.describe()}};

  rs3::OpClosureFlags ops = rs3::closure_ops_check(family);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  report.line(std::string("closure flags: ~ ") + yn(ops.neg) + ", * " + yn(ops.star) + ", + " +
              yn(ops.plus) + ", poss " + yn(ops.poss) + ", nec " + yn(ops.nec) + ", -> " +
              yn(ops.nelson) + ", => " + yn(ops.heyting));
  report.doc["closure_ops"] = json{{"neg", ops.neg},       {"star", ops.star},
                                   {"plus", ops.plus},     {"poss", ops.poss},
                                   {"nec", ops.nec},       {"nelson", ops.nelson},
                                   {"heyting", ops.heyting}};

  if (closed.ok) {
    rs3::C1Result c1 = rs3::check_c1(family);
    if (c1.holds) {
      report.line("C1: holds");
      report.doc["c1"] = json{{"holds", true}};
    } else {
      report.line("C1: fails  witness: x=" + u.name(*c1.x) + ", f=" + c1.f->to_string());
      report.doc["c1"] = json{{"holds", false},
                              {"x", u.name(*c1.x)},
                              {"f", rs3::function_to_json(*c1.f)}};
    }
    rs3::C2Result c2 = rs3::check_c2(family);
    if (c2.holds) {
      report.line("C2: holds  (f_x = meet{f : f(x) >= u})");
      report.doc["c2"] = json{{"holds", true}};
    } else {
      report.line("C2: fails  witness: x=" + u.name(*c2.x) + ", f_x=" + c2.generator->to_string());
      report.doc["c2"] = json{{"holds", false},
                              {"x", u.name(*c2.x)},
                              {"f_x", rs3::function_to_json(*c2.generator)}};
    }
    if (c2.variant_holds) {
      report.line("C2 variant (via meet{f : f(x) = 1}): holds");
      report.doc["c2_variant"] = json{{"holds", true}};
    } else {
      report.line("C2 variant (via meet{f : f(x) = 1}): fails  witness: x=" +
                  u.name(*c2.variant_x) + ", f^x=" + c2.variant_generator->to_string());
      report.doc["c2_variant"] = json{{"holds", false},
                                      {"x", u.name(*c2.variant_x)},
                                      {"f^x", rs3::function_to_json(*c2.variant_generator)}};
    }
    rs3::C3Result c3 = rs3::check_c3(family);
    if (c3.holds) {
      report.line("C3: holds");
      report.doc["c3"] = json{{"holds", true}};
    } else {
      report.line("C3: fails  witness: f=" + c3.f->to_string() + ", g=" + c3.g->to_string());
      report.doc["c3"] = json{{"holds", false},
                              {"f", rs3::function_to_json(*c3.f)},
                              {"g", rs3::function_to_json(*c3.g)}};
    }
  } else {
    report.line("C1/C2/C3: skipped (family is not a complete polarity sublattice; use --close)");
  }

  rs3::Verdict vq = rs3::decide_quasiorder(family);
  report_verdict(report, "quasiorder", vq);
  report.doc["quasiorder"] = verdict_json(vq);
  rs3::Verdict ve = rs3::decide_equivalence(family);
  report_verdict(report, "equivalence", ve);
  report.doc["equivalence"] = verdict_json(ve);

  if (vq.answer == rs3::Answer::no) report.negative = true;
  return report.finish(o);
}

int cmd_family_close(const CommonOpts& o) {
  rs3::FunctionFamily family = rs3::load_family_file(o.input);
  rs3::FunctionFamily closed = rs3::close_polarity(family);
  std::cout << rs3::family_to_json(closed).dump(2) << "\n";
  return 0;
}

int cmd_iso_map(const CommonOpts& o) {
  Report report(o.as_json);
  rs3::FunctionFamily family = load_family(o, report);
  const rs3::Universe& u = family.universe();

  rs3::SublatticeCheck closed = rs3::is_complete_polarity_sublattice(family);
  if (!closed.ok)
    throw std::invalid_argument("iso-map: family is not a complete polarity sublattice (" +
                                closed.describe() + "); re-run with --close");

  std::vector<rs3::ApproxPair> pairs;
  pairs.reserve(family.size());
  for (const auto& f : family.members()) pairs.push_back(rs3::phi(f));
  std::sort(pairs.begin(), pairs.end(),
            [](const rs3::ApproxPair& a, const rs3::ApproxPair& b) { return canonical_less(a, b); });

  std::vector<rs3::TvFunction> irr = rs3::join_irreducibles(family);
  rs3::Topology core_top = rs3::cores(family);
  rs3::Topology supp_top = rs3::supports(family);
  rs3::Relation order = rs3::quasiorder_of_family(family);

  report.line("universe: " + rs3::Subset::full(u).to_string());
  report.line("members: " + std::to_string(family.size()));
  report.line("A(F) (" + std::to_string(pairs.size()) + "): " + pairs_line(pairs));
  std::string irr_line;
  for (const auto& f : irr) {
    if (!irr_line.empty()) irr_line += " ";
    irr_line += f.to_string();
  }
  report.line("join-irreducibles (" + std::to_string(irr.size()) + "): " + irr_line);
  report.line("cores topology: " + core_top.to_string());
  report.line("supports topology: " + supp_top.to_string());
  report.line("quasiorder <=_F:");
  for (std::size_t x = 0; x < u.size(); ++x)
    report.line("  " + u.name(x) + ": " + rs3::mask_to_string(u, order.successors(x)));

  report.doc["universe"] = u.names();
  report.doc["members"] = functions_json(family.members());
  report.doc["pairs"] = pairs_json(pairs);
  report.doc["join_irreducibles"] = functions_json(irr);
  report.doc["cores"] = rs3::topology_to_json(core_top);
  report.doc["supports"] = rs3::topology_to_json(supp_top);
  report.doc["quasiorder"] = relation_rows_json(order);
  return report.finish(o);
}

int cmd_sweep(const CommonOpts& o, int max_size, const std::string& mode_name) {
  Report report(o.as_json);
  rs3::SweepMode mode;
  if (mode_name == "quasiorder")
    mode = rs3::SweepMode::quasiorder;
  else if (mode_name == "equivalence")
    mode = rs3::SweepMode::equivalence;
  else if (mode_name == "both")
    mode = rs3::SweepMode::both;
  else
    throw std::invalid_argument("sweep mode must be quasiorder, equivalence or both");

  rs3::SweepReport sw = rs3::sweep(max_size, mode);
  report.text = sw.to_text();
  report.doc["mode"] = mode_name;
  report.doc["max_size"] = sw.max_n;
  json sizes = json::array();
  for (const auto& s : sw.sizes)
    sizes.push_back(json{{"n", s.n},
                         {"relations", s.relations},
                         {"equivalences", s.equivalences},
                         {"violations", s.violations}});
  report.doc["sizes"] = std::move(sizes);
  report.doc["total_relations"] = sw.total_relations;
  report.doc["total_violations"] = sw.total_violations;
  if (!sw.first_violation.empty()) report.doc["first_violation"] = sw.first_violation;
  report.negative = sw.total_violations > 0;
  return report.finish(o);
}

int cmd_random_sweep(const CommonOpts& o, int size, int trials, std::uint64_t seed) {
  Report report(o.as_json);
  rs3::RandomSweepReport rw = rs3::random_family_sweep(size, trials, seed);
  report.text = rw.to_text();
  report.doc["n"] = rw.n;
  report.doc["trials"] = rw.trials;
  report.doc["seed"] = rw.seed;
  report.doc["yes"] = rw.yes_count;
  report.doc["no"] = rw.no_count;
  report.doc["violations"] = rw.violations;
  if (!rw.first_violation.empty()) report.doc["first_violation"] = rw.first_violation;
  report.negative = rw.violations > 0;
  return report.finish(o);
}

int cmd_subalgebras(const CommonOpts& o, int size, const std::string& kind_name) {
  Report report(o.as_json);
  rs3::SubalgebraKind kind;
  if (kind_name == "polarity-lattice")
    kind = rs3::SubalgebraKind::polarity_lattice;
  else if (kind_name == "lukasiewicz")
    kind = rs3::SubalgebraKind::lukasiewicz;
  else
    throw std::invalid_argument("subalgebras kind must be polarity-lattice or lukasiewicz");

  std::vector<rs3::FunctionFamily> families = rs3::enumerate_subalgebras(size, kind);
  report.line("subalgebras of 3^" + std::to_string(size) + " kind=" + kind_name + ": " +
              std::to_string(families.size()));
  json list = json::array();
  for (std::size_t i = 0; i < families.size(); ++i) {
    std::string members;
    for (const auto& f : families[i].members()) {
      if (!members.empty()) members += " ";
      members += f.to_string();
    }
    report.line("  #" + std::to_string(i + 1) + " (" + std::to_string(families[i].size()) +
                " members): " + members);
    list.push_back(functions_json(families[i].members()));
  }
  report.doc["size"] = size;
  report.doc["kind"] = kind_name;
  report.doc["count"] = families.size();
  report.doc["families"] = std::move(list);
  return report.finish(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-valued function lattices, rough-set approximation and representability checks"};
  app.require_subcommand(1);

  CommonOpts approx_o, rsen_o, rsalt_o, fcheck_o, fclose_o, iso_o, sweep_o, rsweep_o, sub_o;
  std::string approx_set;
  std::string rsalt_mode = "interior-closure";
  std::string sweep_mode = "both";
  std::string sub_kind = "lukasiewicz";
  int sweep_size = 3, rsweep_size = 2, sub_size = 2, rsweep_trials = 100;
  std::uint64_t rsweep_seed = 0;

  CLI::App* approx = app.add_subcommand("approx", "lower and upper approximations of a set");
  approx->add_option("--input", approx_o.input, "relation file")->required();
  approx->add_option("--set", approx_set, "comma-separated element names (empty for the empty set)")
      ->required();
  approx->add_flag("--closure", approx_o.closure, "take the reflexive-transitive closure first");
  add_json_flag(approx, approx_o);

  CLI::App* rsen = app.add_subcommand("rs-enumerate", "all rough sets of a relation");
  rsen->add_option("--input", rsen_o.input, "relation file")->required();
  rsen->add_flag("--closure", rsen_o.closure, "take the reflexive-transitive closure first");
  rsen->add_option("--dot", rsen_o.dot_path, "write the Hasse diagram as DOT");
  add_json_flag(rsen, rsen_o);
  add_strict_flag(rsen, rsen_o);

  CLI::App* rsalt = app.add_subcommand("rs-alt", "alternative approximation operators of a quasiorder");
  rsalt->add_option("--input", rsalt_o.input, "relation file")->required();
  rsalt->add_option("--mode", rsalt_mode, "interior-closure | ganter");
  rsalt->add_flag("--closure", rsalt_o.closure, "take the reflexive-transitive closure first");
  rsalt->add_option("--dot", rsalt_o.dot_path, "write the Hasse diagram as DOT");
  add_json_flag(rsalt, rsalt_o);
  add_strict_flag(rsalt, rsalt_o);

  CLI::App* fcheck = app.add_subcommand("family-check", "closure, C1..C3 and the decision verdicts");
  fcheck->add_option("--input", fcheck_o.input, "family file")->required();
  fcheck->add_flag("--close", fcheck_o.close, "close the family under polarity, meet and join first");
  add_json_flag(fcheck, fcheck_o);
  add_strict_flag(fcheck, fcheck_o);

  CLI::App* fclose = app.add_subcommand("family-close", "least complete polarity sublattice");
  fclose->add_option("--input", fclose_o.input, "family file")->required();

  CLI::App* iso = app.add_subcommand("iso-map", "approximation pairs, irreducibles, topologies, order");
  iso->add_option("--input", iso_o.input, "family file")->required();
  iso->add_flag("--close", iso_o.close, "close the family under polarity, meet and join first");
  add_json_flag(iso, iso_o);

  CLI::App* sw = app.add_subcommand("sweep", "exhaustive verification over all small quasiorders");
  sw->add_option("--max-size", sweep_size, "largest universe size, 1..4")->required();
  sw->add_option("--mode", sweep_mode, "quasiorder | equivalence | both");
  add_json_flag(sw, sweep_o);
  add_strict_flag(sw, sweep_o);

  CLI::App* rsw = app.add_subcommand("random-sweep", "randomized stress test of the decision");
  rsw->add_option("--max-size", rsweep_size, "universe size, 1..3")->required();
  rsw->add_option("--trials", rsweep_trials, "number of sampled families");
  rsw->add_option("--seed", rsweep_seed, "random seed");
  add_json_flag(rsw, rsweep_o);
  add_strict_flag(rsw, rsweep_o);

  CLI::App* sub = app.add_subcommand("subalgebras", "census of subalgebras of 3^U");
  sub->add_option("--max-size", sub_size, "universe size, 1..2")->required();
  sub->add_option("--mode", sub_kind, "polarity-lattice | lukasiewicz");
  add_json_flag(sub, sub_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*approx) return cmd_approx(approx_o, approx_set);
    if (*rsen) return cmd_rs_enumerate(rsen_o);
    if (*rsalt) return cmd_rs_alt(rsalt_o, rsalt_mode);
    if (*fcheck) return cmd_family_check(fcheck_o);
    if (*fclose) return cmd_family_close(fclose_o);
    if (*iso) return cmd_iso_map(iso_o);
    if (*sw) return cmd_sweep(sweep_o, sweep_size, sweep_mode);
    if (*rsw) return cmd_random_sweep(rsweep_o, rsweep_size, rsweep_trials, rsweep_seed);
    if (*sub) return cmd_subalgebras(sub_o, sub_size, sub_kind);
  } catch (const rs3::internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
