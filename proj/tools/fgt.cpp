#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fgt/aut.hpp"
#include "fgt/catalog.hpp"
#include "fgt/error.hpp"
#include "fgt/group_props.hpp"
#include "fgt/matgroups.hpp"
#include "fgt/matrix.hpp"
#include "fgt/modular.hpp"
#include "fgt/probes.hpp"
#include "fgt/spec.hpp"
#include "fgt/verify.hpp"

using namespace fgt;

namespace {

constexpr const char* kGrammar = R"GR(GroupSpec grammar

  spec     := atom | combo | family
  atom     := cyclic(n) | elemab(p,k) | order16(NAME) | dihedral(n)
            | quasidihedral(k) | dicyclic(n) | pres{gens; relators; params}
  combo    := dp(A,B,...) | wr(A) | hol(A) | aut(A) | yprod(A,B,wordA,wordB)
            | sd(P,T,action=M@p) | sd(P,T,action=(M1,M2,...)@p)
            | sd(P,T,preset=NAME) | sd(P,T,preset=NAME(k=v,...))
  family   := fam16p(NAME,p,image,gens) | fam16p2(NAME,p,preset)
  M        := [[a,b],[c,d]]  (rows; vectors act on the left, v -> vM)

  P is cyclic(n) or elemab(p,k); T supplies one matrix per generator.
  Index conventions: dihedral(n) has order 2n, dicyclic(n) order 4n,
  quasidihedral(k) order 2k.
  order16 names: C16 C8xC2 C4xC4 C4xC2xC2 E16 D4xC2 Q2xC2 C4YQ2 G44_22
                 C4sC4 M16 D8 QD8 Q4
  presets: C4_a C4_ab C8 C16full QD8full D8full Q4full Q2 scalar_QD,
           and sign sets such as ab_b (first coordinate inverted by a and b,
           second by b) or ab (rank 1).
  relators: a^8=b^2=a^b*a^-3=1, commutators (a,b), exponents may be
            parameter expressions in braces or parentheses: a^{x^2}.

Examples
  fgt aut "sd(elemab(3,2), order16(C8xC2), preset=ab_b)"
  fgt sylow2 --p 7
  fgt verify table8 --rows x=16
)GR";

struct Globals {
  bool pretty = false;
  std::uint64_t max_order = 100000;
  std::size_t max_elements = 0;
  bool include_long_running = false;
};

using Clock = std::chrono::steady_clock;

Json base_report(const std::vector<std::string>& argv, const Globals& g) {
  return {{"command", argv}, {"toolkit_version", kToolkitVersion}, {"caps", caps_json(g.max_order)}};
}

ElementTable table_for(const GroupSpec& s, const Globals& g) {
  return ElementTable::of(build(s), static_cast<std::size_t>(g.max_order));
}

Json aut_json(const AutGroupResult& r) {
  Json j = {{"order", r.order},
            {"inner_order", r.inner_order},
            {"center_order_of_group", r.center_order},
            {"complete", r.complete},
            {"orbit_sizes", r.orbit_sizes},
            {"reduced_degree", r.reduced.degree()}};
  j["fingerprint"] = r.fingerprint ? fingerprint_json(*r.fingerprint) : Json(nullptr);
  return j;
}

Json solutions_json(const SolutionSet& s) {
  Json sol = Json::array();
  for (const auto& t : s.solutions) sol.push_back(t);
  Json rej = Json::array();
  for (const auto& t : s.rejected) rej.push_back(t);
  return {{"p", s.p}, {"constraint", s.constraint}, {"count", s.solutions.size()},
          {"solutions", sol}, {"rejected", rej}, {"notes", s.notes}};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Finite group toolkit: constructors, automorphism groups and table verification"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Globals g;
  bool compact = false;
  bool grammar_help = false;
  app.add_flag("--json", compact, "compact JSON output");
  app.add_flag("--pretty", g.pretty, "indented JSON output (default)");
  app.add_option("--max-order", g.max_order, "largest group tabulated")->capture_default_str();
  app.add_option("--max-elements", g.max_elements, "element-table cap (overrides FGT_MAX_ELEMENTS)");
  app.add_flag("--include-long-running", g.include_long_running, "run rows and steps marked long-running");
  app.add_flag("--seed-grammar-help", grammar_help, "print the GroupSpec grammar");

  std::string spec_a, spec_b, table_id = "all", form = "offdiag", kind, probe;
  std::int64_t p = 0, k = 16;
  unsigned n = 2;
  std::uint64_t t = 0;
  std::size_t max_steps = 6;
  std::vector<std::string> rows;

  auto* build_cmd = app.add_subcommand("build", "build a group and print its fingerprint");
  build_cmd->add_option("spec", spec_a, "GroupSpec text")->required();
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a group");
  aut_cmd->add_option("spec", spec_a, "GroupSpec text")->required();
  aut_cmd->add_option("--p", p, "prime for catalog identification");
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("spec", spec_a)->required();
  iso_cmd->add_option("other", spec_b)->required();
  auto* tower_cmd = app.add_subcommand("tower", "automorphism tower");
  tower_cmd->add_option("spec", spec_a)->required();
  tower_cmd->add_option("--max-steps", max_steps)->capture_default_str();
  auto* sylow_cmd = app.add_subcommand("sylow2", "Sylow 2-subgroup of GL(n,p)");
  sylow_cmd->add_option("--p", p)->required();
  sylow_cmd->add_option("--n", n)->capture_default_str();
  auto* inv_cmd = app.add_subcommand("inventory", "subgroups of order k by isomorphism type");
  inv_cmd->add_option("spec", spec_a)->required();
  inv_cmd->add_option("--k", k)->capture_default_str();
  auto* solve_cmd = app.add_subcommand("solve", "modular parameter solvers");
  solve_cmd->add_option("kind", kind, "roots | d8 | qd8 | q4pair | c16 | radical | negated-primitive")
      ->required()
      ->check(CLI::IsMember({"roots", "d8", "qd8", "q4pair", "c16", "radical", "negated-primitive"}));
  solve_cmd->add_option("--p", p)->required();
  solve_cmd->add_option("--t", t, "root order for roots");
  solve_cmd->add_option("--n", n, "nesting depth for radical");
  auto* cox_cmd = app.add_subcommand("coxeter234", "<2,3,4> matrix parameter search");
  cox_cmd->add_option("--p", p)->required();
  cox_cmd->add_option("--form", form)->check(CLI::IsMember({"offdiag", "quadruple", "timescq"}))->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "compare computed values with the shipped tables");
  verify_cmd->add_option("table", table_id, "table id or 'all'")->capture_default_str();
  verify_cmd->add_option("--rows", rows, "row keys, e.g. x=16")->delimiter(',');
  verify_cmd->add_option("--p", p, "restrict to one prime");
  auto* probe_cmd = app.add_subcommand("probe-conjecture", "optional experiments on open questions");
  probe_cmd->add_option("name", probe)->required()->check(CLI::IsMember(probe_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (grammar_help) {
    std::cout << kGrammar;
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help() << "\n" << kGrammar;
    return 2;
  }
  if (g.max_elements) setenv("FGT_MAX_ELEMENTS", std::to_string(g.max_elements).c_str(), 1);

  auto t0 = Clock::now();
  Json rep = base_report(args, g);
  int status = 0;
  try {
    if (build_cmd->parsed()) {
      GroupSpec s = parse_spec(spec_a);
      PermutationGroup grp = build(s);
      rep["inputs"] = {{"spec", print_spec(s)}};
      rep["order"] = grp.order();
      rep["predicted_order"] = predicted_order(s);
      rep["degree"] = grp.degree();
      Json gens = Json::array();
      for (std::size_t i = 0; i < grp.generators().size(); ++i)
        gens.push_back({{"name", grp.names()[i]}, {"cycles", grp.generators()[i].to_cycles(true)}});
      rep["generators"] = gens;
      if (grp.order() <= g.max_order)
        rep["fingerprint"] = fingerprint_json(fingerprint(table_for(s, g)));
    } else if (aut_cmd->parsed()) {
      GroupSpec s = parse_spec(spec_a);
      ElementTable tb = table_for(s, g);
      AutOptions o;
      o.fingerprint_cap = static_cast<std::size_t>(g.max_order);
      AutGroupResult r = automorphism_group(tb, {}, o);
      rep["inputs"] = {{"spec", print_spec(s)}};
      rep["group"] = fingerprint_json(fingerprint(tb));
      rep["aut"] = aut_json(r);
      if (p) {
        auto id = identify(r, p, static_cast<std::size_t>(g.max_order));
        rep["identification"] = id ? Json(*id) : Json(nullptr);
      }
    } else if (iso_cmd->parsed()) {
      GroupSpec s1 = parse_spec(spec_a), s2 = parse_spec(spec_b);
      ElementTable t1 = table_for(s1, g), t2 = table_for(s2, g);
      rep["inputs"] = {{"spec", print_spec(s1)}, {"other", print_spec(s2)}};
      rep["fingerprints"] = {fingerprint_json(fingerprint(t1)), fingerprint_json(fingerprint(t2))};
      auto cert = is_isomorphic(t1, t2);
      rep["isomorphic"] = cert.has_value();
      if (cert) {
        Json c = Json::array();
        for (std::size_t i = 0; i < cert->source_gens.size(); ++i)
          c.push_back({{"source", t1.element(cert->source_gens[i]).to_cycles(true)},
                       {"image", t2.element(cert->images[i]).to_cycles(true)}});
        rep["certificate"] = c;
      }
    } else if (tower_cmd->parsed()) {
      GroupSpec s = parse_spec(spec_a);
      Tower tw = aut_tower(build(s), max_steps, g.max_order);
      rep["inputs"] = {{"spec", print_spec(s)}, {"max_steps", max_steps}, {"max_order", g.max_order}};
      Json steps = Json::array();
      for (const auto& st : tw.steps)
        steps.push_back({{"fingerprint", fingerprint_json(st.fingerprint)}, {"complete", st.complete},
                         {"seconds", st.seconds}});
      rep["steps"] = steps;
      rep["terminated"] = tw.terminated;
      rep["truncated"] = tw.truncated;
      rep["stop_reason"] = tw.stop_reason;
    } else if (sylow_cmd->parsed()) {
      PermutationGroup grp = matrix_group_to_perm(n == 2 ? sylow2_gl2(p) : sylow2_gln(n, p));
      rep["inputs"] = {{"p", p}, {"n", n}};
      rep["order"] = grp.order();
      rep["two_part_of_gl_order"] = two_part(gl_order(n, static_cast<std::uint64_t>(p)));
      rep["label"] = group_label(grp);
      Json cs = Json::object();
      for (const auto& [o, txt] : class_order_structure(grp)) cs[std::to_string(o)] = txt;
      rep["class_order_structure"] = cs;
      if (grp.order() <= 256) {
        for (std::size_t kk : {16u, 32u}) {
          Json inv = Json::object();
          for (const auto& [lab, cnt] : subgroup_inventory(grp, kk)) inv[lab] = cnt;
          rep["subgroups_of_order_" + std::to_string(kk)] = inv;
        }
      }
    } else if (inv_cmd->parsed()) {
      GroupSpec s = parse_spec(spec_a);
      rep["inputs"] = {{"spec", print_spec(s)}, {"k", k}};
      Json inv = Json::object();
      for (const auto& [lab, cnt] : subgroup_inventory(build(s), static_cast<std::size_t>(k))) inv[lab] = cnt;
      rep["subgroups"] = inv;
    } else if (solve_cmd->parsed()) {
      SolutionSet s;
      if (kind == "roots") {
        if (!t) throw InvalidArgument("roots needs --t");
        s = roots_of_unity(p, t);
      } else if (kind == "d8") {
        s = action_params(p, ActionKind::D8);
      } else if (kind == "qd8") {
        s = action_params(p, ActionKind::QD8);
      } else if (kind == "q4pair") {
        s = action_params(p, ActionKind::Q4Pair);
      } else if (kind == "c16") {
        s = c16_action_params(p);
      } else if (kind == "radical") {
        s = iterated_radical_roots(p, n);
      } else {
        s = negated_primitive_roots(p);
      }
      rep["inputs"] = {{"kind", kind}, {"p", p}};
      rep["result"] = solutions_json(s);
    } else if (cox_cmd->parsed()) {
      CoxeterForm f = form == "offdiag"    ? CoxeterForm::OffdiagPair
                       : form == "quadruple" ? CoxeterForm::GeneralQuadruple
                                             : CoxeterForm::TimesCqPair;
      rep["inputs"] = {{"p", p}, {"form", form}};
      rep["result"] = solutions_json(coxeter234_search(p, f));
    } else if (verify_cmd->parsed()) {
      VerifyOptions vo;
      vo.rows = rows;
      if (p) vo.p = p;
      vo.include_long_running = g.include_long_running;
      vo.max_order = g.max_order;
      rep["inputs"] = {{"table", table_id}, {"rows", rows}, {"p", p ? Json(p) : Json(nullptr)}};
      std::vector<std::string> ids = table_id == "all" ? table_ids() : std::vector<std::string>{table_id};
      Json reports = Json::array();
      bool pass = true;
      for (const auto& id : ids) {
        Report r = verify_table(id, vo);
        pass = pass && r.pass;
        reports.push_back(r.json);
      }
      rep["reports"] = reports;
      rep["pass"] = pass;
      status = pass ? 0 : 1;
    } else if (probe_cmd->parsed()) {
      rep["inputs"] = {{"probe", probe}};
      rep["result"] = run_probe(probe, g.include_long_running, g.max_order);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    rep["error"] = e.what();
    status = 1;
  }
  rep["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << (compact && !g.pretty ? rep.dump() : rep.dump(2)) << "\n";
  return status;
}
