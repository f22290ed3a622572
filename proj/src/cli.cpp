#include "trusskit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <optional>
#include <string>

#include "trusskit/baer_kaplansky.hpp"
#include "trusskit/errors.hpp"
#include "trusskit/io.hpp"
#include "trusskit/report.hpp"

namespace trusskit {
namespace {

struct Options {
  std::optional<std::uint64_t> max_enumeration;
  bool json = false;
};

Limits make_limits(const Options& opts) {
  auto limits = Limits::from_env();
  if (opts.max_enumeration) limits.max_enumeration = *opts.max_enumeration;
  return limits;
}

void add_checks(Report& report, const ValidationReport& v, const std::string& prefix) {
  for (const auto& c : v.checks) {
    auto name = prefix + c.axiom + (c.required ? "" : " (info)");
    Json value = c.holds ? Json(c.checked) : Json(c.counterexample);
    report.add(std::move(name), std::move(value), c.holds || !c.required, c.exhaustive);
    if (!c.holds) report.witnesses[prefix + c.axiom] = c.counterexample;
  }
}

Report cmd_validate(const std::string& heap, const std::string& truss, const std::string& module,
                    const Limits& limits) {
  Report report;
  report.command = "validate";
  if (!heap.empty()) {
    report.inputs["heap"] = heap;
    const auto h = load_heap(heap, limits);
    report.inputs["size"] = h.heap.size();
    add_checks(report, validate_heap(h.heap, limits), "");
  } else if (!truss.empty()) {
    report.inputs["truss"] = truss;
    const auto t = load_truss(truss, limits);
    report.inputs["size"] = t.truss.size();
    add_checks(report, validate_truss(t.truss, limits), "");
  } else {
    report.inputs["module"] = module;
    const auto modules = load_modules(module);
    for (const auto& m : modules) {
      const auto prefix = modules.size() > 1 ? m.name.substr(m.name.rfind('/') + 1) + ": " : std::string();
      add_checks(report, validate_ring(m.module.ring()), prefix + "ring ");
      add_checks(report, validate_module(m.module), prefix);
    }
  }
  return report;
}

Json count_or_marker(const std::optional<std::uint64_t>& n) {
  return n ? Json(*n) : Json("not_enumerated");
}

Report cmd_bk(const AbGroup& g, const AbGroup& h, const BKReport& bk) {
  Report report;
  report.command = "bk";
  report.inputs["left"] = format_group_spec(g);
  report.inputs["right"] = format_group_spec(h);
  report.add("heap_iso_count", bk.heap_iso_count);
  report.add("truss_iso_count", count_or_marker(bk.truss_iso_count), true, bk.truss_iso_count.has_value());
  report.add("theta_upsilon_roundtrip", bk.theta_upsilon, bk.theta_upsilon);
  report.add("upsilon_theta_roundtrip", bk.upsilon_theta, bk.upsilon_theta);
  report.add("upsilon_injective", bk.upsilon_injective, bk.upsilon_injective);
  report.add("upsilon_truss_isos", bk.upsilon_valid, bk.upsilon_valid);
  if (bk.brute_force_run) report.add("count_matches_structural", bk.count_matches, bk.count_matches);
  report.add("groups_isomorphic", bk.groups_isomorphic);
  report.add("truss_iso_exists", bk.truss_iso_exists ? Json(*bk.truss_iso_exists) : Json("undecided"), true,
             bk.truss_iso_exists.has_value());
  report.add("consistent", bk.consistent, bk.consistent);
  if (!bk.note.empty()) report.notes.push_back(bk.note);
  return report;
}

Json bk_json(const BKReport& bk) {
  return Json{{"left", group_to_json(bk.left)},
              {"right", group_to_json(bk.right)},
              {"heap_iso_count", bk.heap_iso_count},
              {"truss_iso_count", count_or_marker(bk.truss_iso_count)},
              {"theta_upsilon_roundtrip", bk.roundtrip()},
              {"groups_isomorphic", bk.groups_isomorphic},
              {"consistent", bk.consistent}};
}

Report cmd_inner(const AbGroup& g, const AbGroup& h, const Limits& limits) {
  Report report;
  report.command = "inner";
  report.inputs["left"] = format_group_spec(g);
  report.inputs["right"] = format_group_spec(h);
  const auto eg = build_endo_truss(g, limits);
  const auto eh = build_endo_truss(h, limits);
  const auto morphisms = enumerate_truss_morphisms(eg.to_truss(limits), eh.to_truss(limits), limits);

  struct Tally {
    const char* name;
    std::uint64_t ok = 0;
    std::uint64_t of = 0;
  };
  Tally idem{"epsilon idempotent"}, kills{"epsilon(e) = 0"}, nonempty{"Xi nonempty"}, members{"every xi_b in Xi"},
      coset{"xi(0) in e + Im epsilon"}, subheap{"Xi closed under ternary"}, bij{"vartheta bijective"},
      hom{"vartheta heap morphism"}, card{"|Xi| = |Im epsilon|"}, unique_xi{"constant image: |Xi| = 1"},
      iso_constants{"isos map constants to constants"};
  std::uint64_t constants_kept = 0;
  Json witnesses = Json::array();
  auto tally = [](Tally& t, bool ok) {
    ++t.of;
    t.ok += ok ? 1 : 0;
  };
  for (const auto& phi : morphisms) {
    const auto check = check_inner(eg, eh, phi, limits);
    tally(idem, check.epsilon_idempotent);
    tally(kills, check.epsilon_kills_e);
    tally(nonempty, check.xi_nonempty);
    tally(members, check.xi_b_members);
    tally(coset, check.xi_zero_in_coset);
    tally(subheap, check.xi_subheap);
    tally(bij, check.vartheta_bijective);
    tally(hom, check.vartheta_heap_morphism);
    tally(card, check.cardinality);
    if (check.unique_xi) tally(unique_xi, *check.unique_xi);
    const bool kept = maps_constants_to_constants(eg, eh, phi);
    constants_kept += kept ? 1 : 0;
    if (phi.is_bijective() && eg.size() == eh.size()) tally(iso_constants, kept);

    const auto data = inner_data(eg, eh, phi, limits);
    witnesses.push_back({{"map", truss_morphism_to_json(phi)},
                         {"epsilon", hom_to_json(data.epsilon)},
                         {"e", element_to_json(data.e)},
                         {"xi_count", data.xi_set.size()}});
  }
  report.add("truss morphisms", morphisms.size());
  for (const auto* t : {&idem, &kills, &nonempty, &members, &coset, &subheap, &bij, &hom, &card, &unique_xi,
                        &iso_constants}) {
    report.add(t->name, std::to_string(t->ok) + "/" + std::to_string(t->of), t->ok == t->of);
  }
  report.add("all map constants to constants (info)",
             std::to_string(constants_kept) + "/" + std::to_string(morphisms.size()));
  report.witnesses["morphisms"] = std::move(witnesses);
  return report;
}

std::optional<std::uint64_t> example_prime(const std::string& spec) {
  constexpr std::string_view prefix = "example-non-iso:";
  if (spec.rfind(prefix, 0) != 0) return std::nullopt;
  std::uint64_t p = 0;
  const auto* begin = spec.data() + prefix.size();
  const auto [ptr, ec] = std::from_chars(begin, spec.data() + spec.size(), p);
  if (ec != std::errc() || ptr == begin) return std::nullopt;
  return p;
}

Json equivalence_json(const ModuleEquivalence& eq) { return Json{{"mu", hom_to_json(eq.mu)}, {"rho", eq.rho}}; }

Report cmd_module_bk(const std::string& a, const std::string& b, const Limits& limits) {
  Report report;
  report.command = "module-bk";
  report.inputs["left"] = a;
  if (!b.empty()) report.inputs["right"] = b;

  const auto left = load_modules(a);
  RModule m = left.front().module;
  RModule n = m;
  std::optional<NonIsoReport> example;
  if (!b.empty()) {
    n = load_modules(b).front().module;
  } else if (left.size() > 1) {
    n = left[1].module;
    if (const auto p = example_prime(a)) example = example_non_iso(*p, limits);
  }

  const auto bk = verify_module_bk(m, n, true, limits);
  report.add("E_R(M) carrier", bk.left_carrier);
  report.add("E_S(N) carrier", bk.right_carrier);
  report.add("module equivalence found", bk.equivalence.has_value());
  if (bk.equivalence) {
    report.add("truss iso from equivalence", bk.truss_iso_valid, bk.truss_iso_valid);
    report.add("equivalence round trip", bk.roundtrip, bk.roundtrip);
    report.witnesses["equivalence"] = equivalence_json(*bk.equivalence);
    if (bk.truss_iso) report.witnesses["truss_iso"] = truss_morphism_to_json(*bk.truss_iso);
  }
  report.add("truss_iso_count", count_or_marker(bk.truss_iso_count), true, bk.truss_iso_count.has_value());
  if (bk.brute_force_run) {
    report.add("enumerated isos give equivalences", bk.enumerated_yield_equivalences, bk.enumerated_yield_equivalences);
  }
  report.add("truss_iso_exists", bk.truss_iso_exists ? Json(*bk.truss_iso_exists) : Json("undecided"), true,
             bk.truss_iso_exists.has_value());
  if (bk.module_isomorphic) report.add("module isomorphic over R", *bk.module_isomorphic);
  report.add("consistent", bk.consistent, bk.consistent);
  if (!bk.note.empty()) report.notes.push_back(bk.note);

  if (example) {
    report.add("modules valid", example->modules_valid, example->modules_valid);
    report.add("groups isomorphic", example->groups_isomorphic, example->groups_isomorphic);
    report.add("validated truss iso E_R(M) -> E_R(N)", example->truss_iso_valid, example->truss_iso_valid);
    report.add("|Hom_R(M,N)|", example->hom_mn.size());
    report.add("Hom_R(M,N) has a bijection", example->hom_has_bijection, !example->hom_has_bijection);
    Json homs = Json::array();
    for (const auto& f : example->hom_mn) homs.push_back(hom_to_json(f));
    report.witnesses["hom_R(M,N)"] = std::move(homs);
  }
  return report;
}

int emit(const Report& report, bool json, std::chrono::steady_clock::time_point start, std::ostream& out) {
  if (json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    report.print_table(out, std::chrono::steady_clock::now() - start);
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive verification of heaps, trusses, endomorphism trusses and modules."};
  app.name("trusskit");
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--max-enumeration", opts.max_enumeration, "Bound on objects scanned by one enumeration");
  app.add_flag("--json", opts.json, "Emit the JSON report");

  std::string heap, truss, module;
  auto* validate = app.add_subcommand("validate", "Check heap, truss or module axioms exhaustively");
  auto* heap_opt = validate->add_option("--heap", heap, "from-group:G, endo:G or a JSON file");
  auto* truss_opt = validate->add_option("--truss", truss, "endo:G, zn:n, fp:p, fpxfp:p or a JSON file");
  auto* module_opt = validate->add_option("--module", module, "zn:n, fp:p, fpxfp:p, example-non-iso:p or a JSON file");
  heap_opt->excludes(truss_opt)->excludes(module_opt);
  truss_opt->excludes(module_opt);

  std::string left, right;
  bool brute_force = false;
  auto* bk = app.add_subcommand("bk", "Heap isomorphisms G -> H against truss isomorphisms E(G) -> E(H)");
  bk->add_option("left", left, "Group spec, e.g. 2,2")->required();
  bk->add_option("right", right, "Group spec")->required();
  bk->add_flag("--brute-force", brute_force, "Also search all bijections of the truss carriers");

  std::string inner_left, inner_right;
  auto* inner = app.add_subcommand("inner", "Inner structure of every truss morphism E(G) -> E(H)");
  inner->add_option("left", inner_left, "Group spec")->required();
  inner->add_option("right", inner_right, "Group spec")->required();

  std::string module_a, module_b;
  auto* module_bk = app.add_subcommand("module-bk", "E_R(M) against E_S(N) and module equivalence");
  module_bk->add_option("left", module_a, "Module preset or JSON file")->required();
  module_bk->add_option("right", module_b, "Module preset or JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }
  if (validate->parsed() && heap.empty() && truss.empty() && module.empty()) {
    err << "validate: one of --heap, --truss or --module is required\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const auto limits = make_limits(opts);
    if (validate->parsed()) return emit(cmd_validate(heap, truss, module, limits), opts.json, start, out);
    if (bk->parsed()) {
      const auto g = parse_group_arg(left);
      const auto h = parse_group_arg(right);
      const auto result = verify_bk(g, h, brute_force, limits);
      if (opts.json) {
        out << bk_json(result).dump(2) << "\n";
        return result.consistent ? kExitPass : kExitFail;
      }
      return emit(cmd_bk(g, h, result), false, start, out);
    }
    if (inner->parsed()) {
      return emit(cmd_inner(parse_group_arg(inner_left), parse_group_arg(inner_right), limits), opts.json, start, out);
    }
    return emit(cmd_module_bk(module_a, module_b, limits), opts.json, start, out);
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << " (raise --max-enumeration or TRUSSKIT_MAX_ENUM)\n";
    return kExitBound;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace trusskit
