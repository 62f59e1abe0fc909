// mk: command-line front end.
//
//   mk eval  [--universe-rank k] [--env name=JSON]... EXPR
//   mk check PREDICATE --args JSON
//   mk lemma ID --instance JSON [--choice P]
//   mk demo  CONSTRUCTION --input JSON [--choice P] [--guard k]
//   mk suite NAME|all [--n k] [--atoms k] [--choice P] [--json FILE] [--no-timing]
//   mk enumerate KIND --n k
//
// Exit codes: 0 success / true / all pass, 1 false / failures, 2 usage or error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mk/ac.hpp"
#include "mk/choice.hpp"
#include "mk/classifier.hpp"
#include "mk/error.hpp"
#include "mk/harness/enumerate.hpp"
#include "mk/harness/suites.hpp"
#include "mk/hfs.hpp"
#include "mk/json_io.hpp"
#include "mk/lemmas.hpp"
#include "mk/maximal.hpp"
#include "mk/order.hpp"
#include "mk/tukey.hpp"
#include "mk/wellorder.hpp"
#include "mk/zorn.hpp"

namespace {

using nlohmann::json;
using namespace mk;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

HfSet need(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing argument '") + key + "'");
  return from_json(args.at(key));
}

BinRel need_rel(const json& args, const char* key) { return BinRel(need(args, key)); }

json verdict_json(const Verdict& v) {
  json w = json::array();
  for (const auto& s : v.witness) w.push_back(to_json(s));
  json j = {{"result", v.holds}};
  if (!v.holds) {
    j["clause"] = v.clause;
    j["witness"] = w;
    std::vector<std::string> text;
    for (const auto& s : v.witness) text.push_back(to_text(s));
    j["witness_text"] = text;
  }
  return j;
}

Extreme extreme_kind(const json& args) {
  std::string k = args.value("kind", "max");
  if (k == "max") return Extreme::Max;
  if (k == "min") return Extreme::Min;
  throw Error(ErrorCode::ParseError, "kind must be max or min");
}

Verdict run_check(const std::string& pred, const json& a) {
  if (pred == "rrelation") return need_rel(a, "le").holds(need(a, "x"), need(a, "y")) ? Verdict::pass() : Verdict::fail("⟨x,y⟩ ∈ le");
  if (pred == "is_choice_function") return is_choice_function(need(a, "eps"), need(a, "X"));
  if (pred == "extreme_member") return extreme_member(extreme_kind(a), need(a, "F"), Family(need(a, "f")));
  if (pred == "is_nest") return is_nest(Family(need(a, "n")));
  if (pred == "is_finite_character")
    return is_finite_character(Family(need(a, "f")), a.contains("u") ? need(a, "u") : HfSet());
  if (pred == "finite_char_properties") return finite_char_properties(Family(need(a, "f")));
  if (pred == "is_partial_order") return is_partial_order(need_rel(a, "le"), need(a, "X"));
  if (pred == "is_bound") {
    std::string k = a.value("kind", "upper");
    if (k != "upper" && k != "lower") throw Error(ErrorCode::ParseError, "kind must be upper or lower");
    return is_bound(k == "upper" ? BoundKind::Upper : BoundKind::Lower, need(a, "x"), need(a, "A"), need(a, "X"),
                    need_rel(a, "le"));
  }
  if (pred == "extreme_element") return extreme_element(extreme_kind(a), need(a, "x"), need(a, "X"), need_rel(a, "le"));
  if (pred == "is_total_order") return is_total_order(need_rel(a, "le"), need(a, "X"));
  if (pred == "is_chain") return is_chain(need(a, "A"), need(a, "X"), need_rel(a, "le"));
  if (pred == "is_well_order") return is_well_order(need_rel(a, "le"), need(a, "X"));
  if (pred == "is_initial_segment") return is_initial_segment(need(a, "Y"), need(a, "X"), need_rel(a, "le"));
  if (pred == "is_t_subclass") {
    Family f(need(a, "f"));
    return is_t_subclass(Family(need(a, "g")), f, ChoiceFn(f.atoms(), ChoicePolicy::parse(a.value("choice", "canonical"))));
  }
  throw Error(ErrorCode::ParseError, "unknown predicate '" + pred + "'");
}

json set_list(const std::vector<HfSet>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json run_demo(const std::string& what, const json& in, ChoicePolicy policy, std::optional<std::size_t> guard) {
  json out = {{"construction", what}, {"choice", policy.to_string()}};
  if (what == "tukey") {
    Family f(need(in, "f"));
    HfSet m = tukey_maximal_member(f, policy);
    auto st = tukey_state(f, ChoiceFn(f.atoms(), policy));
    out["result"] = to_json(m);
    out["f0"] = to_json(st.f0.sets());
    out["trace"] = set_list(st.trace);
    out["verified"] = {{"maximal_member", extreme_member(Extreme::Max, m, f).holds},
                       {"chi_fixed_point", chi(m, f, st.c) == m}};
  } else if (what == "hausdorff") {
    HfSet a = need(in, "A");
    HfSet n = in.contains("N") ? need(in, "N") : HfSet();
    HfSet u = hausdorff_extend_nest(a, n, policy);
    out["result"] = to_json(u);
    out["verified"] = {{"nest", is_nest(Family(u)).holds}, {"contains_N", subclass(n, u)}, {"inside_A", subclass(u, a)}};
  } else if (what == "maxprinciple") {
    HfSet a = need(in, "A");
    HfSet m = maximal_principle_member(a, policy);
    out["result"] = to_json(m);
    out["verified"] = {{"maximal_member", extreme_member(Extreme::Max, m, Family(a)).holds}};
  } else if (what == "zermelo") {
    HfSet a = need(in, "A");
    HfSet c = zermelo_transversal(a, policy, guard.value_or(kTransversalGuard));
    bool singletons = true;
    for (const auto& d : a) singletons &= set_intersection(d, c).size() == 1;
    out["result"] = to_json(c);
    out["verified"] = {{"singleton_intersections", singletons}};
  } else if (what == "zorn") {
    HfSet x = need(in, "X");
    BinRel le = need_rel(in, "le");
    ZornResult z = zorn_maximal_element(x, le, policy);
    out["vacuous"] = z.vacuous;
    if (!z.vacuous) {
      out["result"] = to_json(z.element);
      out["verified"] = {{"maximal_element", extreme_element(Extreme::Max, z.element, x, le).holds}};
    }
  } else if (what == "wellorder") {
    HfSet x = need(in, "X");
    WellOrderOptions opt{policy, guard.value_or(kWellOrderGuard), in.value("fallback", false)};
    BinRel le = wellorder_construct(x, opt);
    out["result"] = to_json(le.pairs());
    out["verified"] = {{"well_order", is_well_order(le, x).holds}};
  } else if (what == "ac-from-zermelo" || what == "ac-from-wo") {
    HfSet x = need(in, "X");
    std::optional<ChoiceFn> eps;
    if (what == "ac-from-zermelo") {
      eps = choice_from_zermelo(x, policy, guard.value_or(kChoiceFromZermeloGuard));
    } else {
      BinRel le = in.contains("le") ? need_rel(in, "le")
                                    : wellorder_construct(x, {policy, guard.value_or(kWellOrderGuard), false});
      eps = choice_from_wellorder(x, le);
    }
    HfSet t = eps->table();
    out["result"] = to_json(t);
    out["verified"] = {{"choice_function", is_choice_function(t, x).holds}, {"domain_size", domain(t).size()}};
  } else {
    throw Error(ErrorCode::ParseError, "unknown construction '" + what + "'");
  }
  if (out.contains("result")) out["result_text"] = to_text(from_json(out["result"]));
  return out;
}

bool all_verified(const json& out) {
  if (!out.contains("verified")) return true;
  for (const auto& [k, v] : out["verified"].items())
    if (v.is_boolean() && !v.get<bool>()) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model lab for the equivalents of the axiom of choice"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a term or formula over V(k)");
  std::size_t rank = 4;
  std::vector<std::string> env_specs;
  std::string expr;
  eval->add_option("--universe-rank", rank, "Quantifiers and comprehensions range over V(k)")->check(CLI::Range(0, 5));
  eval->add_option("--env", env_specs, "Binding name=JSON");
  eval->add_option("expr", expr, "Term or formula")->required();

  // check
  auto* check = app.add_subcommand("check", "Evaluate an order-theory predicate");
  std::string predicate, args_text = "{}";
  check->add_option("predicate", predicate)->required();
  check->add_option("--args", args_text, "JSON object of named arguments");

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Check one lemma instance");
  std::string lemma_id, instance_text = "{}";
  lemma->add_option("id", lemma_id)->required();
  lemma->add_option("--instance", instance_text, "JSON object");

  // demo
  auto* demo = app.add_subcommand("demo", "Run one construction and verify its postconditions");
  std::string construction, input_text = "{}";
  demo->add_option("construction", construction)
      ->required()
      ->check(CLI::IsMember(
          {"tukey", "hausdorff", "maxprinciple", "zermelo", "zorn", "wellorder", "ac-from-zermelo", "ac-from-wo"}));
  demo->add_option("--input", input_text, "JSON object");
  std::optional<std::size_t> guard;
  demo->add_option("--guard", guard, "Size guard override");

  // suite
  auto* suite = app.add_subcommand("suite", "Run a theorem suite");
  std::string suite_name, json_out;
  std::optional<std::size_t> suite_n, suite_atoms;
  bool no_timing = false;
  std::vector<std::string> suite_choices(harness::suite_names());
  suite_choices.push_back("all");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_choices));
  suite->add_option("--n", suite_n, "Carrier size or corpus size");
  suite->add_option("--atoms", suite_atoms, "Atoms of the family universe");
  suite->add_option("--json", json_out, "Write the report to this file");
  suite->add_flag("--no-timing", no_timing, "Omit millis so reports are byte-identical across runs");

  std::string choice_text = "canonical";
  for (auto* sub : {lemma, demo, suite}) sub->add_option("--choice", choice_text, "canonical or seed:N");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List enumerated instances");
  std::string enum_kind;
  std::size_t enum_n = 3;
  enumerate->add_option("kind", enum_kind)
      ->required()
      ->check(CLI::IsMember({"posets", "totalorders", "downsets", "families", "nests", "disjoint_families"}));
  enumerate->add_option("--n", enum_n);
  bool count_only = false;
  enumerate->add_flag("--count", count_only, "Print the count only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    const ChoicePolicy policy = ChoicePolicy::parse(choice_text);

    if (*eval) {
      dsl::Env env;
      for (const auto& spec : env_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::ParseError, "--env expects name=JSON");
        env.insert_or_assign(spec.substr(0, eq), deserialize(spec.substr(eq + 1)));
      }
      const auto u = dsl::Universe::rank(rank, 5);
      dsl::Expr e = dsl::parse(expr);
      if (auto* t = std::get_if<dsl::TermPtr>(&e)) {
        HfSet v = dsl::eval_term(**t, env, u);
        std::cout << serialize(v) << "\n";
        return kOk;
      }
      bool b = dsl::eval_formula(*std::get<dsl::FormulaPtr>(e), env, u);
      std::cout << (b ? "true" : "false") << "\n";
      return b ? kOk : kFalse;
    }

    if (*check) {
      Verdict v = run_check(predicate, parse_json(args_text, "--args"));
      json out = verdict_json(v);
      out["predicate"] = predicate;
      std::cout << out.dump() << "\n";
      return v ? kOk : kFalse;
    }

    if (*lemma) {
      Verdict v = verify_lemma(lemma_id, parse_json(instance_text, "--instance"), policy);
      json out = verdict_json(v);
      out["lemma"] = lemma_id;
      std::cout << out.dump() << "\n";
      return v ? kOk : kFalse;
    }

    if (*demo) {
      json out = run_demo(construction, parse_json(input_text, "--input"), policy, guard);
      std::cout << out.dump(2) << "\n";
      return all_verified(out) ? kOk : kFalse;
    }

    if (*suite) {
      std::vector<std::string> names =
          suite_name == "all" ? harness::suite_names() : std::vector<std::string>{suite_name};
      json reports = json::array();
      bool pass = true;
      for (const auto& name : names) {
        harness::Report r = harness::run_suite(name, {suite_n, suite_atoms, policy});
        pass &= r.passed();
        reports.push_back(r.to_json(!no_timing));
      }
      json doc = names.size() == 1 ? reports[0] : reports;
      if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + json_out);
        f << doc.dump(2) << "\n";
      }
      std::cout << doc.dump(2) << "\n";
      return pass ? kOk : kFalse;
    }

    if (*enumerate) {
      auto items = harness::enumerate(harness::parse_enum_kind(enum_kind), enum_n);
      if (count_only) {
        std::cout << items.size() << "\n";
      } else {
        for (const auto& s : items) std::cout << serialize(s) << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
