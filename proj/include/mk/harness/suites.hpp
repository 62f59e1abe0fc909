#pragma once

// Theorem suites over every small instance, with JSON reports.
//
// Instances that legitimately trip a precondition error are counted in
// expected_errors; any other exception is a failure. Reports list failures
// in enumeration order, so two runs with the same parameters produce the
// same report apart from `millis`.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mk/ac.hpp"
#include "mk/choice.hpp"
#include "mk/classifier.hpp"
#include "mk/error.hpp"
#include "mk/harness/corpus.hpp"
#include "mk/harness/enumerate.hpp"
#include "mk/hfs.hpp"
#include "mk/json_io.hpp"
#include "mk/lemmas.hpp"
#include "mk/maximal.hpp"
#include "mk/order.hpp"
#include "mk/tukey.hpp"
#include "mk/wellorder.hpp"
#include "mk/zorn.hpp"

namespace mk::harness {

struct SuiteParams {
  std::optional<std::size_t> n;
  std::optional<std::size_t> atoms;
  ChoicePolicy policy;
};

struct Failure {
  std::string instance;
  std::string clause;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::size_t instances = 0;
  std::size_t expected_errors = 0;
  std::vector<Failure> failures;
  long long millis = 0;

  bool passed() const { return failures.empty(); }

  nlohmann::json to_json(bool with_time = true) const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"instance", f.instance}, {"clause", f.clause}});
    nlohmann::json j = {{"suite", suite},
                        {"params", params},
                        {"instances", instances},
                        {"expected_errors", expected_errors},
                        {"failures", fs}};
    if (with_time) j["millis"] = millis;
    return j;
  }

  static Report from_json(const nlohmann::json& j) {
    Report r;
    try {
      r.suite = j.at("suite").get<std::string>();
      r.params = j.at("params");
      r.instances = j.at("instances").get<std::size_t>();
      r.expected_errors = j.at("expected_errors").get<std::size_t>();
      for (const auto& f : j.at("failures"))
        r.failures.push_back({f.at("instance").get<std::string>(), f.at("clause").get<std::string>()});
      r.millis = j.value("millis", 0LL);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
    }
    return r;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "scheme",  "tukey", "hausdorff", "maxprinciple", "zermelo",
                                                 "zorn",   "wellorder", "ac",  "lemmas",    "equivalence"};
  return names;
}

namespace detail {

/// Runs one instance, turning its outcome into report entries.
class Recorder {
 public:
  explicit Recorder(Report& r) : r_(r) {}

  /// `body` returns the violated clause, or an empty string.
  void run(const std::string& instance, const std::function<std::string()>& body) {
    ++r_.instances;
    try {
      if (std::string clause = body(); !clause.empty()) r_.failures.push_back({instance, clause});
    } catch (const Error& e) {
      r_.failures.push_back({instance, std::string("unexpected ") + e.what()});
    }
  }

  /// The instance must raise `code`.
  void expect_error(const std::string& instance, ErrorCode code, const std::function<void()>& body) {
    ++r_.instances;
    try {
      body();
      r_.failures.push_back({instance, "expected " + std::string(to_string(code))});
    } catch (const Error& e) {
      if (e.code() == code)
        ++r_.expected_errors;
      else
        r_.failures.push_back({instance, "expected " + std::string(to_string(code)) + ", got " + e.what()});
    }
  }

 private:
  Report& r_;
};

inline std::string order_text(const OrderInstance& o) { return serialize(o.carrier) + " " + serialize(o.le.pairs()); }

/// Numeral carriers up to n plus a few non-numeral ones of the same sizes.
inline std::vector<HfSet> sample_carriers(std::size_t n) {
  std::vector<HfSet> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(numeral(k));
  const HfSet one = numeral(1), s1 = singleton(numeral(1));
  for (const HfSet& x : {HfSet{s1}, HfSet{one, s1}, HfSet{HfSet(), numeral(2), s1}})
    if (x.size() <= n) out.push_back(x);
  return out;
}

inline std::vector<HfSet> brute_maximal_members(const HfSet& f) {
  std::vector<HfSet> out;
  for (const auto& a : f) {
    bool top = true;
    for (const auto& b : f)
      if (!(a == b) && subclass(a, b)) top = false;
    if (top) out.push_back(a);
  }
  return out;
}

inline bool contains(const std::vector<HfSet>& v, const HfSet& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

inline std::string check_choice(const ChoiceFn& c, const HfSet& x) {
  const HfSet t = c.table();
  if (auto v = is_choice_function(t, x); !v) return "choice function: " + v.clause;
  if (domain(t).size() != (std::size_t{1} << x.size()) - 1) return "|dom| = 2^|X| − 1";
  return {};
}

// ---------------------------------------------------------------------------

inline void suite_axioms(Recorder& rec, std::size_t n) {
  const HfSet v3 = rank_universe(3);
  const HfSet v4 = rank_universe(4);
  for (const auto& x : v4)
    for (const auto& y : v4)
      rec.run("extensionality " + serialize(x) + " " + serialize(y), [&]() -> std::string {
        bool same_members = true;
        for (const auto& z : v4) same_members &= member(z, x) == member(z, y);
        return same_members == (x == y) ? "" : "extensionality";
      });
  for (std::size_t k = 0; k <= n; ++k)
    rec.run("power set of " + std::to_string(k), [&]() -> std::string {
      return power_set(numeral(k)).size() == (std::size_t{1} << k) ? "" : "|pow(n)| = 2^n";
    });
  std::vector<HfSet> small(v4.begin(), v4.end());
  for (std::size_t k = 0; k <= n; ++k) small.push_back(numeral(k));
  for (const auto& x : small)
    rec.run("union of power set " + serialize(x), [&]() -> std::string {
      return big_union(power_set(x)) == x ? "" : "⋃pow(x) = x";
    });
  for (const auto& a : v3)
    for (const auto& b : v3)
      rec.run("pair injectivity " + serialize(a) + " " + serialize(b), [&]() -> std::string {
        const HfSet p = ordered_pair(a, b);
        for (const auto& c : v3)
          for (const auto& d : v3)
            if ((p == ordered_pair(c, d)) != (a == c && b == d)) return "⟨a,b⟩ = ⟨c,d⟩ ⟺ a = c ∧ b = d";
        auto dec = decode_pair(p);
        return dec && dec->first == a && dec->second == b ? "" : "projections";
      });
  // Every nonempty set of members of V(4).
  for (const auto& x : rank_universe(5, 5)) {
    if (x.empty()) continue;
    rec.run("regularity " + serialize(x), [&]() -> std::string {
      HfSet w = regularity_witness(x);
      return x.contains(w) && disjoint(w, x) ? "" : "regularity witness";
    });
  }
  rec.expect_error("regularity ∅", ErrorCode::EmptyInput, [] { regularity_witness(HfSet()); });
}

inline void suite_scheme(Recorder& rec, std::size_t count) {
  const auto u = dsl::Universe::rank(3);
  FormulaGenerator gen;
  for (const auto& f : gen.corpus(count))
    rec.run(dsl::print(*f), [&]() -> std::string { return dsl::check_scheme(*f, u) ? "" : "b ∈ {x : F} ⟺ F(b)"; });
}

inline void suite_tukey(Recorder& rec, std::size_t atoms, ChoicePolicy policy) {
  for (const auto& f : enumerate_downsets(atoms)) {
    if (f.empty()) {
      rec.expect_error("∅", ErrorCode::EmptyFamily, [&] { tukey_maximal_member(Family(f), policy); });
      continue;
    }
    rec.run(serialize(f), [&]() -> std::string {
      Family fam(f);
      ChoiceFn c(fam.atoms(), policy);
      HfSet m = tukey_maximal_member(fam, c);
      if (!extreme_member(Extreme::Max, m, fam)) return "M maximal in f";
      if (!(chi(m, fam, c) == m)) return "χ(M) = M";
      if (!contains(brute_maximal_members(f), m)) return "M among brute-force maximal members";
      Family f0 = least_t_subclass(fam, c);
      if (!is_nest(f0)) return "f′0 nest";
      if (!(big_union(f0.sets()) == m)) return "M = ⋃f′0";
      return {};
    });
  }
}

inline void suite_hausdorff(Recorder& rec, std::size_t atoms, ChoicePolicy policy) {
  for (const auto& a : enumerate_families(atoms)) {
    for_each_nest(a.members(), [&](const std::vector<HfSet>& nv) {
      const HfSet n = HfSet::from_sorted(nv);
      rec.run(serialize(a) + " " + serialize(n), [&]() -> std::string {
        HfSet u = hausdorff_extend_nest(a, n, policy);
        if (!subclass(n, u) || !subclass(u, a)) return "N ⊆ u ⊆ A";
        if (!is_nest(Family(u))) return "u nest";
        for (const auto& x : a)
          if (!u.contains(x) && is_nest(Family(adjoin(u, x)))) return "u maximal among nests";
        return {};
      });
      return true;
    });
  }
  rec.expect_error("N = {{0},{1}}", ErrorCode::NotANest, [&] {
    HfSet n{singleton(numeral(0)), singleton(numeral(1))};
    hausdorff_extend_nest(set_union(n, singleton(HfSet())), n, policy);
  });
}

inline void suite_maxprinciple(Recorder& rec, std::size_t atoms, ChoicePolicy policy) {
  for (const auto& a : enumerate_families(atoms)) {
    if (a.empty()) {
      rec.expect_error("∅", ErrorCode::EmptyFamily, [&] { maximal_principle_member(a, policy); });
      continue;
    }
    rec.run(serialize(a), [&]() -> std::string {
      HfSet m = maximal_principle_member(a, policy);
      if (!extreme_member(Extreme::Max, m, Family(a))) return "M maximal in A";
      if (!contains(brute_maximal_members(a), m)) return "M among brute-force maximal members";
      return {};
    });
  }
}

inline void suite_zermelo(Recorder& rec, std::size_t atoms, ChoicePolicy policy) {
  for (const auto& a : enumerate_disjoint_families(atoms)) {
    rec.run(serialize(a), [&]() -> std::string {
      HfSet c = zermelo_transversal(a, policy);
      for (const auto& d : a)
        if (set_intersection(d, c).size() != 1) return "D ∩ C singleton";
      return {};
    });
    const HfSet with_empty = adjoin(a, HfSet());
    rec.expect_error(serialize(with_empty), ErrorCode::EmptyMemberPresent,
                     [&] { zermelo_transversal(with_empty, policy); });
  }
  rec.expect_error("{{0},{0,1}}", ErrorCode::NotDisjoint, [&] {
    zermelo_transversal(HfSet{numeral(1), numeral(2)}, policy);
  });
}

inline void suite_zorn(Recorder& rec, std::size_t n, ChoicePolicy policy) {
  for (const auto& o : enumerate_posets(n)) {
    rec.run(order_text(o), [&]() -> std::string {
      ZornResult z = zorn_maximal_element(o.carrier, o.le, policy);
      if (o.carrier.empty()) return z.vacuous ? "" : "vacuous on ∅";
      if (z.vacuous) return "vacuous on a nonempty carrier";
      std::vector<HfSet> brute, via_members;
      const HfSet ff = down_sets(o.carrier, o.carrier, o.le);
      for (const auto& y : o.carrier) {
        bool top = true;
        for (const auto& w : o.carrier)
          if (!(w == y) && o.le.holds(y, w)) top = false;
        if (top) brute.push_back(y);
        if (extreme_member(Extreme::Max, down_set(y, o.carrier, o.le), Family(ff))) via_members.push_back(y);
      }
      if (!contains(brute, z.element)) return "element maximal";
      if (brute != via_members) return "maximal elements ⟺ maximal F_y";
      return {};
    });
  }
}

inline void suite_wellorder(Recorder& rec, std::size_t n, ChoicePolicy policy) {
  for (const auto& x : sample_carriers(n))
    rec.run(serialize(x), [&]() -> std::string {
      BinRel le = wellorder_construct(x, {policy});
      if (!is_well_order(le, x)) return "well order";
      if (!is_well_order(canonical_well_order(x), x)) return "canonical oracle";
      return {};
    });
  if (n < kWellOrderGuard + 1)
    rec.expect_error(serialize(numeral(kWellOrderGuard + 1)), ErrorCode::SizeGuardExceeded,
                     [&] { wellorder_construct(numeral(kWellOrderGuard + 1), {policy}); });
}

inline void suite_ac(Recorder& rec, std::size_t n, ChoicePolicy policy) {
  for (const auto& x : sample_carriers(n)) {
    rec.run("wellorder " + serialize(x), [&]() -> std::string {
      return check_choice(choice_from_wellorder(x, canonical_well_order(x)), x);
    });
    rec.run("zermelo " + serialize(x), [&]() -> std::string { return check_choice(choice_from_zermelo(x, policy), x); });
  }
}

inline void suite_lemmas(Recorder& rec, std::size_t atoms, std::size_t n, ChoicePolicy policy) {
  using nlohmann::json;
  auto check = [&](std::string_view id, const json& inst) {
    rec.run(std::string(id) + " " + inst.dump(), [&]() -> std::string {
      Verdict v = verify_lemma(id, inst, policy);
      return v ? "" : v.clause;
    });
  };
  for (const auto& fs : enumerate_downsets(atoms)) {
    if (fs.empty()) continue;
    Family f(fs);
    const json jf = to_json(fs);
    for (const auto& big_f : fs) check("Property_x", {{"f", jf}, {"F", to_json(big_f)}});
    for (auto id : {"Property_f0", "Property_FinChar", "LemmaT3", "LemmaT4"}) check(id, {{"f", jf}});
    auto st = tukey_state(f, ChoiceFn(f.atoms(), policy));
    const Family f1 = tukey_auxiliary(TukeyAux::F1, HfSet(), st);
    for (const auto& d : f1.sets())
      for (auto id : {"LemmaT1", "LemmaT2"}) check(id, {{"f", jf}, {"D", to_json(d)}});
    for (const auto& a : fs) check("LemmaH1", {{"f", jf}, {"A", to_json(a)}});
  }
  for (const auto& a : enumerate_families(atoms)) check("LemmaH2", {{"A", to_json(a)}});
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& o : enumerate_posets(k)) {
      const json jx = to_json(o.carrier), jle = to_json(o.le.pairs());
      for (const auto& a : power_set(o.carrier)) {
        const json ja = to_json(a);
        check("LemmaZ1", {{"X", jx}, {"le", jle}, {"A", ja}});
        for (const auto& y : o.carrier) check("LemmaZ2", {{"X", jx}, {"le", jle}, {"A", ja}, {"y", to_json(y)}});
        for (const auto& p : adjoin(o.carrier, o.carrier))
          check("Property_FF", {{"X", jx}, {"le", jle}, {"A", ja}, {"a", to_json(p)}});
      }
      for (const auto& y : o.carrier) check("LemmaZ3", {{"X", jx}, {"le", jle}, {"y", to_json(y)}});
    }
  for (std::size_t k = 0; k <= n; ++k) {
    const HfSet x = numeral(k);
    check("LemmaW1", {{"X", to_json(x)}});
    const HfSet l = en_L(x);
    const BinRel order = lee(x);
    for_each_chain(l, order, [&](const std::vector<HfSet>& chain) {
      const json jk = to_json(HfSet::from_sorted(chain));
      for (auto id : {"LemmaW2", "LemmaW3"}) check(id, {{"X", to_json(x)}, {"K", jk}});
      return true;
    });
  }
}

inline void suite_equivalence(Recorder& rec, std::size_t n, ChoicePolicy policy) {
  for (const auto& x : sample_carriers(n)) {
    const HfSet px = power_set(x);
    rec.run(serialize(x), [&]() -> std::string {
      // AC
      if (auto s = check_choice(ChoiceFn(x, policy), x); !s.empty()) return "AC: " + s;
      // Tukey
      HfSet m = tukey_maximal_member(Family(px), policy);
      if (!extreme_member(Extreme::Max, m, Family(px))) return "Tukey: maximal member";
      // Hausdorff
      HfSet u = hausdorff_extend_nest(px, HfSet(), policy);
      if (!is_nest(Family(u))) return "Hausdorff: nest";
      // Maximal principle
      HfSet mp = maximal_principle_member(px, policy);
      if (!extreme_member(Extreme::Max, mp, Family(px))) return "maximal principle";
      // Zermelo, back to AC
      if (auto s = check_choice(choice_from_zermelo(x, policy), x); !s.empty()) return "Zermelo → AC: " + s;
      // Zorn on (pow(X), ⊆)
      std::vector<std::pair<HfSet, HfSet>> inc;
      for (const auto& a : px)
        for (const auto& b : px)
          if (subclass(a, b)) inc.emplace_back(a, b);
      ZornResult z = zorn_maximal_element(px, BinRel::from_pairs(inc), policy);
      if (z.vacuous || !(z.element == x)) return "Zorn: maximal element of (pow(X), ⊆)";
      // Well-ordering, back to AC
      BinRel le = wellorder_construct(x, {policy});
      if (!is_well_order(le, x)) return "well-ordering";
      if (auto s = check_choice(choice_from_wellorder(x, le), x); !s.empty()) return "well order → AC: " + s;
      return {};
    });
  }
}

}  // namespace detail

inline Report run_suite(const std::string& name, const SuiteParams& p = {}) {
  Report r;
  r.suite = name;
  detail::Recorder rec(r);
  auto n_or = [&](std::size_t d) { return p.n.value_or(d); };
  auto atoms_or = [&](std::size_t d) { return p.atoms.value_or(d); };
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json& params = r.params;
  params["choice"] = p.policy.to_string();

  if (name == "axioms") {
    params["n"] = n_or(5);
    detail::suite_axioms(rec, n_or(5));
  } else if (name == "scheme") {
    params["n"] = n_or(600);
    detail::suite_scheme(rec, n_or(600));
  } else if (name == "tukey") {
    params["atoms"] = atoms_or(3);
    detail::suite_tukey(rec, atoms_or(3), p.policy);
  } else if (name == "hausdorff") {
    params["atoms"] = atoms_or(3);
    detail::suite_hausdorff(rec, atoms_or(3), p.policy);
  } else if (name == "maxprinciple") {
    params["atoms"] = atoms_or(3);
    detail::suite_maxprinciple(rec, atoms_or(3), p.policy);
  } else if (name == "zermelo") {
    params["atoms"] = atoms_or(3);
    detail::suite_zermelo(rec, atoms_or(3), p.policy);
  } else if (name == "zorn") {
    params["n"] = n_or(4);
    detail::suite_zorn(rec, n_or(4), p.policy);
  } else if (name == "wellorder") {
    params["n"] = n_or(3);
    detail::suite_wellorder(rec, n_or(3), p.policy);
  } else if (name == "ac") {
    params["n"] = n_or(3);
    detail::suite_ac(rec, n_or(3), p.policy);
  } else if (name == "lemmas") {
    params["atoms"] = atoms_or(2);
    params["n"] = n_or(3);
    detail::suite_lemmas(rec, atoms_or(2), n_or(3), p.policy);
  } else if (name == "equivalence") {
    params["n"] = n_or(3);
    detail::suite_equivalence(rec, n_or(3), p.policy);
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite '" + name + "'");
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mk::harness
