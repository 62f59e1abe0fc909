#pragma once

// Instance-level checks of the intermediate lemmas. An instance is a JSON
// object whose fields are sets in the lenient JSON encoding; a field that is
// missing, unparsable, or violates the lemma's hypothesis is reported as
// MalformedInstance. The verdict fails only when the conclusion is false.

#include <array>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/json_io.hpp"
#include "mk/maximal.hpp"
#include "mk/order.hpp"
#include "mk/tukey.hpp"
#include "mk/wellorder.hpp"
#include "mk/zorn.hpp"

namespace mk {

inline constexpr std::array<std::string_view, 16> kLemmaIds = {
    "Property_x", "Property_f0", "Property_FinChar", "LemmaT1", "LemmaT2", "LemmaT3",
    "LemmaT4",    "LemmaH1",     "LemmaH2",          "LemmaZ1", "LemmaZ2", "LemmaZ3",
    "LemmaW1",    "LemmaW2",     "LemmaW3",          "Property_FF",
};

namespace detail {

inline HfSet field(const nlohmann::json& inst, const char* key) {
  if (!inst.is_object() || !inst.contains(key))
    throw Error(ErrorCode::MalformedInstance, std::string("missing field '") + key + "'");
  try {
    return from_json(inst.at(key));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInstance, std::string("field '") + key + "': " + e.what());
  }
}

inline BinRel relation_field(const nlohmann::json& inst, const char* key) {
  HfSet r = field(inst, key);
  if (!is_relation(r)) throw Error(ErrorCode::MalformedInstance, std::string("field '") + key + "' is not a relation");
  return BinRel(r);
}

inline void hypothesis(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::MalformedInstance, "instance violates hypothesis: " + what);
}

inline Family fc_family(const nlohmann::json& inst) {
  Family f(field(inst, "f"));
  hypothesis(!f.empty() && is_finite_character(f).holds, "f nonempty of finite character");
  return f;
}

struct Poset {
  HfSet x;
  BinRel le;
};

inline Poset poset(const nlohmann::json& inst, bool nonempty) {
  Poset p{field(inst, "X"), relation_field(inst, "le")};
  hypothesis(is_partial_order(p.le, p.x).holds, "le partially orders X");
  if (nonempty) hypothesis(!p.x.empty(), "X nonempty");
  return p;
}

inline Verdict iff(bool lhs, bool rhs, const char* name) {
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail(std::string(name) + (lhs ? ": left holds, right fails" : ": right holds, left fails"));
}

inline Verdict all_of(std::initializer_list<std::pair<bool, const char*>> parts) {
  for (const auto& [ok, clause] : parts)
    if (!ok) return Verdict::fail(clause);
  return Verdict::pass();
}

inline HfSet nests_of(const HfSet& a) {
  std::vector<HfSet> out;
  for_each_nest(a.members(), [&](const std::vector<HfSet>& n) {
    out.push_back(HfSet::from_sorted(n));
    return true;
  });
  return HfSet::of(std::move(out));
}

inline Verdict is_chain_of_L(const HfSet& k, const HfSet& l, const BinRel& order) {
  if (!subclass(k, l)) return Verdict::fail("K ⊆ L");
  return is_chain(k, l, order);
}

}  // namespace detail

inline Verdict verify_lemma(std::string_view name, const nlohmann::json& inst, ChoicePolicy policy = {}) {
  using namespace detail;
  if (name == "Property_f′0") name = "Property_f0";

  if (name == "Property_x") {
    Family f = fc_family(inst);
    HfSet big_f = field(inst, "F");
    hypothesis(f.contains(big_f), "F ∈ f");
    HfSet x = chi(big_f, f, ChoiceFn(f.atoms(), policy));
    if (subclass(big_f, x)) return Verdict::pass();
    return Verdict::fail("F ⊆ χ(F)", {big_f, x});
  }
  if (name == "Property_f0") {
    Family f = fc_family(inst);
    ChoiceFn c(f.atoms(), policy);
    Family f0 = tukey_state(f, c).f0;
    if (auto v = is_t_subclass(f0, f, c); !v) return Verdict::fail("f′0 is a t-Subclass: " + v.clause, v.witness);
    if (f.size() <= kLiteralTSubclassLimit)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
        Family g(subset_by_mask(f.sets(), m));
        if (is_t_subclass(g, f, c) && !subclass(f0.sets(), g.sets()))
          return Verdict::fail("f′0 ⊆ every t-Subclass", {g.sets()});
      }
    return Verdict::pass();
  }
  if (name == "Property_FinChar") return finite_char_properties(fc_family(inst));
  if (name == "LemmaT1" || name == "LemmaT2") {
    Family f = fc_family(inst);
    HfSet d = field(inst, "D");
    auto st = tukey_state(f, ChoiceFn(f.atoms(), policy));
    Family f1 = tukey_auxiliary(TukeyAux::F1, HfSet(), st);
    hypothesis(f1.contains(d), "D ∈ f′1");
    if (name == "LemmaT1") {
      Family ups = tukey_auxiliary(TukeyAux::Upsilon, d, st);
      if (auto v = is_t_subclass(ups, f, st.c); !v) return Verdict::fail("υ(D) is a t-Subclass: " + v.clause, v.witness);
      return Verdict::pass();
    }
    HfSet x = chi(d, f, st.c);
    if (f1.contains(x)) return Verdict::pass();
    return Verdict::fail("χ(D) ∈ f′1", {x});
  }
  if (name == "LemmaT3" || name == "LemmaT4") {
    Family f = fc_family(inst);
    auto st = tukey_state(f, ChoiceFn(f.atoms(), policy));
    if (name == "LemmaT3") {
      if (auto v = is_nest(st.f0); !v) return Verdict::fail("f′0 is a nest", v.witness);
      return Verdict::pass();
    }
    HfSet m = big_union(st.f0.sets());
    return all_of({{f.contains(m), "⋃f′0 ∈ f"}, {chi(m, f, st.c) == m, "χ(⋃f′0) = ⋃f′0"}});
  }
  if (name == "LemmaH1") {
    Family f(field(inst, "f"));
    hypothesis(is_finite_character(f).holds, "f of finite character");
    HfSet a = field(inst, "A");
    hypothesis(f.contains(a), "A ∈ f");
    HfSet m = maximal_member_containing(f, a, policy);
    return all_of({{extreme_member(Extreme::Max, m, f).holds, "M maximal in f"}, {subclass(a, m), "A ⊆ M"}});
  }
  if (name == "LemmaH2") {
    HfSet a = field(inst, "A");
    Family nests(nests_of(a));
    if (auto v = is_finite_character(nests); !v) return Verdict::fail("nests in A of finite character: " + v.clause, v.witness);
    return Verdict::pass();
  }
  if (name == "LemmaZ1") {
    Poset p = poset(inst, false);
    HfSet a = field(inst, "A");
    HfSet ffa = down_sets(a, p.x, p.le);
    bool rhs = subclass(ffa, down_sets(p.x, p.x, p.le)) && is_nest(Family(ffa)).holds && !a.empty();
    return iff(is_chain(a, p.x, p.le).holds, rhs, "chain ⟺ {F_a} nest");
  }
  if (name == "LemmaZ2") {
    Poset p = poset(inst, true);
    HfSet a = field(inst, "A");
    HfSet y = field(inst, "y");
    if (!is_bound(BoundKind::Upper, y, a, p.x, p.le)) return Verdict::pass();
    HfSet fy = down_set(y, p.x, p.le);
    for (const auto& fa : down_sets(a, p.x, p.le))
      if (!subclass(fa, fy)) return Verdict::fail("F_a ⊆ F_y", {fa, fy});
    return Verdict::pass();
  }
  if (name == "LemmaZ3") {
    Poset p = poset(inst, true);
    HfSet y = field(inst, "y");
    bool lhs = extreme_element(Extreme::Max, y, p.x, p.le).holds;
    bool rhs = extreme_member(Extreme::Max, down_set(y, p.x, p.le), Family(down_sets(p.x, p.x, p.le))).holds;
    return iff(lhs, rhs, "maximal element ⟺ F_y maximal member");
  }
  if (name == "LemmaW1") {
    HfSet x = field(inst, "X");
    return is_partial_order(lee(x), en_L(x));
  }
  if (name == "LemmaW2" || name == "LemmaW3") {
    HfSet x = field(inst, "X");
    HfSet k = field(inst, "K");
    const HfSet l = en_L(x);
    const BinRel order = lee(x);
    hypothesis(is_partial_order(order, l).holds && is_chain_of_L(k, l, order).holds, "K is a chain of (L, ≺)");
    const HfSet z = en_Z(k);
    const BinRel zo = leeq(k);
    if (name == "LemmaW2") {
      if (auto v = is_well_order(zo, z); !v) return Verdict::fail("≦ well-orders Z: " + v.clause, v.witness);
      return Verdict::pass();
    }
    if (auto v = is_bound(BoundKind::Upper, ordered_pair(z, zo.pairs()), k, l, order); !v)
      return Verdict::fail("⟨Z,≦⟩ bounds K: " + v.clause, v.witness);
    return Verdict::pass();
  }
  if (name == "Property_FF") {
    Poset p = poset(inst, false);
    HfSet a = field(inst, "A");
    HfSet pt = field(inst, "a");
    HfSet fa = down_set(pt, p.x, p.le);
    if (!down_sets(a, p.x, p.le).contains(fa)) return Verdict::pass();
    // b ranges over X, A, a itself, and X as a point outside X.
    HfSet others = set_union(set_union(p.x, a), HfSet{pt, p.x});
    for (const auto& b : others)
      if (down_set(b, p.x, p.le) == fa && !(b == pt)) return Verdict::fail("F_a = F_b ⟹ a = b", {pt, b});
    return Verdict::pass();
  }
  throw Error(ErrorCode::UnknownLemma, "no lemma named '" + std::string(name) + "'");
}

}  // namespace mk
