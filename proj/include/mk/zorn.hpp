#pragma once

// Zorn's lemma through the maximal principle applied to the down-sets
// F_x = {u ∈ X : u ≤ x}.

#include <optional>
#include <vector>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/maximal.hpp"
#include "mk/order.hpp"

namespace mk {

/// F_x = {u ∈ X : u ≤ x}. Defined for any x; empty when x ∉ X.
inline HfSet down_set(const HfSet& x, const HfSet& carrier, const BinRel& le) {
  std::vector<HfSet> out;
  for (const auto& u : carrier)
    if (le.holds(u, x)) out.push_back(u);
  return HfSet::from_sorted(std::move(out));
}

/// {F_a : a ∈ A}
inline HfSet down_sets(const HfSet& a, const HfSet& carrier, const BinRel& le) {
  std::vector<HfSet> out;
  for (const auto& x : a) out.push_back(down_set(x, carrier, le));
  return HfSet::of(std::move(out));
}

/// F_x, or {F_x : x ∈ X} when `x` is empty; requires a partial order.
inline HfSet zorn_family(const std::optional<HfSet>& x, const HfSet& carrier, const BinRel& le) {
  if (auto v = is_partial_order(le, carrier); !v)
    throw Error(ErrorCode::NotAPartialOrder, "fails " + v.clause);
  return x ? down_set(*x, carrier, le) : down_sets(carrier, carrier, le);
}

/// Every chain of (X, ≤) has an upper bound in X.
inline Verdict chains_have_upper_bounds(const HfSet& carrier, const BinRel& le) {
  Verdict out = Verdict::pass();
  for_each_chain(carrier, le, [&](const std::vector<HfSet>& chain) {
    HfSet a = HfSet::from_sorted(chain);
    for (const auto& y : carrier)
      if (is_bound(BoundKind::Upper, y, a, carrier, le)) return true;
    out = Verdict::fail("chain without upper bound", {a});
    return false;
  });
  return out;
}

struct ZornResult {
  /// X = ∅: the hypothesis holds and there is nothing to return.
  bool vacuous = false;
  HfSet element;
};

inline ZornResult zorn_maximal_element(const HfSet& carrier, const BinRel& le, ChoicePolicy policy = {},
                                       std::size_t nest_budget = kNestHypothesisBudget) {
  if (auto v = is_partial_order(le, carrier); !v)
    throw Error(ErrorCode::NotAPartialOrder, "fails " + v.clause);
  if (carrier.empty()) return {true, HfSet()};
  if (auto v = chains_have_upper_bounds(carrier, le); !v)
    throw Error(ErrorCode::HypothesisFails, "chain " + to_text(v.witness[0]) + " has no upper bound");
  const HfSet ff = down_sets(carrier, carrier, le);
  const HfSet m = maximal_principle_member(ff, policy, nest_budget);
  for (const auto& y : carrier) {
    if (!(down_set(y, carrier, le) == m)) continue;
    if (!extreme_element(Extreme::Max, y, carrier, le))
      throw Error(ErrorCode::InvariantViolated, "F_y maximal but y is not");
    return {false, y};
  }
  throw Error(ErrorCode::InvariantViolated, "maximal member is not of the form F_y");
}

}  // namespace mk
