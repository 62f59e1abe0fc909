#pragma once

// Hausdorff maximal principle, maximal principle and Zermelo's postulate,
// each obtained from the previous one exactly as in the equivalence chain.

#include <cstdint>
#include <limits>
#include <vector>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/order.hpp"
#include "mk/tukey.hpp"

namespace mk {

/// A maximal member of a family of finite character containing `a`, via
/// Tukey on {F ∈ f : F ∪ A ∈ f}.
template <SetFamily Fam>
HfSet maximal_member_containing(const Fam& f, const HfSet& a, ChoicePolicy policy = {}) {
  if (!f.contains(a)) throw Error(ErrorCode::NotAMember, "anchor is not a member of f");
  ExtensionFamily<Fam> f1(f, a);
  return tukey_maximal_member(f1, policy);
}

/// A maximal nest u with N ⊆ u ⊆ A.
inline HfSet hausdorff_extend_nest(const HfSet& a, const HfSet& n, ChoicePolicy policy = {}) {
  if (!subclass(n, a)) throw Error(ErrorCode::NotASubfamily, "N is not contained in A");
  if (auto v = is_nest(Family(n)); !v) throw Error(ErrorCode::NotANest, "N fails " + v.clause);
  HfSet u = maximal_member_containing(NestsIn(a), n, policy);
  if (!subclass(n, u) || !subclass(u, a) || !is_nest(Family(u)))
    throw Error(ErrorCode::InvariantViolated, "extended nest lost N or left A");
  for (const auto& x : set_difference(a, u))
    if (is_nest(Family(adjoin(u, x))))
      throw Error(ErrorCode::InvariantViolated, "extended nest is not maximal");
  return u;
}

inline constexpr std::size_t kNestHypothesisBudget = 200000;

/// Checks that every nest in A has a member of A above all its members.
/// Beyond `budget` nests only `fallback` is checked; the result says which.
struct NestHypothesis {
  bool exhaustive = true;
  std::size_t nests_checked = 0;
};

inline NestHypothesis check_nest_hypothesis(const HfSet& a, const HfSet& fallback,
                                            std::size_t budget = kNestHypothesisBudget) {
  auto bounded = [&](const HfSet& n) {
    HfSet u = big_union(n);
    if (a.contains(u)) return true;
    for (const auto& big_n : a)
      if (subclass(u, big_n)) return true;
    return false;
  };
  NestHypothesis out;
  std::optional<HfSet> bad;
  bool done = for_each_nest(
      a.members(),
      [&](const std::vector<HfSet>& n) {
        ++out.nests_checked;
        if (bounded(HfSet::from_sorted(n))) return true;
        bad = HfSet::from_sorted(n);
        return false;
      },
      budget);
  if (bad) throw Error(ErrorCode::HypothesisFails, "nest " + to_text(*bad) + " has no bound in A");
  if (!done) {
    out.exhaustive = false;
    if (!bounded(fallback))
      throw Error(ErrorCode::HypothesisFails, "nest " + to_text(fallback) + " has no bound in A");
  }
  return out;
}

/// A maximal member of A: extend ∅ to a maximal nest u, then take the
/// canonically first N ∈ A containing every member of u.
inline HfSet maximal_principle_member(const HfSet& a, ChoicePolicy policy = {},
                                      std::size_t budget = kNestHypothesisBudget) {
  if (a.empty()) throw Error(ErrorCode::EmptyFamily, "maximal principle needs a nonempty A");
  HfSet u = hausdorff_extend_nest(a, HfSet(), policy);
  check_nest_hypothesis(a, u, budget);
  const HfSet top = big_union(u);
  for (const auto& big_n : a) {
    if (!subclass(top, big_n)) continue;
    if (!extreme_member(Extreme::Max, big_n, Family(a)))
      throw Error(ErrorCode::InvariantViolated, "bound of a maximal nest is not maximal");
    return big_n;
  }
  throw Error(ErrorCode::HypothesisFails, "maximal nest " + to_text(u) + " has no bound in A");
}

inline constexpr std::size_t kTransversalGuard = 12;
inline constexpr std::size_t kTransversalNestBudget = 10000;

/// T_B = {K ⊆ ⋃A : D ∩ K = ∅ for D ∈ A ∼ B, D ∩ K a singleton for D ∈ B}
inline bool in_partial_transversal(const HfSet& k, const HfSet& b, const HfSet& a) {
  if (!subclass(k, big_union(a))) return false;
  for (const auto& d : set_difference(a, b))
    if (!set_intersection(d, k).empty()) return false;
  for (const auto& d : b)
    if (set_intersection(d, k).size() != 1) return false;
  return true;
}

/// T = {K : ∃B ⊆ A, K ∈ T_B}. For K ⊆ ⋃A the only candidate is
/// B = {D ∈ A : D ∩ K ≠ ∅}.
inline HfSet transversal_family(const HfSet& a, std::size_t guard = kTransversalGuard) {
  const HfSet x = big_union(a);
  if (x.size() > guard)
    throw Error(ErrorCode::SizeGuardExceeded, "⋃A has " + std::to_string(x.size()) + " elements, guard " +
                                                  std::to_string(guard));
  std::vector<HfSet> t;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << x.size()); ++m) {
    HfSet k = subset_by_mask(x, m);
    std::vector<HfSet> b;
    for (const auto& d : a)
      if (!disjoint(d, k)) b.push_back(d);
    if (in_partial_transversal(k, HfSet::from_sorted(std::move(b)), a)) t.push_back(std::move(k));
  }
  return HfSet::of(std::move(t));
}

/// C meeting every member of a disjoint ∅-free family in exactly one point.
inline HfSet zermelo_transversal(const HfSet& a, ChoicePolicy policy = {}, std::size_t guard = kTransversalGuard) {
  if (a.contains(HfSet())) throw Error(ErrorCode::EmptyMemberPresent, "∅ ∈ A");
  auto ms = a.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!disjoint(ms[i], ms[j]))
        throw Error(ErrorCode::NotDisjoint, to_text(ms[i]) + " meets " + to_text(ms[j]));
  HfSet c = maximal_principle_member(transversal_family(a, guard), policy, kTransversalNestBudget);
  for (const auto& d : a)
    if (set_intersection(d, c).size() != 1)
      throw Error(ErrorCode::InvariantViolated, "maximal member of T misses " + to_text(d));
  return c;
}

}  // namespace mk
