#pragma once

// Well-ordering theorem through Zorn's lemma on
//   L = {⟨Y, ≤⟩ : ∅ ≠ Y ⊆ X, ≤ a well order on Y}
// ordered by ≺: Y1 ⊆ Y2, the orders agree on Y1, and Y1 is an initial
// segment of (Y2, ≤2). |L| grows super-exponentially, so L and ≺ are
// guarded by the carrier size.

#include <cstdint>
#include <optional>
#include <vector>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/order.hpp"
#include "mk/zorn.hpp"

namespace mk {

inline constexpr std::size_t kWellOrderGuard = 3;

/// All well orders on Y, by filtering every relation ⊆ Y × Y.
inline std::vector<BinRel> well_orders_on(const HfSet& y) {
  const HfSet yy = cartesian(y, y);
  if (yy.size() > kWellOrderSubsetLimit)
    throw Error(ErrorCode::SizeGuardExceeded, "relations on " + std::to_string(y.size()) + " elements");
  std::vector<BinRel> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << yy.size()); ++m) {
    BinRel r(subset_by_mask(yy, m));
    if (is_well_order(r, y)) out.push_back(std::move(r));
  }
  return out;
}

inline HfSet en_L(const HfSet& x, std::size_t guard = kWellOrderGuard) {
  if (x.size() > guard)
    throw Error(ErrorCode::SizeGuardExceeded, "L over " + std::to_string(x.size()) + " elements, guard " +
                                                  std::to_string(guard));
  std::vector<HfSet> out;
  for (const auto& y : power_set(x)) {
    if (y.empty()) continue;
    for (const auto& r : well_orders_on(y)) out.push_back(ordered_pair(y, r.pairs()));
  }
  return HfSet::of(std::move(out));
}

/// ⟨Y1,≤1⟩ ≺ ⟨Y2,≤2⟩ for members of L.
inline bool lee_holds(const HfSet& l1, const HfSet& l2) {
  const HfSet y1 = fst(l1), y2 = fst(l2);
  const BinRel r1(snd(l1)), r2(snd(l2));
  for (const auto& a : y1)
    for (const auto& b : y1)
      if (r1.holds(a, b) != r2.holds(a, b)) return false;
  return is_initial_segment(y1, y2, r2).holds;
}

inline BinRel lee(const HfSet& x, std::size_t guard = kWellOrderGuard) {
  const HfSet l = en_L(x, guard);
  std::vector<std::pair<HfSet, HfSet>> ps;
  for (const auto& l1 : l)
    for (const auto& l2 : l)
      if (lee_holds(l1, l2)) ps.emplace_back(l1, l2);
  return BinRel::from_pairs(ps);
}

/// Z = {x : ∃⟨Y,≤⟩ ∈ K, x ∈ Y}
inline HfSet en_Z(const HfSet& k) {
  HfSet z;
  for (const auto& p : k) z = set_union(z, fst(p));
  return z;
}

/// u ≦ v iff u ≤ v in some ⟨Y,≤⟩ ∈ K with u, v ∈ Y.
inline BinRel leeq(const HfSet& k) {
  std::vector<std::pair<HfSet, HfSet>> ps;
  for (const auto& p : k) {
    const HfSet y = fst(p);
    for (auto& [u, v] : pairs_of(snd(p)))
      if (y.contains(u) && y.contains(v)) ps.emplace_back(u, v);
  }
  return BinRel::from_pairs(ps);
}

enum class WellOrderPart { L, Lee, Z, Leeq };

/// The requested class; Z and ≦ take K ⊆ L.
inline HfSet wellorder_machinery(WellOrderPart kind, const HfSet& x, const HfSet& k = HfSet(),
                                 std::size_t guard = kWellOrderGuard) {
  switch (kind) {
    case WellOrderPart::L:
      return en_L(x, guard);
    case WellOrderPart::Lee:
      return lee(x, guard).pairs();
    case WellOrderPart::Z:
    case WellOrderPart::Leeq:
      if (!subclass(k, en_L(x, guard))) throw Error(ErrorCode::NotASubfamily, "K is not contained in L");
      return kind == WellOrderPart::Z ? en_Z(k) : leeq(k).pairs();
  }
  throw Error(ErrorCode::InvariantViolated, "unknown well-order part");
}

/// ⋖ on Y ∪ {x}: ≤ on Y, every y ∈ Y below x, and x ⋖ x.
inline BinRel extend_by_point(const HfSet& y, const BinRel& le, const HfSet& x) {
  std::vector<HfSet> ps(le.pairs().begin(), le.pairs().end());
  for (const auto& u : y) ps.push_back(ordered_pair(u, x));
  ps.push_back(ordered_pair(x, x));
  return BinRel(HfSet::of(std::move(ps)));
}

struct WellOrderOptions {
  ChoicePolicy policy;
  std::size_t guard = kWellOrderGuard;
  /// Above the guard, return the canonical order instead of failing.
  bool canonical_fallback = false;
};

/// A well order of X, read off a ≺-maximal member ⟨Y,≤⟩ of L with Y = X.
inline BinRel wellorder_construct(const HfSet& x, const WellOrderOptions& opt = {}) {
  if (x.size() > opt.guard) {
    if (opt.canonical_fallback) return canonical_well_order(x);
    throw Error(ErrorCode::SizeGuardExceeded, "well-ordering " + std::to_string(x.size()) + " elements, guard " +
                                                  std::to_string(opt.guard));
  }
  const HfSet l = en_L(x, opt.guard);
  const BinRel order = lee(x, opt.guard);
  ZornResult z = zorn_maximal_element(l, order, opt.policy);
  if (z.vacuous) return BinRel();
  const HfSet y = fst(z.element);
  const BinRel le(snd(z.element));
  if (!(y == x)) {
    // Y ⊊ X contradicts maximality: ⟨Y ∪ {p}, ⋖⟩ ∈ L sits strictly above.
    const HfSet p = set_difference(x, y).members()[0];
    const HfSet bigger = ordered_pair(adjoin(y, p), extend_by_point(y, le, p).pairs());
    throw Error(ErrorCode::InvariantViolated, "Zorn returned a non-maximal member below " + to_text(bigger));
  }
  if (!is_well_order(le, x)) throw Error(ErrorCode::InvariantViolated, "maximal member of L is not well-ordered");
  return le;
}

}  // namespace mk
