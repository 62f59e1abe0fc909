#include <gtest/gtest.h>

#include "mk/ac.hpp"
#include "mk/order.hpp"
#include "mk/zorn.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mk;

namespace {

const HfSet n0 = numeral(0), n1 = numeral(1), n2 = numeral(2), n3 = numeral(3);

BinRel rel(const oracle::Rel& r) { return BinRel(oracle::pairs_of(r)); }

BinRel le_on(std::size_t n) { return rel(oracle::numeric_le(n)); }

/// ⊆ restricted to a family.
BinRel inclusion(const HfSet& family) {
  std::vector<std::pair<HfSet, HfSet>> ps;
  for (const auto& a : family)
    for (const auto& b : family)
      if (subclass(a, b)) ps.emplace_back(a, b);
  return BinRel::from_pairs(ps);
}

}  // namespace

TEST(Relation, Rrelation) {
  BinRel le = le_on(3);
  EXPECT_TRUE(rrelation(n0, le, n2));
  EXPECT_FALSE(rrelation(n2, le, n0));
  EXPECT_FALSE(rrelation(n0, BinRel(), n0));
  EXPECT_MK_ERROR(BinRel(n3), ErrorCode::NotARelation);
}

TEST(ChoiceFunction, Examples) {
  ChoiceFn eps = choice_from_wellorder(n2, le_on(2));
  EXPECT_TRUE(is_choice_function(eps.table(), n2).holds);
  EXPECT_TRUE(is_choice_function(HfSet(), HfSet()).holds);
  HfSet bad{ordered_pair(singleton(n1), n0), ordered_pair(n1, n0), ordered_pair(n2, n0)};
  EXPECT_FALSE(is_choice_function(bad, n2).holds);
  // Missing a nonempty subset.
  HfSet partial{ordered_pair(n1, n0), ordered_pair(n2, n0)};
  EXPECT_FALSE(is_choice_function(partial, n2).holds);
}

TEST(ExtremeMember, Examples) {
  Family p2(power_set(n2));
  EXPECT_TRUE(extreme_member(Extreme::Max, n2, p2).holds);
  EXPECT_TRUE(extreme_member(Extreme::Min, HfSet(), p2).holds);
  EXPECT_FALSE(extreme_member(Extreme::Max, n1, p2).holds);
  EXPECT_MK_ERROR(extreme_member(Extreme::Max, n1, Family(HfSet())), ErrorCode::EmptyFamily);
}

TEST(Nest, Examples) {
  EXPECT_TRUE(is_nest(Family(HfSet{HfSet(), n1, n2})).holds);
  EXPECT_FALSE(is_nest(Family(HfSet{singleton(n0), singleton(n1)})).holds);
  EXPECT_TRUE(is_nest(Family(HfSet())).holds);
}

TEST(FiniteCharacter, Examples) {
  EXPECT_TRUE(is_finite_character(Family(power_set(n2))).holds);
  EXPECT_FALSE(is_finite_character(Family(HfSet{singleton(n0)})).holds);
  EXPECT_TRUE(is_finite_character(Family(HfSet())).holds);
  EXPECT_TRUE(finite_char_properties(Family(power_set(n2))).holds);
  EXPECT_TRUE(finite_char_properties(Family(n1)).holds);
  EXPECT_MK_ERROR(finite_char_properties(Family(HfSet{singleton(n0)})), ErrorCode::PreconditionFailed);
}

// Over 3 atoms, finite character is exactly downward closure.
TEST(FiniteCharacter, EqualsDownwardClosureOverThreeAtoms) {
  std::size_t agree = 0;
  for (oracle::Fam f = 0; f < (oracle::Fam{1} << 8); ++f) {
    const HfSet fam = oracle::family_of(f, 3);
    EXPECT_EQ(is_finite_character(Family(fam), n3).holds, oracle::downward_closed(f, 3)) << to_text(fam);
    ++agree;
  }
  EXPECT_EQ(agree, 256u);
}

TEST(PartialOrder, Examples) {
  EXPECT_TRUE(is_partial_order(inclusion(power_set(n1)), power_set(n1)).holds);
  EXPECT_TRUE(is_partial_order(le_on(3), n3).holds);
  HfSet missing = set_difference(le_on(3).pairs(), HfSet{ordered_pair(n1, n1)});
  Verdict v = is_partial_order(BinRel(missing), n3);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.clause, "reflexivity");
}

TEST(PartialOrder, MatchesBitmaskOracle) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& r : oracle::all_relations(n)) {
      EXPECT_EQ(is_partial_order(rel(r), numeral(n)).holds, oracle::partial_order(r));
      EXPECT_EQ(is_total_order(rel(r), numeral(n)).holds, oracle::partial_order(r) && oracle::total(r));
    }
}

TEST(Bound, Examples) {
  const BinRel le = le_on(3);
  EXPECT_TRUE(is_bound(BoundKind::Upper, n1, n2, n3, le).holds);
  EXPECT_FALSE(is_bound(BoundKind::Upper, n0, n2, n3, le).holds);
  EXPECT_TRUE(is_bound(BoundKind::Lower, n0, n2, n3, le).holds);
  EXPECT_MK_ERROR(is_bound(BoundKind::Upper, n0, n0, HfSet(), BinRel()), ErrorCode::EmptyCarrier);
  HfSet not_order = set_difference(le.pairs(), HfSet{ordered_pair(n2, n2)});
  EXPECT_MK_ERROR(is_bound(BoundKind::Upper, n1, n2, n3, BinRel(not_order)), ErrorCode::NotAPartialOrder);
}

TEST(ExtremeElement, Examples) {
  const BinRel le = le_on(3);
  EXPECT_TRUE(extreme_element(Extreme::Max, n2, n3, le).holds);
  EXPECT_TRUE(extreme_element(Extreme::Min, n0, n3, le).holds);
  EXPECT_FALSE(extreme_element(Extreme::Max, n1, n3, le).holds);
  const BinRel id = rel(oracle::identity(2));
  EXPECT_TRUE(extreme_element(Extreme::Max, n0, n2, id).holds);
  EXPECT_TRUE(extreme_element(Extreme::Max, n1, n2, id).holds);
  EXPECT_MK_ERROR(extreme_element(Extreme::Max, n0, HfSet(), BinRel()), ErrorCode::EmptyCarrier);
}

TEST(ExtremeElement, MaximalPointsMatchOracle) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& r : oracle::all_relations(n)) {
      if (!oracle::partial_order(r)) continue;
      auto tops = oracle::maximal_points(r);
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_EQ(extreme_element(Extreme::Max, numeral(i), numeral(n), rel(r)).holds, tops.count(i) == 1);
    }
}

TEST(TotalOrder, Examples) {
  EXPECT_TRUE(is_total_order(le_on(3), n3).holds);
  const HfSet p2 = power_set(n2);
  EXPECT_FALSE(is_total_order(inclusion(p2), p2).holds);
  EXPECT_FALSE(is_total_order(rel(oracle::identity(2)), n2).holds);
}

TEST(Chain, Examples) {
  const HfSet p2 = power_set(n2);
  const BinRel inc = inclusion(p2);
  EXPECT_TRUE(is_chain(HfSet{HfSet(), n2}, p2, inc).holds);
  EXPECT_FALSE(is_chain(HfSet{singleton(n0), singleton(n1)}, p2, inc).holds);
  EXPECT_FALSE(is_chain(HfSet(), p2, inc).holds);
}

TEST(WellOrder, Examples) {
  EXPECT_TRUE(is_well_order(le_on(3), n3).holds);
  EXPECT_FALSE(is_well_order(rel(oracle::identity(2)), n2).holds);
  EXPECT_TRUE(is_well_order(BinRel(), HfSet()).holds);
}

// Finite totality forces least elements.
TEST(WellOrder, EquivalentToTotalOrderOnFiniteCarriers) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& r : oracle::all_relations(n)) {
      const bool wo = is_well_order(rel(r), numeral(n)).holds;
      EXPECT_EQ(wo, is_total_order(rel(r), numeral(n)).holds);
      EXPECT_EQ(wo, oracle::well_order(r));
    }
}

TEST(InitialSegment, Examples) {
  const BinRel le = le_on(2);
  EXPECT_TRUE(is_initial_segment(n1, n2, le).holds);
  EXPECT_FALSE(is_initial_segment(singleton(n1), n2, le).holds);
  EXPECT_TRUE(is_initial_segment(n2, n2, le).holds);
  EXPECT_MK_ERROR(is_initial_segment(n1, n2, rel(oracle::identity(2))), ErrorCode::NotAWellOrder);
}

TEST(CanonicalWellOrder, IsAWellOrder) {
  for (const auto& x : rank_universe(3)) EXPECT_TRUE(is_well_order(canonical_well_order(x), x).holds);
  EXPECT_TRUE(is_well_order(canonical_well_order(rank_universe(4)), rank_universe(4)).holds);
}

// A nonempty A ⊆ X is a chain iff {F_a : a ∈ A} is a nest.
TEST(ChainNestBridge, ExhaustiveOnSmallPosets) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& r : oracle::all_relations(n)) {
      if (!oracle::partial_order(r)) continue;
      const HfSet x = numeral(n);
      const BinRel le = rel(r);
      for (oracle::Mask m = 1; m < (oracle::Mask{1} << n); ++m) {
        const HfSet a = oracle::set_of(m);
        EXPECT_EQ(is_chain(a, x, le).holds, is_nest(Family(down_sets(a, x, le))).holds);
      }
    }
}

TEST(ForEachNest, CountsMatchOracle) {
  // Every family over 2 atoms: count its nests against direct enumeration.
  for (oracle::Fam f = 0; f < 16; ++f) {
    const auto ms = oracle::members(f, 2);
    std::size_t expect = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << ms.size()); ++pick) {
      bool ok = true;
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
          if (pick >> i & 1U && pick >> j & 1U) ok = ok && oracle::comparable(ms[i], ms[j]);
      expect += ok;
    }
    std::size_t got = 0;
    for_each_nest(oracle::family_of(f, 2).members(), [&](const std::vector<HfSet>&) {
      ++got;
      return true;
    });
    EXPECT_EQ(got, expect);
  }
}
