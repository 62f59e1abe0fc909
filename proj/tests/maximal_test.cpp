#include <gtest/gtest.h>

#include "mk/maximal.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mk;

namespace {

const HfSet n0 = numeral(0), n1 = numeral(1), n2 = numeral(2);
const HfSet s0{n0}, s1{n1};

const std::vector<ChoicePolicy> kPolicies = {ChoicePolicy::canonical(), ChoicePolicy::seeded(5),
                                             ChoicePolicy::seeded(77)};

bool pairwise_disjoint(const std::vector<oracle::Mask>& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (ms[i] & ms[j]) return false;
  return true;
}

}  // namespace

TEST(MaximalContaining, ExtendsAnchorInEveryDownset) {
  for (oracle::Fam fm = 1; fm < 256; ++fm) {
    if (!oracle::downward_closed(fm, 3)) continue;
    Family f(oracle::family_of(fm, 3));
    auto tops = oracle::maximal_members(fm, 3);
    for (const auto& a : f.sets())
      for (const auto& p : kPolicies) {
        HfSet m = maximal_member_containing(f, a, p);
        EXPECT_TRUE(subclass(a, m));
        EXPECT_EQ(tops.count(oracle::mask_of(m)), 1u);
      }
  }
  EXPECT_MK_ERROR(maximal_member_containing(Family(power_set(n2)), numeral(3)), ErrorCode::NotAMember);
}

TEST(Hausdorff, Examples) {
  const HfSet a{HfSet(), s0, s1};
  EXPECT_EQ(hausdorff_extend_nest(a, HfSet{HfSet()}), (HfSet{HfSet(), s0}));
  HfSet u = hausdorff_extend_nest(a, HfSet());
  EXPECT_TRUE(is_nest(Family(u)).holds);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_MK_ERROR(hausdorff_extend_nest(a, HfSet{s0, s1}), ErrorCode::NotANest);
  EXPECT_MK_ERROR(hausdorff_extend_nest(a, HfSet{n2}), ErrorCode::NotASubfamily);
}

// Over every family on 3 atoms, extending ∅ and each singleton nest lands
// on one of the brute-force maximal nests.
TEST(Hausdorff, MatchesMaximalNestOracle) {
  for (oracle::Fam fm = 0; fm < 256; ++fm) {
    const auto ms = oracle::members(fm, 3);
    const HfSet a = oracle::family_of(fm, 3);
    std::vector<std::set<oracle::Mask>> anchors{{}};
    for (auto s : ms) anchors.push_back({s});
    for (const auto& n : anchors) {
      auto expect = oracle::maximal_nests_containing(ms, n);
      HfSet u = hausdorff_extend_nest(a, oracle::family_of(std::vector<oracle::Mask>(n.begin(), n.end())),
                                      kPolicies[fm % kPolicies.size()]);
      EXPECT_EQ(expect.count(oracle::masks_of(u)), 1u) << to_text(a) << " → " << to_text(u);
    }
  }
}

TEST(MaxPrinciple, Examples) {
  EXPECT_EQ(maximal_principle_member(power_set(n2)), n2);
  HfSet m = maximal_principle_member(HfSet{s0, s1});
  EXPECT_TRUE(m == s0 || m == s1);
  EXPECT_TRUE(extreme_member(Extreme::Max, m, Family(HfSet{s0, s1})).holds);
  EXPECT_MK_ERROR(maximal_principle_member(HfSet()), ErrorCode::EmptyFamily);
}

TEST(MaxPrinciple, MatchesMaximalMemberOracle) {
  for (oracle::Fam fm = 1; fm < 256; ++fm) {
    auto tops = oracle::maximal_members(fm, 3);
    for (const auto& p : kPolicies) {
      HfSet m = maximal_principle_member(oracle::family_of(fm, 3), p);
      EXPECT_EQ(tops.count(oracle::mask_of(m)), 1u);
    }
  }
}

TEST(NestHypothesis, ExhaustiveWithinBudget) {
  auto r = check_nest_hypothesis(power_set(n2), HfSet());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_GT(r.nests_checked, 1u);
  auto partial = check_nest_hypothesis(power_set(n2), HfSet(), 2);
  EXPECT_FALSE(partial.exhaustive);
}

TEST(Transversal, FamilyMatchesOracle) {
  const HfSet a{s0, HfSet{n1, n2}};
  // K ⊆ {0,1,2} meeting each member in at most one point.
  std::set<oracle::Mask> expect;
  for (oracle::Mask k = 0; k < 8; ++k)
    if (__builtin_popcount(k & 0b110) <= 1) expect.insert(k);
  EXPECT_EQ(oracle::masks_of(transversal_family(a)), expect);
  EXPECT_TRUE(in_partial_transversal(HfSet{n0, n1}, a, a));
  EXPECT_FALSE(in_partial_transversal(HfSet{n1, n2}, a, a));
}

TEST(Zermelo, Examples) {
  const HfSet a{s0, HfSet{n1, n2}};
  HfSet c = zermelo_transversal(a);
  EXPECT_TRUE(c == (HfSet{n0, n1}) || c == (HfSet{n0, n2}));
  for (const auto& d : a) EXPECT_EQ(set_intersection(d, c).size(), 1u);
  EXPECT_EQ(zermelo_transversal(HfSet()), HfSet());
  EXPECT_MK_ERROR(zermelo_transversal(HfSet{HfSet()}), ErrorCode::EmptyMemberPresent);
  EXPECT_MK_ERROR(zermelo_transversal(HfSet{n1, n2}), ErrorCode::NotDisjoint);
  EXPECT_MK_ERROR(zermelo_transversal(HfSet{numeral(13)}), ErrorCode::SizeGuardExceeded);
}

TEST(Zermelo, EveryDisjointFamilyOverFourAtoms) {
  std::size_t checked = 0;
  for (oracle::Fam fm = 0; fm < (oracle::Fam{1} << 16); ++fm) {
    if (fm & 1U) continue;  // ∅ ∈ A
    auto ms = oracle::members(fm, 4);
    if (!pairwise_disjoint(ms)) continue;
    const HfSet a = oracle::family_of(fm, 4);
    for (const auto& p : kPolicies) {
      oracle::Mask c = oracle::mask_of(zermelo_transversal(a, p));
      oracle::Mask all = 0;
      for (auto d : ms) {
        EXPECT_EQ(__builtin_popcount(c & d), 1);
        all |= d;
      }
      EXPECT_EQ(c & ~all, 0u);
    }
    ++checked;
  }
  // Partitions of some subset of 4 atoms: Bell(5).
  EXPECT_EQ(checked, 52u);
}
