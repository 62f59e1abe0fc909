#include <gtest/gtest.h>

#include "mk/choice.hpp"
#include "mk/tukey.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mk;

namespace {

const HfSet n0 = numeral(0), n1 = numeral(1), n2 = numeral(2);
const Family pow2(power_set(n2));

const std::vector<ChoicePolicy> kPolicies = {ChoicePolicy::canonical(), ChoicePolicy::seeded(1),
                                             ChoicePolicy::seeded(2), ChoicePolicy::seeded(99)};

std::vector<oracle::Fam> nonempty_downsets(std::size_t atoms) {
  std::vector<oracle::Fam> out;
  for (oracle::Fam f = 1; f < (oracle::Fam{1} << (oracle::Mask{1} << atoms)); ++f)
    if (oracle::downward_closed(f, atoms)) out.push_back(f);
  return out;
}

}  // namespace

TEST(ChoicePolicy, ParseAndPrint) {
  EXPECT_EQ(ChoicePolicy::parse("canonical"), ChoicePolicy::canonical());
  EXPECT_EQ(ChoicePolicy::parse("seed:42"), ChoicePolicy::seeded(42));
  EXPECT_EQ(ChoicePolicy::parse("seed:42").to_string(), "seed:42");
  EXPECT_MK_ERROR(ChoicePolicy::parse("seed:"), ErrorCode::ParseError);
  EXPECT_MK_ERROR(ChoicePolicy::parse("seed:4x"), ErrorCode::ParseError);
  EXPECT_MK_ERROR(ChoicePolicy::parse("random"), ErrorCode::ParseError);
}

TEST(ChoiceFn, PicksMembersOnly) {
  const HfSet base = numeral(4);
  for (const auto& p : kPolicies) {
    ChoiceFn c(base, p);
    for (const auto& a : power_set(base)) {
      if (a.empty()) continue;
      EXPECT_TRUE(a.contains(c(a)));
      EXPECT_EQ(c(a), c(a));
    }
    EXPECT_MK_ERROR(c(HfSet()), ErrorCode::OutsideDomain);
    EXPECT_MK_ERROR(c(numeral(5)), ErrorCode::OutsideDomain);
    EXPECT_EQ(c.table().size(), 15u);
  }
  EXPECT_EQ(ChoiceFn(base)(HfSet{n1, n2}), n1);
}

TEST(ChoiceFn, FromTableValidates) {
  HfSet good{ordered_pair(n1, n0), ordered_pair(HfSet{n1}, n1), ordered_pair(n2, n1)};
  ChoiceFn c = ChoiceFn::from_table(good, n2);
  EXPECT_EQ(c(n2), n1);
  HfSet bad{ordered_pair(n1, n0), ordered_pair(HfSet{n1}, n0), ordered_pair(n2, n1)};
  EXPECT_MK_ERROR(ChoiceFn::from_table(bad, n2), ErrorCode::NotAChoiceFunction);
}

TEST(Frontier, Examples) {
  EXPECT_EQ(frontier(n1, pow2), n2);
  EXPECT_EQ(frontier(HfSet(), Family(n1)), HfSet());
  EXPECT_EQ(frontier(HfSet{n0}, Family(HfSet{HfSet(), HfSet{n0}, HfSet{n1}})), HfSet{n0});
}

TEST(Chi, Examples) {
  ChoiceFn c(n2);
  EXPECT_EQ(chi(HfSet(), pow2, c), HfSet{n0});
  EXPECT_EQ(chi(n2, pow2, c), n2);
  EXPECT_EQ(chi(HfSet(), Family(n1), ChoiceFn(HfSet())), HfSet());
  EXPECT_MK_ERROR(chi(numeral(3), pow2, c), ErrorCode::NotAMember);
  EXPECT_MK_ERROR(chi(HfSet(), pow2, ChoiceFn(numeral(3))), ErrorCode::NotAChoiceFunction);
}

// F ⊆ χ(F), and χ adds at most one point.
TEST(Chi, ExtendsByAtMostOnePoint) {
  for (auto fm : nonempty_downsets(3)) {
    Family f(oracle::family_of(fm, 3));
    for (const auto& p : kPolicies) {
      ChoiceFn c(f.atoms(), p);
      for (const auto& big_f : f.sets()) {
        HfSet x = chi(big_f, f, c);
        EXPECT_TRUE(subclass(big_f, x));
        EXPECT_LE(x.size(), big_f.size() + 1);
        EXPECT_TRUE(f.contains(x));
        EXPECT_EQ(x == big_f, set_difference(frontier(big_f, f), big_f).empty());
      }
    }
  }
}

TEST(TSubclass, Examples) {
  ChoiceFn c(n2);
  EXPECT_TRUE(is_t_subclass(pow2, pow2, c).holds);
  EXPECT_TRUE(is_t_subclass(least_t_subclass(pow2, c), pow2, c).holds);
  Verdict v = is_t_subclass(Family(set_difference(pow2.sets(), HfSet{HfSet()})), pow2, c);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.clause, "contains ∅");
}

TEST(LeastTSubclass, Examples) {
  EXPECT_EQ(least_t_subclass(pow2, ChoiceFn(n2)).sets(), (HfSet{HfSet(), n1, n2}));
  EXPECT_EQ(least_t_subclass(Family(n1), ChoiceFn(HfSet())).sets(), n1);
  EXPECT_TRUE(is_nest(least_t_subclass(pow2, ChoiceFn(n2))).holds);
}

// The χ-orbit of ∅ equals the literal intersection of all t-Subclasses.
TEST(LeastTSubclass, OrbitMatchesLiteralIntersection) {
  for (auto fm : nonempty_downsets(3)) {
    Family f(oracle::family_of(fm, 3));
    if (f.size() > kLiteralTSubclassLimit) continue;
    for (const auto& p : kPolicies) {
      ChoiceFn c(f.atoms(), p);
      Family f0 = tukey_state(f, c).f0;
      EXPECT_EQ(literal_least_t_subclass(f, c).sets(), f0.sets()) << to_text(f.sets());
      EXPECT_TRUE(is_nest(f0).holds);
    }
  }
}

TEST(Auxiliary, Examples) {
  auto st = tukey_state(pow2, ChoiceFn(n2));
  EXPECT_EQ(tukey_auxiliary(TukeyAux::Mu, n1, st).sets(), st.f0.sets());
  EXPECT_EQ(tukey_auxiliary(TukeyAux::F1, HfSet(), st).sets(), st.f0.sets());
  EXPECT_EQ(tukey_auxiliary(TukeyAux::Upsilon, n1, st).sets(), st.f0.sets());
  EXPECT_MK_ERROR(tukey_auxiliary(TukeyAux::Mu, HfSet{n1}, st), ErrorCode::NotAMember);
}

TEST(MaximalMember, Examples) {
  EXPECT_EQ(tukey_maximal_member(pow2), n2);
  EXPECT_EQ(tukey_maximal_member(Family(n1)), HfSet());
  EXPECT_MK_ERROR(tukey_maximal_member(Family(HfSet())), ErrorCode::EmptyFamily);
  EXPECT_MK_ERROR(tukey_maximal_member(Family(HfSet{n1})), ErrorCode::NotFiniteCharacter);
}

// Every nonempty downset over 3 atoms, every policy: the result is one of
// the brute-force maximal members and a χ fixed point.
TEST(MaximalMember, AgreesWithBruteForceOracle) {
  auto downsets = nonempty_downsets(3);
  EXPECT_EQ(downsets.size(), 19u);
  for (auto fm : downsets) {
    Family f(oracle::family_of(fm, 3));
    auto tops = oracle::maximal_members(fm, 3);
    for (const auto& p : kPolicies) {
      HfSet m = tukey_maximal_member(f, p);
      EXPECT_EQ(tops.count(oracle::mask_of(m)), 1u) << to_text(f.sets()) << " → " << to_text(m);
      EXPECT_EQ(chi(m, f, ChoiceFn(f.atoms(), p)), m);
    }
  }
}

TEST(Families, NestsInMembership) {
  const HfSet a{HfSet(), HfSet{n0}, HfSet{n1}};
  NestsIn nests(a);
  EXPECT_TRUE(nests.contains(HfSet()));
  EXPECT_TRUE(nests.contains(HfSet{HfSet(), HfSet{n0}}));
  EXPECT_FALSE(nests.contains(HfSet{HfSet{n0}, HfSet{n1}}));
  EXPECT_FALSE(nests.contains(HfSet{n2}));
}

TEST(Families, ExtensionFamilyAtoms) {
  // {F ∈ pow(2) : F ∪ {0} ∈ pow(2)} = pow(2); atoms are 0 and 1.
  ExtensionFamily<Family> e(pow2, HfSet{n0});
  EXPECT_EQ(e.atoms(), n2);
  // Over {∅,{0},{1}} anchored at {0}: only ∅ and {0} survive.
  ExtensionFamily<Family> g(Family(HfSet{HfSet(), HfSet{n0}, HfSet{n1}}), HfSet{n0});
  EXPECT_TRUE(g.contains(HfSet()));
  EXPECT_FALSE(g.contains(HfSet{n1}));
  EXPECT_EQ(g.atoms(), HfSet{n0});
}
