#pragma once

// Exhaustive, duplicate-free enumeration of small structures over the
// numeral carriers n = {0, ..., n−1}. Orders are labeled, not reduced up to
// isomorphism. Output order is fixed by the bitmask that generates each
// instance.

#include <cstdint>
#include <string>
#include <vector>

#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/order.hpp"

namespace mk::harness {

inline constexpr std::size_t kMaxPosetPoints = 4;
inline constexpr std::size_t kMaxFamilyAtoms = 3;

struct OrderInstance {
  HfSet carrier;
  BinRel le;
};

namespace detail {

inline void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw Error(ErrorCode::SizeGuardExceeded,
                std::string(what) + " over " + std::to_string(n) + " points, guard " + std::to_string(limit));
}

/// Reflexive relations on n, one per mask over the off-diagonal pairs.
template <class Keep>
std::vector<OrderInstance> reflexive_relations(std::size_t n, Keep keep) {
  const HfSet x = numeral(n);
  std::vector<std::pair<HfSet, HfSet>> diagonal, off;
  for (const auto& a : x)
    for (const auto& b : x) (a == b ? diagonal : off).emplace_back(a, b);
  std::vector<OrderInstance> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << off.size()); ++m) {
    auto ps = diagonal;
    for (std::size_t i = 0; i < off.size(); ++i)
      if (m >> i & 1U) ps.push_back(off[i]);
    BinRel le = BinRel::from_pairs(ps);
    if (keep(le, x)) out.push_back({x, std::move(le)});
  }
  return out;
}

/// Every family of subsets of n atoms satisfying `keep`.
template <class Keep>
std::vector<HfSet> families_where(std::size_t n, Keep keep) {
  const HfSet subsets = power_set(numeral(n));
  std::vector<HfSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << subsets.size()); ++m) {
    HfSet f = subset_by_mask(subsets, m);
    if (keep(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

inline std::vector<OrderInstance> enumerate_posets(std::size_t n) {
  detail::guard(n, kMaxPosetPoints, "posets");
  return detail::reflexive_relations(n, [](const BinRel& le, const HfSet& x) { return is_partial_order(le, x).holds; });
}

inline std::vector<OrderInstance> enumerate_total_orders(std::size_t n) {
  detail::guard(n, kMaxPosetPoints, "total orders");
  return detail::reflexive_relations(n, [](const BinRel& le, const HfSet& x) { return is_total_order(le, x).holds; });
}

/// Families over n atoms closed under subsets; includes the empty family.
inline std::vector<HfSet> enumerate_downsets(std::size_t n) {
  detail::guard(n, kMaxFamilyAtoms, "downsets");
  return detail::families_where(n, [](const HfSet& f) {
    for (const auto& s : f)
      for (const auto& t : power_set(s))
        if (!f.contains(t)) return false;
    return true;
  });
}

inline std::vector<HfSet> enumerate_families(std::size_t n) {
  detail::guard(n, kMaxFamilyAtoms, "families");
  return detail::families_where(n, [](const HfSet&) { return true; });
}

inline std::vector<HfSet> enumerate_nests(std::size_t n) {
  detail::guard(n, kMaxFamilyAtoms, "nests");
  return detail::families_where(n, [](const HfSet& f) { return is_nest(Family(f)).holds; });
}

/// Families of nonempty, pairwise disjoint subsets of n atoms.
inline std::vector<HfSet> enumerate_disjoint_families(std::size_t n) {
  detail::guard(n, kMaxFamilyAtoms, "disjoint families");
  return detail::families_where(n, [](const HfSet& f) {
    if (f.contains(HfSet())) return false;
    auto ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (!disjoint(ms[i], ms[j])) return false;
    return true;
  });
}

enum class EnumKind { Posets, TotalOrders, Downsets, Families, Nests, DisjointFamilies };

inline EnumKind parse_enum_kind(const std::string& s) {
  if (s == "posets") return EnumKind::Posets;
  if (s == "totalorders") return EnumKind::TotalOrders;
  if (s == "downsets") return EnumKind::Downsets;
  if (s == "families") return EnumKind::Families;
  if (s == "nests") return EnumKind::Nests;
  if (s == "disjoint_families") return EnumKind::DisjointFamilies;
  throw Error(ErrorCode::ParseError, "unknown enumeration kind '" + s + "'");
}

/// Uniform view: orders come back as ⟨X, ≤⟩.
inline std::vector<HfSet> enumerate(EnumKind kind, std::size_t n) {
  auto pairs = [](const std::vector<OrderInstance>& v) {
    std::vector<HfSet> out;
    for (const auto& o : v) out.push_back(ordered_pair(o.carrier, o.le.pairs()));
    return out;
  };
  switch (kind) {
    case EnumKind::Posets: return pairs(enumerate_posets(n));
    case EnumKind::TotalOrders: return pairs(enumerate_total_orders(n));
    case EnumKind::Downsets: return enumerate_downsets(n);
    case EnumKind::Families: return enumerate_families(n);
    case EnumKind::Nests: return enumerate_nests(n);
    case EnumKind::DisjointFamilies: return enumerate_disjoint_families(n);
  }
  return {};
}

}  // namespace mk::harness
