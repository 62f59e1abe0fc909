#pragma once

// Hereditarily finite sets in canonical form.
//
// Every value is immutable and canonical: members are deduplicated and kept
// sorted by the canonical total order (cardinality first, then
// lexicographic on the sorted member lists). Two values are equal exactly
// when they have the same extension. Membership is well-founded by
// construction since a value can only be built from existing values.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mk/error.hpp"

namespace mk {

namespace detail {

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

class HfSet {
 public:
  /// The empty set.
  HfSet() = default;

  HfSet(std::initializer_list<HfSet> members)
      : HfSet(of(std::vector<HfSet>(members))) {}

  /// Builds a set from an arbitrary list of members (sorts and dedups).
  static HfSet of(std::vector<HfSet> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return from_sorted(std::move(members));
  }

  /// Builds a set from members already strictly ascending in canonical order.
  static HfSet from_sorted(std::vector<HfSet> members) {
    if (members.empty()) return HfSet();
    std::uint64_t h = detail::mix64(members.size());
    for (const auto& m : members) h = detail::mix64(h ^ m.hash());
    HfSet s;
    s.node_ = std::make_shared<const Node>(Node{std::move(members), h});
    return s;
  }

  std::span<const HfSet> members() const {
    if (!node_) return {};
    return node_->members;
  }
  auto begin() const { return members().begin(); }
  auto end() const { return members().end(); }

  std::size_t size() const { return node_ ? node_->members.size() : 0; }
  bool empty() const { return !node_; }

  /// Structural hash; deterministic across runs and processes.
  std::uint64_t hash() const { return node_ ? node_->hash : 0x2545f4914f6cdd1dULL; }

  bool contains(const HfSet& x) const {
    auto ms = members();
    return std::binary_search(ms.begin(), ms.end(), x);
  }

  friend bool operator==(const HfSet& a, const HfSet& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    auto am = a.members();
    auto bm = b.members();
    for (std::size_t i = 0; i < am.size(); ++i)
      if (!(am[i] == bm[i])) return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto am = a.members();
    auto bm = b.members();
    for (std::size_t i = 0; i < am.size(); ++i)
      if (auto c = am[i] <=> bm[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  struct Node {
    std::vector<HfSet> members;
    std::uint64_t hash;
  };
  std::shared_ptr<const Node> node_;
};

struct HfSetHash {
  std::size_t operator()(const HfSet& s) const noexcept {
    return static_cast<std::size_t>(s.hash());
  }
};

/// An arbitrarily nested finite collection, possibly with duplicates and in
/// any order. Input to `canon`.
struct RawSet {
  std::vector<RawSet> members;
};

inline HfSet canon(const RawSet& raw) {
  std::vector<HfSet> ms;
  ms.reserve(raw.members.size());
  for (const auto& m : raw.members) ms.push_back(canon(m));
  return HfSet::of(std::move(ms));
}

/// Von Neumann numeral: 0 = ∅, n+1 = n ∪ {n}.
inline HfSet numeral(std::size_t n) {
  std::vector<HfSet> ms;
  ms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    HfSet next = HfSet::from_sorted(ms);
    ms.push_back(next);
  }
  return HfSet::from_sorted(std::move(ms));
}

/// Returns n when `s` is the von Neumann numeral n.
inline std::optional<std::size_t> as_numeral(const HfSet& s) {
  // Member i of numeral n is numeral i, whose members are exactly ms[0..i).
  auto ms = s.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].size() != i) return std::nullopt;
    auto inner = ms[i].members();
    for (std::size_t j = 0; j < i; ++j)
      if (!(inner[j] == ms[j])) return std::nullopt;
  }
  return ms.size();
}

// ---------------------------------------------------------------------------
// Membership and inclusion

inline bool member(const HfSet& x, const HfSet& y) { return y.contains(x); }

inline bool subclass(const HfSet& x, const HfSet& y, bool proper = false) {
  if (x.size() > y.size()) return false;
  auto xm = x.members();
  auto ym = y.members();
  if (!std::includes(ym.begin(), ym.end(), xm.begin(), xm.end())) return false;
  return !proper || x.size() < y.size();
}

inline bool proper_subclass(const HfSet& x, const HfSet& y) {
  return subclass(x, y, true);
}

// ---------------------------------------------------------------------------
// Boolean algebra

enum class SetOp { Union, Intersection, Difference };

inline HfSet set_algebra(SetOp kind, const HfSet& x, const HfSet& y) {
  auto xm = x.members();
  auto ym = y.members();
  std::vector<HfSet> out;
  switch (kind) {
    case SetOp::Union:
      out.reserve(xm.size() + ym.size());
      std::set_union(xm.begin(), xm.end(), ym.begin(), ym.end(), std::back_inserter(out));
      break;
    case SetOp::Intersection:
      std::set_intersection(xm.begin(), xm.end(), ym.begin(), ym.end(),
                            std::back_inserter(out));
      break;
    case SetOp::Difference:
      std::set_difference(xm.begin(), xm.end(), ym.begin(), ym.end(), std::back_inserter(out));
      break;
  }
  return HfSet::from_sorted(std::move(out));
}

inline HfSet set_union(const HfSet& x, const HfSet& y) { return set_algebra(SetOp::Union, x, y); }
inline HfSet set_intersection(const HfSet& x, const HfSet& y) {
  return set_algebra(SetOp::Intersection, x, y);
}
inline HfSet set_difference(const HfSet& x, const HfSet& y) {
  return set_algebra(SetOp::Difference, x, y);
}

inline bool disjoint(const HfSet& x, const HfSet& y) {
  auto xm = x.members();
  auto ym = y.members();
  auto i = xm.begin();
  auto j = ym.begin();
  while (i != xm.end() && j != ym.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

/// x ∪ {e}
inline HfSet adjoin(const HfSet& x, const HfSet& e) {
  if (x.contains(e)) return x;
  std::vector<HfSet> ms(x.begin(), x.end());
  ms.insert(std::upper_bound(ms.begin(), ms.end(), e), e);
  return HfSet::from_sorted(std::move(ms));
}

/// Subset of `x` selected by the low bits of `mask` (bit i = i-th member).
inline HfSet subset_by_mask(const HfSet& x, std::uint64_t mask) {
  std::vector<HfSet> ms;
  auto xm = x.members();
  for (std::size_t i = 0; i < xm.size(); ++i)
    if (mask >> i & 1U) ms.push_back(xm[i]);
  return HfSet::from_sorted(std::move(ms));
}

inline constexpr std::size_t kPowerSetLimit = 20;

inline HfSet power_set(const HfSet& x) {
  if (x.size() > kPowerSetLimit)
    throw Error(ErrorCode::SizeGuardExceeded,
                "power set of a " + std::to_string(x.size()) + "-element set");
  const std::uint64_t count = std::uint64_t{1} << x.size();
  std::vector<HfSet> subsets;
  subsets.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) subsets.push_back(subset_by_mask(x, mask));
  std::sort(subsets.begin(), subsets.end());
  return HfSet::from_sorted(std::move(subsets));
}

// ---------------------------------------------------------------------------
// Pairs

enum class PairKind { Singleton, Unordered, Ordered };

inline HfSet singleton(const HfSet& x) { return HfSet::from_sorted({x}); }
inline HfSet unordered_pair(const HfSet& x, const HfSet& y) { return HfSet::of({x, y}); }

/// Kuratowski pair ⟨x,y⟩ = {{x},{x,y}}.
inline HfSet ordered_pair(const HfSet& x, const HfSet& y) {
  return unordered_pair(singleton(x), unordered_pair(x, y));
}

inline HfSet pairing(PairKind kind, const HfSet& x, const std::optional<HfSet>& y = std::nullopt) {
  if (kind == PairKind::Singleton) return singleton(x);
  if (!y) throw Error(ErrorCode::MalformedInstance, "pairing needs a second component");
  return kind == PairKind::Unordered ? unordered_pair(x, *y) : ordered_pair(x, *y);
}

/// Decodes a Kuratowski pair; nullopt when `z` is not one.
inline std::optional<std::pair<HfSet, HfSet>> decode_pair(const HfSet& z) {
  if (z.size() == 1) {
    const HfSet& only = z.members()[0];
    if (only.size() != 1) return std::nullopt;
    return std::pair{only.members()[0], only.members()[0]};
  }
  if (z.size() != 2) return std::nullopt;
  // Canonical order puts the smaller-cardinality member first.
  const HfSet& small = z.members()[0];
  const HfSet& big = z.members()[1];
  if (small.size() != 1 || big.size() != 2) return std::nullopt;
  const HfSet& x = small.members()[0];
  if (!big.contains(x)) return std::nullopt;
  const HfSet& y = big.members()[0] == x ? big.members()[1] : big.members()[0];
  return std::pair{x, y};
}

inline bool is_pair(const HfSet& z) { return decode_pair(z).has_value(); }

enum class Coordinate { First, Second };

inline HfSet projection(Coordinate kind, const HfSet& z) {
  auto p = decode_pair(z);
  if (!p) throw Error(ErrorCode::NotAPair, "value does not decode as an ordered pair");
  return kind == Coordinate::First ? p->first : p->second;
}

inline HfSet fst(const HfSet& z) { return projection(Coordinate::First, z); }
inline HfSet snd(const HfSet& z) { return projection(Coordinate::Second, z); }

// ---------------------------------------------------------------------------
// Aggregates

enum class Aggregate { BigUnion, BigIntersection };

inline HfSet big_union(const HfSet& x) {
  std::vector<HfSet> all;
  for (const auto& m : x) all.insert(all.end(), m.begin(), m.end());
  return HfSet::of(std::move(all));
}

inline HfSet big_intersection(const HfSet& x) {
  if (x.empty())
    throw Error(ErrorCode::EmptyIntersection, "the intersection of ∅ is the universe class");
  HfSet acc = x.members()[0];
  for (const auto& m : x.members().subspan(1)) acc = set_intersection(acc, m);
  return acc;
}

inline HfSet aggregate(Aggregate kind, const HfSet& x) {
  return kind == Aggregate::BigUnion ? big_union(x) : big_intersection(x);
}

inline HfSet cartesian(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(ordered_pair(a, b));
  return HfSet::of(std::move(out));
}

// ---------------------------------------------------------------------------
// Relations and functions

/// True when every member of `r` is an ordered pair.
inline bool is_relation(const HfSet& r) {
  return std::all_of(r.begin(), r.end(), [](const HfSet& z) { return is_pair(z); });
}

inline std::vector<std::pair<HfSet, HfSet>> pairs_of(const HfSet& r) {
  std::vector<std::pair<HfSet, HfSet>> out;
  out.reserve(r.size());
  for (const auto& z : r) {
    auto p = decode_pair(z);
    if (!p) throw Error(ErrorCode::NotARelation, "member is not an ordered pair");
    out.push_back(std::move(*p));
  }
  return out;
}

inline bool is_function(const HfSet& f) {
  if (!is_relation(f)) return false;
  auto ps = pairs_of(f);
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (ps[i].first == ps[i - 1].first) return false;
  return true;
}

inline HfSet domain(const HfSet& f) {
  std::vector<HfSet> out;
  for (auto& [a, b] : pairs_of(f)) out.push_back(a);
  return HfSet::of(std::move(out));
}

inline HfSet range(const HfSet& f) {
  std::vector<HfSet> out;
  for (auto& [a, b] : pairs_of(f)) out.push_back(b);
  return HfSet::of(std::move(out));
}

/// f[x]
inline HfSet value(const HfSet& f, const HfSet& x) {
  std::optional<HfSet> found;
  for (auto& [a, b] : pairs_of(f)) {
    if (!(a == x)) continue;
    if (found && !(*found == b))
      throw Error(ErrorCode::NotAFunction, "two values for the same argument");
    found = b;
  }
  if (!found) throw Error(ErrorCode::OutsideDomain, "argument is not in the domain");
  return *found;
}

struct FunctionSummary {
  bool is_function;
  HfSet domain;
  HfSet range;
};

inline FunctionSummary function_suite(const HfSet& f) {
  return {is_function(f), domain(f), range(f)};
}

// ---------------------------------------------------------------------------
// Regularity and the cumulative hierarchy

/// Some y ∈ x with x ∩ y = ∅ (first in canonical order).
inline HfSet regularity_witness(const HfSet& x) {
  if (x.empty()) throw Error(ErrorCode::EmptyInput, "regularity needs a nonempty set");
  for (const auto& y : x)
    if (disjoint(x, y)) return y;
  throw Error(ErrorCode::InvariantViolated, "no ∈-minimal member");
}

inline constexpr std::size_t kDefaultRankCap = 4;

/// V_k: V_0 = ∅, V_{i+1} = pow(V_i).
inline HfSet rank_universe(std::size_t k, std::size_t cap = kDefaultRankCap) {
  if (k > cap || k > 5)
    throw Error(ErrorCode::RankTooLarge, "V_" + std::to_string(k) + " exceeds the rank cap");
  HfSet v;
  for (std::size_t i = 0; i < k; ++i) v = power_set(v);
  return v;
}

// ---------------------------------------------------------------------------
// Text

/// Compact human-readable rendering: numerals as digits, pairs as ⟨a,b⟩.
inline std::string to_text(const HfSet& s) {
  if (auto n = as_numeral(s)) return n == 0 ? "∅" : std::to_string(*n);
  if (auto p = decode_pair(s)) return "⟨" + to_text(p->first) + "," + to_text(p->second) + "⟩";
  std::string out = "{";
  bool first = true;
  for (const auto& m : s) {
    if (!first) out += ",";
    first = false;
    out += to_text(m);
  }
  return out + "}";
}

}  // namespace mk
