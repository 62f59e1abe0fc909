#pragma once

// Predicates over families of sets and over relations encoded as sets of
// Kuratowski pairs: choice functions, maximal/minimal members, nests, finite
// character, partial/total/well orders, bounds, chains, initial segments.
//
// Orders are non-strict throughout. Definitions that are conditional on a
// nonempty family or carrier raise an error on empty input instead of
// holding vacuously.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mk/error.hpp"
#include "mk/hfs.hpp"

namespace mk {

/// Outcome of a checked predicate: on failure names the violated clause and
/// carries the elements that witness it.
struct Verdict {
  bool holds = true;
  std::string clause;
  std::vector<HfSet> witness;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string clause, std::vector<HfSet> witness = {}) {
    return {false, std::move(clause), std::move(witness)};
  }
};

/// A set of sets.
class Family {
 public:
  Family() = default;
  explicit Family(HfSet sets) : sets_(std::move(sets)) {}

  const HfSet& sets() const { return sets_; }
  bool contains(const HfSet& s) const { return sets_.contains(s); }
  /// ⋃f
  HfSet atoms() const { return big_union(sets_); }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  HfSet sets_;
};

/// A binary relation: a set whose members are all ordered pairs.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(HfSet pairs) : pairs_(std::move(pairs)) {
    if (!is_relation(pairs_)) throw Error(ErrorCode::NotARelation, "member is not an ordered pair");
  }

  static BinRel from_pairs(const std::vector<std::pair<HfSet, HfSet>>& ps) {
    std::vector<HfSet> ms;
    ms.reserve(ps.size());
    for (const auto& [a, b] : ps) ms.push_back(ordered_pair(a, b));
    return BinRel(HfSet::of(std::move(ms)));
  }

  const HfSet& pairs() const { return pairs_; }
  bool holds(const HfSet& a, const HfSet& b) const { return pairs_.contains(ordered_pair(a, b)); }

  /// le ∩ (A × A)
  BinRel restrict(const HfSet& a) const {
    std::vector<HfSet> ms;
    for (const auto& z : pairs_) {
      auto p = decode_pair(z);
      if (a.contains(p->first) && a.contains(p->second)) ms.push_back(z);
    }
    BinRel r;
    r.pairs_ = HfSet::from_sorted(std::move(ms));
    return r;
  }

  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  HfSet pairs_;
};

/// x le y
inline bool rrelation(const HfSet& x, const BinRel& le, const HfSet& y) { return le.holds(x, y); }

enum class Extreme { Max, Min };
enum class BoundKind { Upper, Lower };

// ---------------------------------------------------------------------------
// Enumeration helpers

/// Visits every nest (⊆-chain) drawn from `items`, the empty nest included,
/// as a list in ascending item order. `visit` returns false to stop.
/// Returns false when stopped early or after `budget` nests.
template <class Visit>
bool for_each_nest(std::span<const HfSet> items, Visit&& visit,
                   std::size_t budget = std::numeric_limits<std::size_t>::max()) {
  std::vector<HfSet> current;
  std::size_t seen = 0;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (seen++ >= budget) return false;
    if (!visit(static_cast<const std::vector<HfSet>&>(current))) return false;
    for (std::size_t i = start; i < items.size(); ++i) {
      bool comparable = true;
      for (const auto& c : current)
        if (!subclass(c, items[i]) && !subclass(items[i], c)) {
          comparable = false;
          break;
        }
      if (!comparable) continue;
      current.push_back(items[i]);
      bool go_on = dfs(i + 1);
      current.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return dfs(0);
}

namespace detail {

/// Dense view of a relation over an indexed carrier.
struct RelMatrix {
  std::vector<HfSet> elems;
  std::vector<char> rel;  // rel[i*n+j] = elems[i] le elems[j]
  std::vector<std::pair<HfSet, HfSet>> outside;  // pairs not inside X × X

  std::size_t n() const { return elems.size(); }
  bool at(std::size_t i, std::size_t j) const { return rel[i * n() + j] != 0; }

  RelMatrix(const BinRel& le, const HfSet& x) : elems(x.begin(), x.end()), rel(x.size() * x.size(), 0) {
    for (auto& [a, b] : pairs_of(le.pairs())) {
      auto ia = std::lower_bound(elems.begin(), elems.end(), a);
      auto ib = std::lower_bound(elems.begin(), elems.end(), b);
      if (ia == elems.end() || !(*ia == a) || ib == elems.end() || !(*ib == b)) {
        outside.emplace_back(a, b);
        continue;
      }
      rel[static_cast<std::size_t>(ia - elems.begin()) * n() +
          static_cast<std::size_t>(ib - elems.begin())] = 1;
    }
  }
};

}  // namespace detail

/// Visits every nonempty chain of (X, le) as a list of elements of X.
/// `visit` returns false to stop. Requires nothing of le beyond being a
/// relation; comparability is tested with le in either direction.
template <class Visit>
bool for_each_chain(const HfSet& x, const BinRel& le, Visit&& visit) {
  detail::RelMatrix m(le, x);
  std::vector<std::size_t> current;
  std::vector<HfSet> chain;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    for (std::size_t i = start; i < m.n(); ++i) {
      bool ok = true;
      for (auto c : current)
        if (!m.at(c, i) && !m.at(i, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(i);
      chain.push_back(m.elems[i]);
      bool go_on = visit(static_cast<const std::vector<HfSet>&>(chain)) && dfs(i + 1);
      current.pop_back();
      chain.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return dfs(0);
}

// ---------------------------------------------------------------------------
// Families

/// ε is a function, dom(ε) = pow(X) ∼ {∅}, ran(ε) ⊆ X and ε(A) ∈ A.
inline Verdict is_choice_function(const HfSet& eps, const HfSet& x) {
  if (!is_function(eps)) return Verdict::fail("function");
  const HfSet expected = set_difference(power_set(x), singleton(HfSet()));
  const HfSet dom = domain(eps);
  if (!(dom == expected)) {
    auto missing = set_difference(expected, dom);
    auto extra = set_difference(dom, expected);
    return Verdict::fail("domain", {missing, extra});
  }
  for (const auto& y : range(eps))
    if (!x.contains(y)) return Verdict::fail("range", {y});
  for (const auto& a : dom)
    if (!a.contains(value(eps, a))) return Verdict::fail("chosen member", {a, value(eps, a)});
  return Verdict::pass();
}

/// F is a maximal (minimal) member of f: F ∈ f and no member of f properly
/// contains (is properly contained in) F.
inline Verdict extreme_member(Extreme kind, const HfSet& big_f, const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "extreme member of an empty family");
  if (!f.contains(big_f)) return Verdict::fail("membership", {big_f});
  for (const auto& e : f.sets()) {
    bool beats = kind == Extreme::Max ? proper_subclass(big_f, e) : proper_subclass(e, big_f);
    if (beats) return Verdict::fail(kind == Extreme::Max ? "proper superset" : "proper subset", {e});
  }
  return Verdict::pass();
}

inline Verdict is_nest(const Family& n) {
  auto ms = n.sets().members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!subclass(ms[i], ms[j]) && !subclass(ms[j], ms[i]))
        return Verdict::fail("comparability", {ms[i], ms[j]});
  return Verdict::pass();
}

inline constexpr std::size_t kFiniteCharacterPool = 16;

/// Both clauses of finite character. Every set here is finite, so
/// clause (1) is downward closure; clause (2) is checked literally over
/// all subsets of ⋃f ∪ ambient.
inline Verdict is_finite_character(const Family& f, const HfSet& ambient = HfSet()) {
  for (const auto& big_f : f.sets())
    for (const auto& z : power_set(big_f))
      if (!f.contains(z)) return Verdict::fail("(1) finite subset", {big_f, z});

  const HfSet pool = set_union(f.atoms(), ambient);
  if (pool.size() > kFiniteCharacterPool)
    throw Error(ErrorCode::SizeGuardExceeded, "finite-character pool of " +
                                                  std::to_string(pool.size()) + " elements");
  const std::uint64_t count = std::uint64_t{1} << pool.size();
  // every_subset_in[m]: every subset of the mask-m set belongs to f.
  std::vector<char> in_f(count), every_subset_in(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    in_f[m] = f.contains(subset_by_mask(pool, m));
    bool all = in_f[m];
    for (std::size_t i = 0; all && i < pool.size(); ++i)
      if (m >> i & 1U) all = every_subset_in[m ^ (std::uint64_t{1} << i)];
    every_subset_in[m] = all;
  }
  for (std::uint64_t m = 0; m < count; ++m)
    if (every_subset_in[m] && !in_f[m]) return Verdict::fail("(2) finite subsets", {subset_by_mask(pool, m)});
  return Verdict::pass();
}

/// For a nonempty family of finite character: B ⊆ A ∈ f ⟹ B ∈ f, and the
/// union of every nest g ⊆ f belongs to f.
inline Verdict finite_char_properties(const Family& f) {
  if (f.empty() || !is_finite_character(f))
    throw Error(ErrorCode::PreconditionFailed, "needs a nonempty family of finite character");
  for (const auto& a : f.sets())
    for (const auto& b : power_set(a))
      if (!f.contains(b)) return Verdict::fail("subset closure", {a, b});
  Verdict out = Verdict::pass();
  for_each_nest(f.sets().members(), [&](const std::vector<HfSet>& g) {
    HfSet u = big_union(HfSet::from_sorted(g));
    if (f.contains(u)) return true;
    out = Verdict::fail("nest union", {HfSet::from_sorted(g), u});
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Orders

struct PartialOrderReport {
  bool relation_on_carrier = true;
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  Verdict verdict;
};

inline PartialOrderReport partial_order_report(const BinRel& le, const HfSet& x) {
  detail::RelMatrix m(le, x);
  PartialOrderReport r;
  auto first_fail = [&](std::string clause, std::vector<HfSet> w) {
    if (r.verdict) r.verdict = Verdict::fail(std::move(clause), std::move(w));
  };
  if (!m.outside.empty()) {
    r.relation_on_carrier = false;
    first_fail("relation on carrier", {m.outside[0].first, m.outside[0].second});
  }
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i)
    if (!m.at(i, i)) {
      r.reflexive = false;
      first_fail("reflexivity", {m.elems[i]});
      break;
    }
  for (std::size_t i = 0; i < n && r.antisymmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) && m.at(j, i)) {
        r.antisymmetric = false;
        first_fail("antisymmetry", {m.elems[i], m.elems[j]});
        break;
      }
  for (std::size_t i = 0; i < n && r.transitive; ++i)
    for (std::size_t j = 0; j < n && r.transitive; ++j) {
      if (!m.at(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (m.at(j, k) && !m.at(i, k)) {
          r.transitive = false;
          first_fail("transitivity", {m.elems[i], m.elems[j], m.elems[k]});
          break;
        }
    }
  return r;
}

inline Verdict is_partial_order(const BinRel& le, const HfSet& x) {
  return partial_order_report(le, x).verdict;
}

inline Verdict is_total_order(const BinRel& le, const HfSet& x) {
  if (auto po = is_partial_order(le, x); !po) return po;
  detail::RelMatrix m(le, x);
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = i + 1; j < m.n(); ++j)
      if (!m.at(i, j) && !m.at(j, i)) return Verdict::fail("connex", {m.elems[i], m.elems[j]});
  return Verdict::pass();
}

/// x is a maximal (minimal) element of X: x ∈ X and no y ∈ X has
/// x le y, x ≠ y (y le x, y ≠ x).
inline Verdict extreme_element(Extreme kind, const HfSet& x, const HfSet& carrier, const BinRel& le) {
  if (carrier.empty()) throw Error(ErrorCode::EmptyCarrier, "extreme element of an empty carrier");
  if (!carrier.contains(x)) return Verdict::fail("membership", {x});
  for (const auto& y : carrier) {
    if (y == x) continue;
    bool beats = kind == Extreme::Max ? le.holds(x, y) : le.holds(y, x);
    if (beats) return Verdict::fail(kind == Extreme::Max ? "strictly above" : "strictly below", {y});
  }
  return Verdict::pass();
}

inline Verdict is_bound(BoundKind kind, const HfSet& x, const HfSet& a, const HfSet& carrier,
                        const BinRel& le) {
  if (!is_partial_order(le, carrier))
    throw Error(ErrorCode::NotAPartialOrder, "bounds need a partial order");
  if (carrier.empty()) throw Error(ErrorCode::EmptyCarrier, "bounds need a nonempty carrier");
  if (!carrier.contains(x)) return Verdict::fail("membership", {x});
  if (!subclass(a, carrier)) return Verdict::fail("subset of carrier", {a});
  for (const auto& e : a) {
    bool ok = kind == BoundKind::Upper ? le.holds(e, x) : le.holds(x, e);
    if (!ok) return Verdict::fail("comparison", {e});
  }
  return Verdict::pass();
}

/// A is a nonempty subset of X on which le ∩ (A × A) is a total order.
inline Verdict is_chain(const HfSet& a, const HfSet& carrier, const BinRel& le) {
  if (!is_partial_order(le, carrier))
    throw Error(ErrorCode::NotAPartialOrder, "chains need a partial order");
  if (!subclass(a, carrier)) return Verdict::fail("subset of carrier", {a});
  if (a.empty()) return Verdict::fail("nonempty");
  return is_total_order(le.restrict(a), a);
}

inline constexpr std::size_t kWellOrderSubsetLimit = 20;

/// Total order on X in which every nonempty subset of X has a minimal
/// element; the subsets are enumerated exhaustively.
inline Verdict is_well_order(const BinRel& le, const HfSet& x) {
  if (auto t = is_total_order(le, x); !t) return t;
  if (x.size() > kWellOrderSubsetLimit)
    throw Error(ErrorCode::SizeGuardExceeded, "well-order check over " + std::to_string(x.size()) + " elements");
  detail::RelMatrix m(le, x);
  const std::size_t n = m.n();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool found = false;
    for (std::size_t z = 0; z < n && !found; ++z) {
      if (!(mask >> z & 1U)) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y)
        if ((mask >> y & 1U) && y != z && m.at(y, z)) minimal = false;
      found = minimal;
    }
    if (!found) return Verdict::fail("least element", {subset_by_mask(x, mask)});
  }
  return Verdict::pass();
}

/// Y ⊆ X closed downward under le within a well-ordered X.
inline Verdict is_initial_segment(const HfSet& y, const HfSet& x, const BinRel& le) {
  if (!is_well_order(le, x)) throw Error(ErrorCode::NotAWellOrder, "initial segments need a well order");
  if (!subclass(y, x)) return Verdict::fail("subset", {y});
  for (const auto& u : x)
    for (const auto& v : y)
      if (le.holds(u, v) && !y.contains(u)) return Verdict::fail("downward closure", {u, v});
  return Verdict::pass();
}

/// {⟨a,b⟩ : a,b ∈ X, a ≤ b in the canonical set order}.
inline BinRel canonical_well_order(const HfSet& x) {
  std::vector<std::pair<HfSet, HfSet>> ps;
  auto ms = x.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j) ps.emplace_back(ms[i], ms[j]);
  return BinRel::from_pairs(ps);
}

}  // namespace mk
