#pragma once

// Brute-force oracles over bitmask models. Nothing here calls the library's
// order, family or construction code; only HfSet constructors are used to
// translate between the two worlds.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mk/hfs.hpp"

namespace oracle {

using Mask = std::uint32_t;

/// n×n relation as a row-major bit matrix: bit i*n+j means i ≤ j.
struct Rel {
  std::size_t n = 0;
  std::uint64_t bits = 0;
  bool at(std::size_t i, std::size_t j) const { return bits >> (i * n + j) & 1U; }
};

inline bool reflexive(const Rel& r) {
  for (std::size_t i = 0; i < r.n; ++i)
    if (!r.at(i, i)) return false;
  return true;
}

inline bool antisymmetric(const Rel& r) {
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j)
      if (i != j && r.at(i, j) && r.at(j, i)) return false;
  return true;
}

inline bool transitive(const Rel& r) {
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j)
      for (std::size_t k = 0; k < r.n; ++k)
        if (r.at(i, j) && r.at(j, k) && !r.at(i, k)) return false;
  return true;
}

inline bool partial_order(const Rel& r) { return reflexive(r) && antisymmetric(r) && transitive(r); }

inline bool total(const Rel& r) {
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j)
      if (!r.at(i, j) && !r.at(j, i)) return false;
  return true;
}

/// Every nonempty subset has a least element; requires a partial order.
inline bool well_order(const Rel& r) {
  if (!partial_order(r)) return false;
  for (Mask s = 1; s < (Mask{1} << r.n); ++s) {
    bool found = false;
    for (std::size_t m = 0; m < r.n && !found; ++m) {
      if (!(s >> m & 1U)) continue;
      bool least = true;
      for (std::size_t k = 0; k < r.n; ++k)
        if (s >> k & 1U && !r.at(m, k)) least = false;
      found = least;
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<Rel> all_relations(std::size_t n) {
  std::vector<Rel> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n * n)); ++b) out.push_back({n, b});
  return out;
}

inline std::size_t count_posets(std::size_t n) {
  std::size_t c = 0;
  for (const auto& r : all_relations(n)) c += partial_order(r);
  return c;
}

inline std::size_t count_total_orders(std::size_t n) {
  std::size_t c = 0;
  for (const auto& r : all_relations(n)) c += partial_order(r) && total(r);
  return c;
}

/// Maximal points of a poset.
inline std::set<std::size_t> maximal_points(const Rel& r) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < r.n; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < r.n; ++j)
      if (j != i && r.at(i, j)) top = false;
    if (top) out.insert(i);
  }
  return out;
}

/// A family over `atoms` atoms: bit s set iff the subset with mask s belongs.
using Fam = std::uint64_t;

inline bool downward_closed(Fam f, std::size_t atoms) {
  for (Mask s = 0; s < (Mask{1} << atoms); ++s) {
    if (!(f >> s & 1U)) continue;
    for (std::size_t a = 0; a < atoms; ++a)
      if (s >> a & 1U && !(f >> (s & ~(Mask{1} << a)) & 1U)) return false;
  }
  return true;
}

inline std::size_t count_downsets(std::size_t atoms) {
  std::size_t c = 0;
  for (Fam f = 0; f < (Fam{1} << (Mask{1} << atoms)); ++f) c += downward_closed(f, atoms);
  return c;
}

inline std::vector<Mask> members(Fam f, std::size_t atoms) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << atoms); ++s)
    if (f >> s & 1U) out.push_back(s);
  return out;
}

/// Members of f not properly contained in another member.
inline std::set<Mask> maximal_members(Fam f, std::size_t atoms) {
  std::set<Mask> out;
  auto ms = members(f, atoms);
  for (Mask s : ms) {
    bool top = true;
    for (Mask t : ms)
      if (t != s && (s & t) == s) top = false;
    if (top) out.insert(s);
  }
  return out;
}

inline bool comparable(Mask a, Mask b) { return (a & b) == a || (a & b) == b; }

/// Maximal nests u with n ⊆ u ⊆ a, where a and n are lists of subset masks.
inline std::set<std::set<Mask>> maximal_nests_containing(const std::vector<Mask>& a, const std::set<Mask>& n) {
  std::vector<std::set<Mask>> nests;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << a.size()); ++pick) {
    std::set<Mask> u;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (pick >> i & 1U) u.insert(a[i]);
    bool ok = std::includes(u.begin(), u.end(), n.begin(), n.end());
    for (Mask x : u)
      for (Mask y : u) ok = ok && comparable(x, y);
    if (ok) nests.push_back(u);
  }
  std::set<std::set<Mask>> out;
  for (const auto& u : nests) {
    bool top = true;
    for (const auto& v : nests)
      if (v.size() > u.size() && std::includes(v.begin(), v.end(), u.begin(), u.end())) top = false;
    if (top) out.insert(u);
  }
  return out;
}

// Translation to and from HfSet over numeral atoms {0, ..., k−1}.

inline mk::HfSet set_of(Mask s) {
  std::vector<mk::HfSet> ms;
  for (std::size_t i = 0; i < 32; ++i)
    if (s >> i & 1U) ms.push_back(mk::numeral(i));
  return mk::HfSet::of(std::move(ms));
}

inline Mask mask_of(const mk::HfSet& s) {
  Mask m = 0;
  for (const auto& x : s) m |= Mask{1} << *mk::as_numeral(x);
  return m;
}

inline mk::HfSet family_of(Fam f, std::size_t atoms) {
  std::vector<mk::HfSet> ms;
  for (Mask s : members(f, atoms)) ms.push_back(set_of(s));
  return mk::HfSet::of(std::move(ms));
}

inline mk::HfSet family_of(const std::vector<Mask>& f) {
  std::vector<mk::HfSet> ms;
  for (Mask s : f) ms.push_back(set_of(s));
  return mk::HfSet::of(std::move(ms));
}

inline std::set<Mask> masks_of(const mk::HfSet& family) {
  std::set<Mask> out;
  for (const auto& s : family) out.insert(mask_of(s));
  return out;
}

/// Relation on the numeral n as a set of Kuratowski pairs.
inline mk::HfSet pairs_of(const Rel& r) {
  std::vector<mk::HfSet> ps;
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j)
      if (r.at(i, j)) ps.push_back(mk::ordered_pair(mk::numeral(i), mk::numeral(j)));
  return mk::HfSet::of(std::move(ps));
}

/// Numeric ≤ on the numeral n.
inline Rel numeric_le(std::size_t n) {
  Rel r{n, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r.bits |= std::uint64_t{1} << (i * n + j);
  return r;
}

inline Rel identity(std::size_t n) {
  Rel r{n, 0};
  for (std::size_t i = 0; i < n; ++i) r.bits |= std::uint64_t{1} << (i * n + i);
  return r;
}

}  // namespace oracle
