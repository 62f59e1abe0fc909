#pragma once

// Tukey's lemma by the one-point extension χ(F) = F ∪ {c(F′ ∼ F)}.
//
// Families are anything satisfying SetFamily: a materialized Family, or a
// family given by a membership predicate (nests in a set, the extension
// family {F ∈ f : F ∪ N ∈ f}). Predicate families must be downward closed,
// so that they are nonempty iff they contain ∅ and ⋃f = {x : {x} ∈ f}.
//
// f′0 is computed as the χ-orbit of ∅. That orbit is a ⊆-chain, and a
// finite nest contains its own union (its largest member, or ∅), so the
// orbit is already closed under nest unions.

#include <concepts>
#include <type_traits>
#include <vector>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/order.hpp"

namespace mk {

template <class F>
concept SetFamily = requires(const F& f, const HfSet& s) {
  { f.contains(s) } -> std::convertible_to<bool>;
  { f.atoms() } -> std::convertible_to<HfSet>;
};

/// {n : n ⊆ A ∧ n is a nest}
class NestsIn {
 public:
  explicit NestsIn(HfSet a) : a_(std::move(a)) {}
  bool contains(const HfSet& n) const { return subclass(n, a_) && is_nest(Family(n)).holds; }
  const HfSet& atoms() const { return a_; }
  const HfSet& carrier() const { return a_; }

 private:
  HfSet a_;
};

/// {F ∈ f : F ∪ N ∈ f}
template <SetFamily Base>
class ExtensionFamily {
 public:
  ExtensionFamily(Base f, HfSet n) : f_(std::move(f)), n_(std::move(n)) {
    std::vector<HfSet> atoms;
    for (const auto& x : f_.atoms())
      if (contains(singleton(x))) atoms.push_back(x);
    atoms_ = HfSet::from_sorted(std::move(atoms));
  }
  bool contains(const HfSet& s) const { return f_.contains(s) && f_.contains(set_union(s, n_)); }
  const HfSet& atoms() const { return atoms_; }
  const Base& base() const { return f_; }
  const HfSet& anchor() const { return n_; }

 private:
  Base f_;
  HfSet n_;
  HfSet atoms_;
};

namespace detail {

inline HfSet frontier_over(const HfSet& big_f, const SetFamily auto& f, const HfSet& atoms) {
  std::vector<HfSet> out;
  for (const auto& x : atoms)
    if (f.contains(adjoin(big_f, x))) out.push_back(x);
  return HfSet::from_sorted(std::move(out));
}

inline HfSet chi_over(const HfSet& big_f, const SetFamily auto& f, const HfSet& atoms, const ChoiceFn& c) {
  if (!f.contains(big_f)) throw Error(ErrorCode::NotAMember, "χ is defined on members of f only");
  if (!(c.base() == atoms)) throw Error(ErrorCode::NotAChoiceFunction, "c must be a choice function of ⋃f");
  HfSet rest = set_difference(frontier_over(big_f, f, atoms), big_f);
  if (rest.empty()) return big_f;
  return adjoin(big_f, c(rest));
}

template <class Fam>
void require_tukey_input(const Fam& f, ErrorCode empty_code, ErrorCode fc_code) {
  if constexpr (std::is_same_v<Fam, Family>) {
    if (f.empty()) throw Error(empty_code, "family is empty");
    if (!is_finite_character(f)) throw Error(fc_code, "family is not of finite character");
  } else {
    if (!f.contains(HfSet())) throw Error(empty_code, "family does not contain ∅");
  }
}

}  // namespace detail

/// F′ = {x ∈ ⋃f : F ∪ {x} ∈ f}
inline HfSet frontier(const HfSet& big_f, const SetFamily auto& f) {
  return detail::frontier_over(big_f, f, f.atoms());
}

inline HfSet chi(const HfSet& big_f, const SetFamily auto& f, const ChoiceFn& c) {
  return detail::chi_over(big_f, f, f.atoms(), c);
}

/// g ⊆ f, ∅ ∈ g, χ[g] ⊆ g, and ⋃n ∈ g for every nest n ⊆ g.
inline Verdict is_t_subclass(const Family& g, const SetFamily auto& f, const ChoiceFn& c) {
  for (const auto& e : g.sets())
    if (!f.contains(e)) return Verdict::fail("subclass", {e});
  if (!g.contains(HfSet())) return Verdict::fail("contains ∅");
  const HfSet atoms = f.atoms();
  for (const auto& e : g.sets())
    if (HfSet x = detail::chi_over(e, f, atoms, c); !g.contains(x)) return Verdict::fail("χ-closed", {e, x});
  Verdict out = Verdict::pass();
  for_each_nest(g.sets().members(), [&](const std::vector<HfSet>& n) {
    HfSet u = big_union(HfSet::from_sorted(n));
    if (g.contains(u)) return true;
    out = Verdict::fail("nest union", {HfSet::from_sorted(n), u});
    return false;
  });
  return out;
}

template <SetFamily Fam>
struct TukeyState {
  Fam f;
  ChoiceFn c;
  Family f0;
  /// ∅, χ(∅), χ(χ(∅)), ... ending at the fixed point.
  std::vector<HfSet> trace;
};

template <SetFamily Fam>
TukeyState<Fam> tukey_state(Fam f, ChoiceFn c) {
  detail::require_tukey_input(f, ErrorCode::PreconditionFailed, ErrorCode::PreconditionFailed);
  const HfSet atoms = f.atoms();
  std::vector<HfSet> trace{HfSet()};
  for (;;) {
    HfSet next = detail::chi_over(trace.back(), f, atoms, c);
    if (next == trace.back()) break;
    trace.push_back(std::move(next));
  }
  Family f0(HfSet::of(trace));
  return {std::move(f), std::move(c), std::move(f0), std::move(trace)};
}

inline constexpr std::size_t kLiteralTSubclassLimit = 8;

/// ⋂{g ⊆ f : g is a t-Subclass}, by exhaustive search over subsets of f.
inline Family literal_least_t_subclass(const Family& f, const ChoiceFn& c) {
  if (f.size() > kLiteralTSubclassLimit)
    throw Error(ErrorCode::SizeGuardExceeded, "literal f′0 over " + std::to_string(f.size()) + " members");
  std::optional<HfSet> meet;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
    Family g(subset_by_mask(f.sets(), m));
    if (!is_t_subclass(g, f, c)) continue;
    meet = meet ? set_intersection(*meet, g.sets()) : g.sets();
  }
  if (!meet) throw Error(ErrorCode::InvariantViolated, "f is not a t-Subclass of itself");
  return Family(*meet);
}

/// f′0, cross-checked against the literal intersection when |f| ≤ 8.
inline Family least_t_subclass(const Family& f, const ChoiceFn& c) {
  Family f0 = tukey_state(f, c).f0;
  if (f.size() <= kLiteralTSubclassLimit && !(literal_least_t_subclass(f, c) == f0))
    throw Error(ErrorCode::InvariantViolated, "χ-orbit of ∅ differs from the intersection of t-Subclasses");
  return f0;
}

enum class TukeyAux { Mu, F1, Upsilon };

/// μ(C) = {A ∈ f′0 : A ⊆ C ∨ C ⊆ A}; f′1 = {C ∈ f′0 : μ(C) = f′0};
/// υ(D) = {A ∈ f′0 : A ⊆ D ∨ χ(D) ⊆ A}. `arg` is ignored for f′1.
template <SetFamily Fam>
Family tukey_auxiliary(TukeyAux kind, const HfSet& arg, const TukeyState<Fam>& st) {
  const HfSet& f0 = st.f0.sets();
  auto mu = [&](const HfSet& c) {
    std::vector<HfSet> out;
    for (const auto& a : f0)
      if (subclass(a, c) || subclass(c, a)) out.push_back(a);
    return HfSet::from_sorted(std::move(out));
  };
  auto f1 = [&] {
    std::vector<HfSet> out;
    for (const auto& c : f0)
      if (mu(c) == f0) out.push_back(c);
    return HfSet::from_sorted(std::move(out));
  };
  switch (kind) {
    case TukeyAux::Mu:
      if (!f0.contains(arg)) throw Error(ErrorCode::NotAMember, "μ is defined on f′0");
      return Family(mu(arg));
    case TukeyAux::F1:
      return Family(f1());
    case TukeyAux::Upsilon: {
      if (!f1().contains(arg)) throw Error(ErrorCode::NotAMember, "υ is defined on f′1");
      HfSet chi_d = chi(arg, st.f, st.c);
      std::vector<HfSet> out;
      for (const auto& a : f0)
        if (subclass(a, arg) || subclass(chi_d, a)) out.push_back(a);
      return Family(HfSet::from_sorted(std::move(out)));
    }
  }
  throw Error(ErrorCode::InvariantViolated, "unknown auxiliary kind");
}

/// ⋃f′0, verified to be a member of f fixed by χ.
template <SetFamily Fam>
HfSet tukey_maximal_member(const Fam& f, const ChoiceFn& c) {
  detail::require_tukey_input(f, ErrorCode::EmptyFamily, ErrorCode::NotFiniteCharacter);
  auto st = tukey_state(f, c);
  HfSet m = big_union(st.f0.sets());
  if (!f.contains(m) || !(chi(m, f, c) == m))
    throw Error(ErrorCode::InvariantViolated, "⋃f′0 is not a χ-fixed member of f");
  return m;
}

template <SetFamily Fam>
HfSet tukey_maximal_member(const Fam& f, ChoicePolicy policy = {}) {
  return tukey_maximal_member(f, ChoiceFn(f.atoms(), policy));
}

}  // namespace mk
