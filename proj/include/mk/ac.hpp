#pragma once

// Closing the cycle: choice functions from Zermelo's postulate and from a
// well order.

#include <vector>

#include "mk/choice.hpp"
#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/maximal.hpp"
#include "mk/order.hpp"

namespace mk {

inline constexpr std::size_t kChoiceFromZermeloGuard = 3;

/// P = {A × {A} : A ∈ pow(X) ∼ {∅}}
inline HfSet tagged_subsets(const HfSet& x) {
  std::vector<HfSet> out;
  for (const auto& a : power_set(x))
    if (!a.empty()) out.push_back(cartesian(a, singleton(a)));
  return HfSet::of(std::move(out));
}

/// ε(A) = fst(⋂((A × {A}) ∩ D)) for a transversal D of P.
inline ChoiceFn choice_from_zermelo(const HfSet& x, ChoicePolicy policy = {},
                                    std::size_t guard = kChoiceFromZermeloGuard) {
  if (x.size() > guard)
    throw Error(ErrorCode::SizeGuardExceeded, "choice via Zermelo over " + std::to_string(x.size()) +
                                                  " elements, guard " + std::to_string(guard));
  const HfSet p = tagged_subsets(x);
  const HfSet d = zermelo_transversal(p, policy);
  std::vector<HfSet> eps;
  for (const auto& a : power_set(x)) {
    if (a.empty()) continue;
    const HfSet hit = set_intersection(cartesian(a, singleton(a)), d);
    eps.push_back(ordered_pair(a, fst(big_intersection(hit))));
  }
  return ChoiceFn::from_table(HfSet::of(std::move(eps)), x);
}

/// ε(A) = the ≤-minimal element of A.
inline ChoiceFn choice_from_wellorder(const HfSet& x, const BinRel& le) {
  if (auto v = is_well_order(le, x); !v) throw Error(ErrorCode::NotAWellOrder, "fails " + v.clause);
  std::vector<HfSet> eps;
  for (const auto& a : power_set(x)) {
    if (a.empty()) continue;
    for (const auto& z : a)
      if (extreme_element(Extreme::Min, z, a, le)) {
        eps.push_back(ordered_pair(a, z));
        break;
      }
  }
  return ChoiceFn::from_table(HfSet::of(std::move(eps)), x);
}

}  // namespace mk
