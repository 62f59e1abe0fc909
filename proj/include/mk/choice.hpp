#pragma once

// Choice functions on pow(X) ∼ {∅}.
//
// A ChoiceFn either evaluates a rule on demand (canonical minimum, or a
// seeded pseudo-random member) or looks up an explicit table. Constructions
// over families with large unions only ever evaluate c on a handful of
// arguments, so the table is materialized only on request.

#include <cstdint>
#include <optional>
#include <string>

#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/order.hpp"

namespace mk {

struct ChoicePolicy {
  enum class Rule { Canonical, Seeded };
  Rule rule = Rule::Canonical;
  std::uint64_t seed = 0;

  static ChoicePolicy canonical() { return {}; }
  static ChoicePolicy seeded(std::uint64_t seed) { return {Rule::Seeded, seed}; }

  /// "canonical" or "seed:N".
  static ChoicePolicy parse(const std::string& text) {
    if (text == "canonical") return canonical();
    if (text.rfind("seed:", 0) == 0 && text.size() > 5) {
      std::size_t used = 0;
      std::uint64_t seed = 0;
      try {
        seed = std::stoull(text.substr(5), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == text.size() - 5) return seeded(seed);
    }
    throw Error(ErrorCode::ParseError, "choice policy must be 'canonical' or 'seed:N', got '" + text + "'");
  }

  std::string to_string() const {
    return rule == Rule::Canonical ? "canonical" : "seed:" + std::to_string(seed);
  }

  /// Index of the chosen member of a nonempty set.
  std::size_t pick(const HfSet& a) const {
    if (rule == Rule::Canonical) return 0;
    return static_cast<std::size_t>(detail::mix64(seed ^ a.hash()) % a.size());
  }

  friend bool operator==(const ChoicePolicy&, const ChoicePolicy&) = default;
};

inline constexpr std::size_t kChoiceTableLimit = 16;

class ChoiceFn {
 public:
  explicit ChoiceFn(HfSet base, ChoicePolicy policy = {}) : base_(std::move(base)), policy_(policy) {}

  /// Wraps an explicit function; throws NotAChoiceFunction unless it is a
  /// choice function on `base`.
  static ChoiceFn from_table(HfSet table, HfSet base) {
    if (auto v = is_choice_function(table, base); !v)
      throw Error(ErrorCode::NotAChoiceFunction, "table fails clause '" + v.clause + "'");
    ChoiceFn c(std::move(base));
    c.table_ = std::move(table);
    return c;
  }

  const HfSet& base() const { return base_; }
  const ChoicePolicy& policy() const { return policy_; }
  bool tabulated() const { return table_.has_value(); }

  HfSet operator()(const HfSet& a) const {
    if (a.empty() || !subclass(a, base_))
      throw Error(ErrorCode::OutsideDomain, "choice argument must be a nonempty subset of the base");
    if (table_) return value(*table_, a);
    return a.members()[policy_.pick(a)];
  }

  /// {⟨A, c(A)⟩ : A ∈ pow(base) ∼ {∅}}
  HfSet table() const {
    if (table_) return *table_;
    if (base_.size() > kChoiceTableLimit)
      throw Error(ErrorCode::SizeGuardExceeded, "choice table over " + std::to_string(base_.size()) + " elements");
    std::vector<HfSet> ps;
    for (const auto& a : power_set(base_))
      if (!a.empty()) ps.push_back(ordered_pair(a, (*this)(a)));
    return HfSet::of(std::move(ps));
  }

 private:
  HfSet base_;
  ChoicePolicy policy_;
  std::optional<HfSet> table_;
};

}  // namespace mk
