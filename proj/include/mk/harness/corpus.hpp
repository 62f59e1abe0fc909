#pragma once

// Pseudo-random formula corpus for the classification scheme. Every formula
// has nesting depth ≤ 3 and at most the free variable x; terms avoid partial
// operations so each formula evaluates on every assignment.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mk/classifier.hpp"
#include "mk/hfs.hpp"

namespace mk::harness {

inline constexpr std::uint64_t kCorpusSeed = 0x5eed5c4e3eULL;
inline constexpr std::size_t kFormulaDepth = 3;

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed = kCorpusSeed) : rng_(seed) {}

  dsl::FormulaPtr formula(std::size_t depth) {
    std::vector<std::string> scope{"x"};
    return gen(depth, scope);
  }

  /// `count` pairwise distinct formulas, compared by printed form.
  std::vector<dsl::FormulaPtr> corpus(std::size_t count, std::size_t depth = kFormulaDepth) {
    std::vector<dsl::FormulaPtr> out;
    std::set<std::string> seen;
    while (out.size() < count) {
      auto f = formula(depth);
      if (seen.insert(dsl::print(*f)).second) out.push_back(std::move(f));
    }
    return out;
  }

 private:
  std::size_t roll(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  dsl::TermPtr term(std::size_t depth, const std::vector<std::string>& scope) {
    using dsl::TermOp;
    if (depth == 0 || roll(3) == 0) {
      if (roll(4) == 0) {
        static const std::vector<HfSet> lits = {HfSet(), numeral(1), numeral(2), singleton(numeral(1))};
        return dsl::lit(lits[roll(lits.size())]);
      }
      return dsl::var(scope[roll(scope.size())]);
    }
    static const TermOp binary[] = {TermOp::Union, TermOp::Intersection, TermOp::Difference,
                                    TermOp::UnorderedPair, TermOp::OrderedPair};
    static const TermOp unary[] = {TermOp::Singleton, TermOp::BigUnion, TermOp::Power};
    if (roll(2) == 0) {
      TermOp op = unary[roll(3)];
      // Power only applies to variables so values stay small.
      if (op == TermOp::Power) return dsl::apply(op, {dsl::var(scope[roll(scope.size())])});
      return dsl::apply(op, {term(depth - 1, scope)});
    }
    return dsl::apply(binary[roll(5)], {term(depth - 1, scope), term(depth - 1, scope)});
  }

  dsl::FormulaPtr gen(std::size_t depth, std::vector<std::string>& scope) {
    using dsl::FormulaOp;
    if (depth == 0 || roll(4) == 0) {
      static const FormulaOp atoms[] = {FormulaOp::In, FormulaOp::Eq, FormulaOp::Subset};
      return dsl::atom(atoms[roll(3)], term(1, scope), term(1, scope));
    }
    switch (roll(7)) {
      case 0: return dsl::connective(FormulaOp::Not, {gen(depth - 1, scope)});
      case 1: return dsl::connective(FormulaOp::And, {gen(depth - 1, scope), gen(depth - 1, scope)});
      case 2: return dsl::connective(FormulaOp::Or, {gen(depth - 1, scope), gen(depth - 1, scope)});
      case 3: return dsl::connective(FormulaOp::Implies, {gen(depth - 1, scope), gen(depth - 1, scope)});
      case 4: return dsl::connective(FormulaOp::Iff, {gen(depth - 1, scope), gen(depth - 1, scope)});
      default: {
        FormulaOp q = roll(2) == 0 ? FormulaOp::Forall : FormulaOp::Exists;
        std::string v = "y" + std::to_string(scope.size());
        scope.push_back(v);
        auto body = gen(depth - 1, scope);
        scope.pop_back();
        return dsl::quantifier(q, v, body);
      }
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace mk::harness
