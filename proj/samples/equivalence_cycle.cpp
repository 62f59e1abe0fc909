// Runs the full cycle on one carrier: a choice function drives Tukey,
// Hausdorff, the maximal principle, Zermelo and Zorn, and both Zermelo and
// the well-ordering theorem give a choice function back.

#include <iostream>

#include "mk/ac.hpp"
#include "mk/maximal.hpp"
#include "mk/tukey.hpp"
#include "mk/wellorder.hpp"
#include "mk/zorn.hpp"

namespace {

void show(const char* step, const mk::HfSet& v) { std::cout << "  " << step << ": " << mk::to_text(v) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  using namespace mk;
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 2;
  const ChoicePolicy policy = ChoicePolicy::parse(argc > 2 ? argv[2] : "canonical");
  const HfSet x = numeral(n);
  const HfSet px = power_set(x);
  std::cout << "X = " << to_text(x) << ", choice " << policy.to_string() << "\n";

  show("AC, ε", ChoiceFn(x, policy).table());
  show("Tukey, maximal member of pow(X)", tukey_maximal_member(Family(px), policy));
  show("Hausdorff, maximal nest in pow(X)", hausdorff_extend_nest(px, HfSet(), policy));
  show("maximal principle", maximal_principle_member(px, policy));

  std::vector<HfSet> parts;
  for (const auto& a : x) parts.push_back(singleton(a));
  show("Zermelo, transversal of the singletons", zermelo_transversal(HfSet::of(parts), policy));
  show("Zermelo → AC", choice_from_zermelo(x, policy).table());

  std::vector<std::pair<HfSet, HfSet>> inc;
  for (const auto& a : px)
    for (const auto& b : px)
      if (subclass(a, b)) inc.emplace_back(a, b);
  show("Zorn on (pow(X), ⊆)", zorn_maximal_element(px, BinRel::from_pairs(inc), policy).element);

  const BinRel le = wellorder_construct(x, {policy});
  show("well order", le.pairs());
  show("well order → AC", choice_from_wellorder(x, le).table());
}
