// Walks the one-point extension χ from ∅ to a maximal member of pow(3),
// printing the orbit that forms f′0.

#include <iostream>

#include "mk/choice.hpp"
#include "mk/tukey.hpp"

int main(int argc, char** argv) {
  using namespace mk;
  const ChoicePolicy policy = ChoicePolicy::parse(argc > 1 ? argv[1] : "canonical");
  const Family f(power_set(numeral(3)));
  const ChoiceFn c(f.atoms(), policy);

  auto st = tukey_state(f, c);
  std::cout << "choice " << policy.to_string() << "\n";
  for (std::size_t i = 0; i < st.trace.size(); ++i) {
    const HfSet& step = st.trace[i];
    std::cout << "  χ^" << i << "(∅) = " << to_text(step) << "   frontier " << to_text(frontier(step, f)) << "\n";
  }
  const HfSet m = tukey_maximal_member(f, c);
  std::cout << "f′0 = " << to_text(st.f0.sets()) << "\n";
  std::cout << "maximal member " << to_text(m) << (extreme_member(Extreme::Max, m, f) ? " (verified)" : " (NOT maximal)")
            << "\n";
}
