// Evaluates a few classifiers over V(3) and checks the scheme for each body.

#include <iostream>

#include "mk/classifier.hpp"

int main() {
  using namespace mk;
  using namespace mk::dsl;
  const Universe u = Universe::rank(3);
  for (const char* text : {"{x : x ∈ 2}", "{x : exists y (y ∈ x)}", "{(u,v) : u ∈ v}", "{x : x ⊆ 1}"}) {
    TermPtr t = parse_term(text);
    std::cout << print(*t) << " = " << to_text(eval_term(*t, {}, u));
    if (t->op == TermOp::Comprehension) std::cout << (check_scheme(*t->body, u) ? "   scheme holds" : "   SCHEME FAILS");
    std::cout << "\n";
  }
}
