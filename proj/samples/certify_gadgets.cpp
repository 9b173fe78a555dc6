// Builds the tree and hypercube counterexamples and certifies each one
// uncolorable with the exact solver.

#include <iostream>

#include "coopcolor/coopcolor.hpp"

int main() {
  using namespace coopcolor;

  for (std::size_t m = 2; m <= 3; ++m) {
    const QLevel level = tree_counterexample(m, /*connect=*/true);
    const SolveReport r = decide_colorable(level.system);
    std::cout << "trees m=" << m << " n=" << level.system.vertex_count()
              << " max_degree=" << max_degree(level.system) << " -> " << to_string(r.outcome)
              << " (" << r.nodes_expanded << " nodes)\n";
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    const GraphSystem s = hypercube_counterexample(m);
    const SolveReport r = decide_colorable(s);
    std::cout << "hypercube m=" << m << " n=" << s.vertex_count()
              << " max_degree=" << max_degree(s) << " -> " << to_string(r.outcome) << " ("
              << r.nodes_expanded << " nodes)\n";
  }
}
