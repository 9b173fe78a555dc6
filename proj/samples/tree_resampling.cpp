// Colors random bounded-degree trees with the resampling solver, using the
// smallest m that satisfies the tree LLL inequality.

#include <cstdlib>
#include <iostream>

#include "coopcolor/coopcolor.hpp"

int main(int argc, char** argv) {
  using namespace coopcolor;

  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1000;
  const std::size_t d = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 2;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 7;

  const std::size_t m = min_m_tree(d);
  const GraphSystem s = random_forest_system(n, m, d, seed);
  const LllResult r = solve_trees(s, seed);

  std::cout << "n=" << n << " d=" << d << " m=" << m << " -> " << to_string(r.report.outcome)
            << " after " << r.stats.resampled_events << " resamplings\n";
  if (r.report.coloring) {
    const auto sets = r.report.coloring->to_sets(m);
    for (GraphIndex j = 0; j < sets.size(); ++j)
      std::cout << "  I_" << j << ": " << sets[j].size() << " vertices\n";
  }
  return r.report.outcome == Outcome::Colorable ? 0 : 1;
}
