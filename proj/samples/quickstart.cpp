// Builds a small tree, solves it, and prints the activation rounds.

#include <iostream>

#include "tss/tss.hpp"

int main() {
  // Caterpillar on 10 vertices.
  const std::vector<std::pair<tss::Vertex, tss::Vertex>> edges{
      {0, 1}, {0, 2}, {2, 4}, {4, 3}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {8, 9}};
  const auto g = tss::Graph::from_edges(10, edges);
  const tss::ThresholdAssignment t({1, 1, 2, 1, 3, 2, 2, 1, 1, 1});

  const auto report = tss::tss_solve(g, t);
  tss::write_report(std::cout, report, nullptr, /*with_order=*/true);

  const auto trace = tss::run_activation(g, t, report.target_set);
  tss::write_trace(std::cout, trace);

  const auto bounds = tss::check_bound_dominance(g, t);
  std::cout << "bound_new=" << bounds.bound_new.exact << " bound_old=" << bounds.bound_old.exact << '\n';
  return trace.all_active() ? 0 : 1;
}
