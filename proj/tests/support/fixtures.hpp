// Small fixed inputs shared by several test files.
#ifndef COFREE_TESTS_FIXTURES_HPP
#define COFREE_TESTS_FIXTURES_HPP

#include "cofree/gadgets.hpp"
#include "cofree/graph.hpp"
#include "cofree/instances.hpp"

namespace fixture {

// Ground {1..9}, triples 123 234 347 456 678 789, shifted to 0-based.
inline cofree::X3CInstance fig3() {
  return {3, 6, {{0, 1, 2}, {1, 2, 3}, {2, 3, 6}, {3, 4, 5}, {5, 6, 7}, {6, 7, 8}}};
}

inline cofree::Graph fig5() {
  return cofree::Graph(7, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {4, 6}, {5, 6},
                           {4, 5}});
}

inline cofree::Graph wheel5() {
  cofree::GraphBuilder b(cofree::cycle_graph(5));
  int hub = b.add_vertex();
  for (int v = 0; v < 5; ++v) b.add_edge(hub, v);
  return b.build();
}

inline cofree::Clause clause(int a, bool pa, int b, bool pb, int c, bool pc) {
  return {cofree::Literal{a, pa}, cofree::Literal{b, pb}, cofree::Literal{c, pc}};
}

// Every sign pattern over three variables: unsatisfiable.
inline cofree::SatInstance all_patterns() {
  cofree::SatInstance s;
  s.num_vars = 3;
  for (int signs = 0; signs < 8; ++signs)
    s.clauses.push_back(clause(0, signs & 1, 1, (signs >> 1) & 1, 2, (signs >> 2) & 1));
  return s;
}

}  // namespace fixture

#endif  // COFREE_TESTS_FIXTURES_HPP
