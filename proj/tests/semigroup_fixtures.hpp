#ifndef SKEWGR_TESTS_SEMIGROUP_FIXTURES_HPP
#define SKEWGR_TESTS_SEMIGROUP_FIXTURES_HPP

#include <memory>

#include "skewgr/graph.hpp"
#include "skewgr/inverse_semigroup.hpp"

namespace skewgr::testfix {

// The six-element inverse semigroup of the single edge v -> w, as an explicit
// table: a=(v,v), b=(w,w), c=(e,e), s=(e,w), t=(w,e).
inline std::shared_ptr<const FiniteTableSemigroup> edge_table_semigroup() {
  //                 a   b   c   s   t
  std::vector<std::vector<int>> table = {
      {0, -1, 2, 3, -1},    // a
      {-1, 1, -1, -1, 4},   // b
      {2, -1, 2, 3, -1},    // c
      {-1, 3, -1, -1, 2},   // s
      {4, -1, 4, 1, -1},    // t
  };
  return std::make_shared<FiniteTableSemigroup>(
      std::vector<std::string>{"a", "b", "c", "s", "t"}, table);
}

inline Grading edge_table_grading(const std::shared_ptr<const FiniteTableSemigroup>& S) {
  auto G = Group::free_group({"e"});
  return {G, [S, G](const SgElem& x) {
            switch (std::get<TablePoint>(x).index) {
              case 3:
                return G->generator(0);
              case 4:
                return G->generator(0, true);
              default:
                return G->identity();
            }
          }};
}

inline DirectedGraph edge_graph() {
  return DirectedGraph({"v", "w"}, {{"e", 0, 1}});
}

inline DirectedGraph loop_graph() {
  return DirectedGraph({"v"}, {{"e", 0, 0}});
}

inline DirectedGraph branch_graph() {
  // u branches into two edges; v forwards into the sink w. Same-length paths
  // have distinct ranges, so the integer regrade stays pure.
  return DirectedGraph({"u", "v", "w", "x"}, {{"e1", 0, 1}, {"e2", 0, 3}, {"f", 1, 2}});
}

inline Semilattice chain2_semilattice() {
  // 0 < a
  return Semilattice({"0", "a"}, {{0, 0}, {0, 1}}, 0);
}

}  // namespace skewgr::testfix

#endif
