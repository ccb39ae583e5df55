#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "streamcert/digraph.hpp"

namespace streamcert::testing {

inline Digraph graph(int n, std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<Arc> list;
  for (auto [u, v] : arcs) list.push_back({u, v});
  return Digraph(n, std::move(list));
}

inline Digraph path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph(n, std::move(arcs));
}

// The 5-node graph whose 1-arc certificate H (first five arcs) has only
// strong bridges while G itself has none.
inline Digraph bridge_figure_g() {
  return graph(5, {{0, 4}, {1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 3}, {1, 4}, {2, 0}, {3, 1}, {4, 2}});
}
inline Digraph bridge_figure_h() { return graph(5, {{0, 4}, {1, 0}, {2, 1}, {3, 2}, {4, 3}}); }

}  // namespace streamcert::testing
