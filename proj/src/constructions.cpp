#include "jdv/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "jdv/errors.hpp"
#include "jdv/jdv.hpp"

namespace jdv {

Graph half_graph(int n) {
  if (n < 2) throw InputError("half graph needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::max(i + 1, n - i + 1); j <= n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph augmented_half_graph(int n) {
  if (n < 7 || n % 2 == 0) {
    throw InputError("augmented half graph needs odd n >= 7, got " + std::to_string(n));
  }
  Graph h = half_graph(n);
  const int target_degree = (n - 1) / 2;
  for (int v = 2; v <= n; ++v) {
    if (h.degree(v) == target_degree) return h.with_edge(1, v);
  }
  throw InputError("half graph has no vertex of degree " + std::to_string(target_degree));
}

int half_graph_support_size(int n) {
  return static_cast<int>(support(jdv_of(half_graph(n))).size());
}

}  // namespace jdv
