#include "jdv/graph.hpp"

#include <algorithm>
#include <string>

#include "jdv/errors.hpp"

namespace jdv {

namespace {

Edge normalized(int n, int u, int v) {
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
  if (u < 1 || u > n || v < 1 || v > n) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} outside vertex range 1.." + std::to_string(n));
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) {
    throw InputError("graph needs at least one vertex, got n=" + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    edges_.push_back(normalized(n, e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  degrees_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++degrees_[static_cast<std::size_t>(e.u)];
    ++degrees_[static_cast<std::size_t>(e.v)];
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u == v || u < 1 || v < 1 || u > n_ || v > n_) return false;
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph Graph::with_edge(int u, int v) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(normalized(n_, u, v));
  return Graph(n_, edges);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw InputError("permutation length does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    edges.push_back({perm[static_cast<std::size_t>(e.u - 1)],
                     perm[static_cast<std::size_t>(e.v - 1)]});
  }
  Graph out(n_, edges);
  if (out.size() != size()) {
    throw InputError("relabeling is not a permutation");
  }
  return out;
}

int DegreeProfile::multiple_mass() const {
  int mass = 0;
  for (int d : multiples) mass += class_sizes.at(d);
  return mass;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.n = g.order();
  for (int v = 1; v <= g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) {
      ++p.isolated;
    } else {
      ++p.class_sizes[d];
    }
  }
  for (const auto& [degree, count] : p.class_sizes) {
    (count == 1 ? p.singles : p.multiples).insert(degree);
  }
  p.distinct = static_cast<int>(p.class_sizes.size());
  return p;
}

}  // namespace jdv
