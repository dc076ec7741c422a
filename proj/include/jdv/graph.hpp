#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace jdv {

/// Unordered vertex pair, stored with u < v. Vertices are 1-indexed.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 1..n. Immutable once built; duplicate
/// edges passed to the constructor collapse, self-loops and out-of-range
/// endpoints are rejected with InputError.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Sorted, de-duplicated, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }

  /// Degrees indexed by vertex; entry 0 is unused.
  const std::vector<int>& degrees() const { return degrees_; }

  bool has_edge(int u, int v) const;

  /// Copy of this graph with one more edge.
  Graph with_edge(int u, int v) const;

  /// Copy with vertex v renamed to perm[v-1] (perm is a permutation of 1..n).
  Graph relabeled(std::span<const int> perm) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

/// Sizes of the degree classes of a graph.
struct DegreeProfile {
  int n = 0;
  std::map<int, int> class_sizes;  // degree i -> n_i, positive entries only
  int isolated = 0;                // n0
  int distinct = 0;                // m, distinct positive degrees
  std::set<int> singles;           // degrees with n_i == 1
  std::set<int> multiples;         // degrees with n_i >= 2

  int single_count() const { return static_cast<int>(singles.size()); }

  /// Number of vertices whose degree is a multiple.
  int multiple_mass() const;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace jdv
