#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "jdv/graph.hpp"
#include "jdv/rational.hpp"

namespace jdv {

/// Position (i, k) of a joint degree vector, always with low <= high.
struct DegreePair {
  int low = 0;
  int high = 0;

  auto operator<=>(const DegreePair&) const = default;
  bool diagonal() const { return low == high; }
};

/// Joint degree vector of an n-vertex graph: entry (i, k) counts edges between
/// a vertex of degree i and a vertex of degree k, 1 <= i <= k <= n-1. Stored
/// sparsely; zero counts never appear in entries().
class Jdv {
 public:
  using Entries = std::map<DegreePair, std::int64_t>;

  explicit Jdv(int n);

  int n() const { return n_; }
  const Entries& entries() const { return entries_; }

  /// Count at (i, k); zero if absent. Requires a valid index.
  std::int64_t at(int i, int k) const;

  /// Sets the count at (i, k). A zero count removes the entry.
  /// Throws InputError if i > k, i < 1, k >= n or count < 0.
  void set(int i, int k, std::int64_t count);
  void add(int i, int k, std::int64_t delta = 1);

  /// Sum of all counts (the edge count when this is the JDV of a graph).
  std::int64_t total() const;

  bool operator==(const Jdv&) const = default;

 private:
  void check_index(int i, int k) const;

  int n_;
  Entries entries_;
};

/// Positions with a positive count.
using SupportSet = std::set<DegreePair>;

Jdv jdv_of(const Graph& g);

SupportSet support(const Jdv& j);

/// Sum over the support of (1/i + 1/k) * j_ik. For the JDV of a graph this is
/// exactly n minus the number of isolated vertices.
Rational weighted_degree_sum(const Jdv& j);

enum class ViolationKind {
  NonIntegerClass,      // n_i is not an integer
  DiagonalOverflow,     // m_ii > C(n_i, 2)
  OffDiagonalOverflow,  // m_ik > n_i * n_k, i < k
  VertexBudget,         // strict mode only: sum of n_i exceeds n
};

struct Violation {
  ViolationKind kind;
  int i = 0;
  int k = 0;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

struct GraphicalityVerdict {
  bool graphical = false;
  /// n_i for every degree with positive class size. Populated for every
  /// degree whose class size came out integral.
  std::map<int, std::int64_t> class_sizes;
  /// Class sizes as exact rationals, including non-integral ones.
  std::map<int, Rational> raw_class_sizes;
  std::optional<Violation> first_violation;
};

/// Erdős–Gallai type test for joint degree vectors. The class sizes
///   n_i = (1/i) (sum_{k<=i} m_ki + sum_{k>=i} m_ik)
/// (m_ii contributes twice) must be integers, m_ii <= C(n_i, 2) and
/// m_ik <= n_i n_k for i < k. With strict_vertex_budget the class sizes must
/// also fit in n vertices.
///
/// Integrality is scanned first for every i ascending; the capacity checks then
/// run over (i, k) lexicographically. The first failure is reported.
GraphicalityVerdict check_graphical(const Jdv& j, bool strict_vertex_budget = false);

}  // namespace jdv
