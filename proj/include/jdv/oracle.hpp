#pragma once

#include <cstdint>

#include "jdv/graph.hpp"

namespace jdv {

struct OracleResult {
  int n = 0;
  int max_support = 0;
  Graph witness{1};  // lowest edge bitmask among maximizers
  std::uint64_t witness_mask = 0;
  std::uint64_t graphs_scanned = 0;
};

inline constexpr int kDefaultOracleCap = 7;

/// Exact maximum of |A(G)| over all labeled graphs on n vertices, by scanning
/// all 2^C(n,2) edge subsets. Bit b of a mask is the b-th pair (u, v), u < v,
/// in lexicographic order. The range is split over `workers` threads; the
/// result does not depend on the split.
///
/// Throws InputError if n < 2 or n > cap (message gives the scan size).
OracleResult max_support_exhaustive(int n, int cap = kDefaultOracleCap, int workers = 1);

/// Graph for an edge bitmask in the order above.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace jdv
