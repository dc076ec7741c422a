#pragma once

#include "jdv/graph.hpp"

namespace jdv {

/// Half graph H_n on v_1..v_n: v_i ~ v_j iff i + j > n and i != j.
/// Degrees are n-1, n-2, ..., floor(n/2), floor(n/2), ..., 2, 1.
/// Throws InputError for n < 2.
Graph half_graph(int n);

/// H_n (n odd, n >= 7) plus an edge from its degree-1 vertex v_1 to the
/// lowest-index vertex of degree (n-1)/2. This trades the (1, n-1) JDV entry
/// for (2, (n+1)/2) and ((n+1)/2, (n+1)/2), a net gain of one support position.
/// Throws InputError for even n or n < 7.
Graph augmented_half_graph(int n);

/// |A(H_n)| counted from the constructed graph.
///
/// Enumeration gives n^2/4 - n/2 + 1 for even n (3 at n = 4, 7 at n = 6),
/// not the n^2/4 sometimes quoted; only the ratio limit 1/2 agrees.
int half_graph_support_size(int n);

}  // namespace jdv
