#pragma once

#include <iosfwd>
#include <vector>

#include "jdv/rational.hpp"

namespace jdv {

/// Every bound we can put a number on for a given n.
struct BoundReport {
  int n = 0;
  Rational alpha;           // discrete relaxation optimum / C(n,2)
  double alpha_prime = 0.0;
  double lemma_bound = 0.0;
  double limit_constant = 0.0;
  double half_graph_ratio = 0.0;  // |A(H_n)| / C(n,2)
};

BoundReport bound_report(int n);

/// Reports for n_min..n_max in order. Work is spread over `workers` threads;
/// output is identical to the sequential run.
std::vector<BoundReport> bound_reports(int n_min, int n_max, int workers = 1);

inline constexpr const char* kBoundsCsvHeader =
    "n,alpha_n,alpha_prime_n,lemma_bound,limit_constant,half_graph_ratio";

/// Header line plus one row per report, decimals fixed at 9 places.
void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows);

}  // namespace jdv
