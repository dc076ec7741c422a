#include "jdv/bounds_report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>

#include "jdv/constructions.hpp"
#include "jdv/errors.hpp"
#include "jdv/relaxations.hpp"

namespace jdv {

BoundReport bound_report(int n) {
  BoundReport r;
  r.n = n;
  r.alpha = solve_discrete_relaxation(n).alpha;
  const ContinuousBound cb = alpha_prime(n);
  r.alpha_prime = cb.alpha_prime;
  r.lemma_bound = cb.lemma_bound;
  r.limit_constant = cb.limit_constant;
  r.half_graph_ratio = static_cast<double>(half_graph_support_size(n)) / (n * (n - 1) / 2.0);
  return r;
}

std::vector<BoundReport> bound_reports(int n_min, int n_max, int workers) {
  if (n_min < 2 || n_max < n_min) {
    throw InputError("bounds range needs 2 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                     std::to_string(n_max));
  }
  std::vector<BoundReport> rows(static_cast<std::size_t>(n_max - n_min + 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
      rows[idx] = bound_report(n_min + static_cast<int>(idx));
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < std::max(1, workers); ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  return rows;
}

namespace {

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

}  // namespace

void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << kBoundsCsvHeader << '\n';
  for (const BoundReport& r : rows) {
    out << r.n << ',' << fixed9(to_double(r.alpha)) << ',' << fixed9(r.alpha_prime) << ','
        << fixed9(r.lemma_bound) << ',' << fixed9(r.limit_constant) << ',' << fixed9(r.half_graph_ratio)
        << '\n';
  }
}

}  // namespace jdv
