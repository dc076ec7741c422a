#include "jdv/relaxations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "jdv/errors.hpp"

namespace jdv {

namespace {

void require_order(int n) {
  if (n < 2) throw InputError("relaxation needs n >= 2, got " + std::to_string(n));
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

// 1/i + 1/k < 1/i' + 1/k'  <=>  (i+k) i'k' < (i'+k') ik
bool lighter(const WeightedPair& a, const WeightedPair& b) {
  const std::int64_t lhs = static_cast<std::int64_t>(a.low + a.high) * b.low * b.high;
  const std::int64_t rhs = static_cast<std::int64_t>(b.low + b.high) * a.low * a.high;
  if (lhs != rhs) return lhs < rhs;
  return std::tie(a.low, a.high) < std::tie(b.low, b.high);
}

}  // namespace

std::vector<WeightedPair> pair_weights(int n) {
  require_order(n);
  std::vector<WeightedPair> pairs;
  pairs.reserve(static_cast<std::size_t>(binom2(n)));
  for (int i = 1; i <= n - 1; ++i) {
    for (int k = i; k <= n - 1; ++k) pairs.push_back({i, k, {}});
  }
  std::sort(pairs.begin(), pairs.end(), lighter);
  for (auto& p : pairs) p.weight = make_rational(p.low + p.high, static_cast<long>(p.low) * p.high);
  return pairs;
}

RelaxationSolution greedy_prefix(int n, std::span<const WeightedPair> ordered) {
  require_order(n);

  // Work over the common denominator lcm(1..n-1) so the running sum stays an
  // integer and each step is a bignum addition.
  BigInt common = 1;
  for (int d = 2; d <= n - 1; ++d) mpz_lcm_ui(common.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(d));
  std::vector<BigInt> share(static_cast<std::size_t>(n));
  for (int d = 1; d <= n - 1; ++d) share[static_cast<std::size_t>(d)] = common / d;
  const BigInt budget = common * n;

  RelaxationSolution sol;
  sol.n = n;
  BigInt sum = 0;
  BigInt next;
  for (const WeightedPair& p : ordered) {
    if (p.low < 1 || p.low > p.high || p.high > n - 1) {
      throw InputError("pair (" + std::to_string(p.low) + "," + std::to_string(p.high) + ") not in P_" +
                       std::to_string(n));
    }
    next = sum + share[static_cast<std::size_t>(p.low)] + share[static_cast<std::size_t>(p.high)];
    if (next > budget) break;
    sum = next;
    sol.chosen.push_back(p);
  }
  sol.weight_sum = Rational(sum, common);
  sol.weight_sum.canonicalize();
  sol.cardinality = static_cast<std::int64_t>(sol.chosen.size());
  sol.alpha = Rational(BigInt(static_cast<long>(sol.cardinality)), BigInt(static_cast<long>(binom2(n))));
  sol.alpha.canonicalize();
  return sol;
}

RelaxationSolution solve_discrete_relaxation(int n) {
  const auto pairs = pair_weights(n);
  return greedy_prefix(n, pairs);
}

double beta_residual(double beta) { return std::log(beta - 1.0) - beta / (beta - 2.0); }

double solve_beta0(double tolerance) {
  if (!(tolerance > 0.0)) throw InputError("beta0 tolerance must be positive");
  double lo = 2.0 + 1e-9;  // residual -> -inf as beta -> 2+
  double hi = 64.0;        // log 63 > 64/62
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    if (beta_residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double limit_constant(double beta0) {
  const double t = beta0 - 2.0;
  return (t * t - 2.0) / (beta0 * t);
}

ContinuousBound alpha_prime(int n) {
  require_order(n);
  ContinuousBound b;
  b.n = n;
  b.beta0 = solve_beta0(1e-12);
  b.limit_constant = limit_constant(b.beta0);
  const double nd = n;
  b.alpha_prime = nd * nd / ((nd - 1.0) * (nd - 1.0)) * b.limit_constant;
  b.lemma_bound = (nd - 1.0) / nd * b.alpha_prime + 1.0 / nd;
  return b;
}

double feasibility_margin(int n, double c) {
  if (n < 3) throw InputError("feasibility criterion needs n >= 3, got " + std::to_string(n));
  if (!(c > 0.0)) throw InputError("feasibility criterion needs c > 0");
  const double nc = n * c;
  if (nc <= 1.0) throw InputError("feasibility criterion undefined for nc <= 1 (log of nc - 1)");
  return nc - (nc - 2.0) * std::log(nc - 1.0);
}

bool continuous_feasibility(int n, double c) { return feasibility_margin(n, c) >= 0.0; }

}  // namespace jdv
