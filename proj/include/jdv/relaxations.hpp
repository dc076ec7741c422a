#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jdv/rational.hpp"

namespace jdv {

/// Degree pair (low, high) of P_n with its weight 1/low + 1/high.
struct WeightedPair {
  int low = 0;
  int high = 0;
  Rational weight;
};

/// All C(n,2) pairs 1 <= i <= k <= n-1, ascending by weight, ties by (i, k).
std::vector<WeightedPair> pair_weights(int n);

/// Optimum of the discrete relaxation: the largest set of degree pairs whose
/// weights sum to at most n. Taking the cheapest pairs first is optimal since
/// any k-subset weighs at least as much as the k lightest pairs.
struct RelaxationSolution {
  int n = 0;
  std::vector<WeightedPair> chosen;
  Rational weight_sum;
  std::int64_t cardinality = 0;
  Rational alpha;  // cardinality / C(n,2)
};

RelaxationSolution solve_discrete_relaxation(int n);

/// Greedy prefix over an explicit ordering of pairs (must be ascending by
/// weight for the result to be optimal). Stops before the first pair that
/// would push the sum past n.
RelaxationSolution greedy_prefix(int n, std::span<const WeightedPair> ordered);

/// log(beta - 1) - beta / (beta - 2). Increasing on (2, inf).
double beta_residual(double beta);

/// Unique root beta0 > 2 of log(beta - 1) = beta / (beta - 2), found by
/// bisection on (2 + 1e-9, 64] until the bracket is no wider than tolerance.
/// Throws InputError unless tolerance > 0.
double solve_beta0(double tolerance = 1e-12);

/// ((beta0 - 2)^2 - 2) / (beta0 (beta0 - 2)), the n -> infinity value of the
/// continuous relaxation.
double limit_constant(double beta0);

struct ContinuousBound {
  int n = 0;
  double beta0 = 0.0;
  double limit_constant = 0.0;
  double alpha_prime = 0.0;  // n^2/(n-1)^2 * limit_constant
  double lemma_bound = 0.0;  // (n-1)/n * alpha_prime + 1/n, an upper bound on alpha_n
};

ContinuousBound alpha_prime(int n);

/// nc - (nc - 2) log(nc - 1); non-negative exactly when the sublevel set
/// {1/x + 1/y <= c} of [1,n]^2 is feasible for the continuous relaxation.
/// Throws InputError for n < 3, c <= 0 or nc <= 1.
double feasibility_margin(int n, double c);

bool continuous_feasibility(int n, double c);

}  // namespace jdv
