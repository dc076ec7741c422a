#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "jdv/errors.hpp"
#include "jdv/relaxations.hpp"

using namespace jdv;

namespace {

// Root of log(b-1) = b/(b-2) and the derived constant, from a 40-digit
// mpmath findroot run.
constexpr double kBeta0 = 5.6804985798829056;
constexpr double kLimit = 0.55225679530569715;

// Maximum feasible subset size by scanning all subsets of P_n.
int brute_force_max(int n) {
  std::vector<Rational> w;
  for (int i = 1; i <= n - 1; ++i) {
    for (int k = i; k <= n - 1; ++k) w.push_back(Rational(1) / i + Rational(1) / k);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << w.size()); ++mask) {
    Rational sum = 0;
    for (std::size_t b = 0; b < w.size(); ++b) {
      if (mask >> b & 1U) sum += w[b];
    }
    if (sum <= n) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("pair weights") {
  const auto p3 = pair_weights(3);
  REQUIRE(p3.size() == 3);
  CHECK((p3[0].low == 2 && p3[0].high == 2 && p3[0].weight == 1));
  CHECK((p3[1].low == 1 && p3[1].high == 2 && p3[1].weight == make_rational(3, 2)));
  CHECK((p3[2].low == 1 && p3[2].high == 1 && p3[2].weight == 2));

  const auto p2 = pair_weights(2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].weight == 2);

  const auto p4 = pair_weights(4);
  REQUIRE(p4.size() == 6);
  const std::vector<Rational> expected{make_rational(2, 3), make_rational(5, 6), 1,
                                       make_rational(4, 3), make_rational(3, 2), 2};
  for (std::size_t idx = 0; idx < 6; ++idx) CHECK(p4[idx].weight == expected[idx]);

  const auto p30 = pair_weights(30);
  CHECK(p30.size() == 435);
  for (std::size_t idx = 1; idx < p30.size(); ++idx) {
    const auto& a = p30[idx - 1];
    const auto& b = p30[idx];
    CHECK((a.weight < b.weight || (a.weight == b.weight && std::tie(a.low, a.high) < std::tie(b.low, b.high))));
  }
  CHECK_THROWS_AS(pair_weights(1), InputError);
}

TEST_CASE("discrete relaxation examples") {
  const auto s2 = solve_discrete_relaxation(2);
  CHECK(s2.cardinality == 1);
  CHECK(s2.weight_sum == 2);
  CHECK(s2.alpha == 1);

  const auto s3 = solve_discrete_relaxation(3);
  CHECK(s3.cardinality == 2);
  CHECK(s3.weight_sum == make_rational(5, 2));
  CHECK(s3.alpha == make_rational(2, 3));
  CHECK((s3.chosen[0].low == 2 && s3.chosen[1].low == 1));

  const auto s4 = solve_discrete_relaxation(4);
  CHECK(s4.cardinality == 4);
  CHECK(s4.weight_sum == make_rational(23, 6));
  CHECK(s4.alpha == make_rational(2, 3));
}

TEST_CASE("greedy optimum matches brute force") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(solve_discrete_relaxation(n).cardinality == brute_force_max(n));
  }
}

TEST_CASE("greedy stopping rule is exact") {
  for (int n = 2; n <= 120; ++n) {
    const auto pairs = pair_weights(n);
    const auto sol = solve_discrete_relaxation(n);
    Rational sum = 0;
    for (const auto& p : sol.chosen) sum += p.weight;
    CHECK(sum == sol.weight_sum);
    CHECK(sol.weight_sum <= n);
    CHECK(sol.cardinality == static_cast<std::int64_t>(sol.chosen.size()));
    if (sol.chosen.size() < pairs.size()) CHECK(sol.weight_sum + pairs[sol.chosen.size()].weight > n);
  }
}

TEST_CASE("permuting equal-weight pairs does not change the optimum") {
  std::mt19937_64 rng(5);
  for (int n : {12, 30, 57, 90}) {
    auto pairs = pair_weights(n);
    const auto canonical = greedy_prefix(n, pairs);
    for (int rep = 0; rep < 5; ++rep) {
      auto first = pairs.begin();
      while (first != pairs.end()) {
        auto last = std::find_if(first, pairs.end(), [&](const WeightedPair& p) { return p.weight != first->weight; });
        std::shuffle(first, last, rng);
        first = last;
      }
      const auto shuffled = greedy_prefix(n, pairs);
      CHECK(shuffled.cardinality == canonical.cardinality);
      CHECK(shuffled.weight_sum == canonical.weight_sum);
    }
  }
}

TEST_CASE("beta0") {
  CHECK(beta_residual(5.0) < 0.0);
  CHECK(beta_residual(6.0) > 0.0);

  const double b = solve_beta0(1e-10);
  CHECK(std::abs(b - 5.68050) <= 5e-5);
  CHECK(std::abs(b - kBeta0) <= 1e-10);
  CHECK(std::abs(limit_constant(b) - kLimit) <= 1e-10);

  // The four-decimal figure 0.55225694 is the constant at the rounded root.
  CHECK(std::abs(limit_constant(5.68050) - 0.55225694) <= 1e-8);

  CHECK(std::abs(solve_beta0(1e-3) - kBeta0) <= 1e-3);
  CHECK_THROWS_AS(solve_beta0(0.0), InputError);
  CHECK_THROWS_AS(solve_beta0(-1.0), InputError);
}

TEST_CASE("alpha_prime") {
  const auto b10 = alpha_prime(10);
  CHECK(b10.alpha_prime == doctest::Approx(100.0 / 81.0 * kLimit).epsilon(1e-12));
  CHECK(std::abs(b10.alpha_prime - 0.68179) <= 1e-4);
  CHECK(std::abs(b10.lemma_bound - 0.71361) <= 1e-4);
  CHECK(b10.lemma_bound == doctest::Approx(0.9 * b10.alpha_prime + 0.1).epsilon(1e-14));
  CHECK(alpha_prime(100000).alpha_prime == doctest::Approx(kLimit).epsilon(1e-4));
  CHECK_THROWS_AS(alpha_prime(1), InputError);
}

TEST_CASE("continuous feasibility at the beta0 boundary") {
  const double b = solve_beta0(1e-12);
  for (int n : {3, 10, 100, 1000}) {
    const double c = b / n;
    CHECK(std::abs(feasibility_margin(n, c)) <= 1e-6 * n);
    CHECK(continuous_feasibility(n, 0.99 * c));
    CHECK_FALSE(continuous_feasibility(n, 1.01 * c));
  }
  CHECK_THROWS_AS(feasibility_margin(2, 1.0), InputError);
  CHECK_THROWS_AS(feasibility_margin(10, 0.0), InputError);
  CHECK_THROWS_AS(feasibility_margin(10, 0.1), InputError);
}

TEST_CASE("discrete relaxation sits under the lemma curve") {
  for (int n = 2; n <= 200; ++n) {
    CHECK(to_double(solve_discrete_relaxation(n).alpha) <= alpha_prime(n).lemma_bound + 1e-12);
  }
  CHECK(to_double(solve_discrete_relaxation(100).alpha) < 0.57);
  CHECK(to_double(solve_discrete_relaxation(500).alpha) < 0.56);
}
