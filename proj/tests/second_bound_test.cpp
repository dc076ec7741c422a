#include <doctest.h>

#include <cmath>
#include <random>

#include "jdv/constructions.hpp"
#include "jdv/errors.hpp"
#include "jdv/jdv.hpp"
#include "jdv/second_bound.hpp"
#include "support/random_graphs.hpp"

using namespace jdv;

TEST_CASE("diagnostics examples") {
  SUBCASE("H_6") {
    const auto d = diagnostics(half_graph(6));
    CHECK(d.class_degree == std::map<int, int>{{1, 1}, {2, 2}, {3, 3}, {4, 3}, {5, 4}});
    CHECK(d.b == 13);
    CHECK(d.support_size == 7);
    CHECK(2 * d.support_size <= d.b + 5);
  }
  SUBCASE("K2") {
    const std::vector<Edge> k2{{1, 2}};
    const auto d = diagnostics(Graph(2, k2));
    CHECK(d.class_degree == std::map<int, int>{{1, 1}});
    CHECK(d.b == 1);
    CHECK(d.support_size == 1);
  }
  SUBCASE("path") {
    const std::vector<Edge> path{{1, 2}, {2, 3}};
    const auto d = diagnostics(Graph(3, path));
    CHECK(d.class_degree == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(d.b == 2);
    CHECK(d.distinct == 2);
    CHECK(d.singles == 1);
    CHECK(d.y == 2);     // single degree 2: min(2, 2)
    CHECK(d.z_sq == 1);  // multiple degree 1: min(2, 1)
    CHECK(d.multiple_mass == 2);
    CHECK(d.g_value == doctest::Approx(2.0 + std::sqrt(2.0) * std::sqrt(2.0)));
  }
}

TEST_CASE("D_i counts adjacent degree classes from the support") {
  for (std::uint64_t seed = 500; seed < 700; ++seed) {
    const Graph g = testing::random_graph(seed, 2, 25);
    const auto d = diagnostics(g);
    const SupportSet a = support(jdv_of(g));
    for (const auto& [i, count] : d.class_degree) {
      int expected = 0;
      for (const DegreePair& p : a) expected += (p.low == i || p.high == i) ? 1 : 0;
      CHECK(count == expected);
    }
    CHECK(2LL * d.support_size <= d.b + d.n - 1);
  }
}

TEST_CASE("degree_sum_bound") {
  CHECK(degree_sum_bound(4, 3) == 6);
  CHECK(degree_sum_bound(5, 4) == 10);
  CHECK(degree_sum_bound(7, 5) == make_rational(5 * 1 * 2 + 7 * 4, 2));  // 5*1 + 7*4/2
  CHECK_THROWS_AS(degree_sum_bound(4, 2), InputError);
  CHECK_THROWS_AS(degree_sum_bound(10, 7), InputError);  // 98 <= 100
  CHECK(degree_sum_bound_applies(10, 8));

  for (int n = 4; n <= 50; ++n) {
    const auto d = diagnostics(half_graph(n));
    REQUIRE(degree_sum_bound_applies(n, d.distinct));
    CHECK(Rational(static_cast<long>(d.y + d.z_sq)) <= degree_sum_bound(n, d.distinct));
  }
}

TEST_CASE("degree_sum_bound against the best possible degree set") {
  // Over all m-subsets of {1..n-1}, the largest sum of min(m, i) is attained by
  // the top m degrees.
  for (int n = 4; n <= 14; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      if (!degree_sum_bound_applies(n, m)) continue;
      int best = 0;
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        if (std::popcount(mask) != m) continue;
        int sum = 0;
        for (int i = 1; i <= n - 1; ++i) {
          if (mask >> (i - 1) & 1U) sum += std::min(m, i);
        }
        best = std::max(best, sum);
      }
      CHECK(Rational(best) == degree_sum_bound(n, m));
    }
  }
}

TEST_CASE("maximize_f") {
  const FOptimum opt = maximize_f(1e-3);
  CHECK(std::abs(opt.best.value - 13.0 / 24.0) <= 1e-9);
  CHECK(std::abs(opt.best.m - 5.0 / 6.0) <= 1e-4);
  CHECK(std::abs(opt.low_branch.value - 3.0 / 8.0) <= 1e-9);
  CHECK(std::abs(opt.low_branch.m - 0.5) <= 1e-12);

  CHECK(opt.best.s == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(opt.best.z == doctest::Approx(std::sqrt(5.0 / 72.0)).epsilon(1e-12));
  CHECK(opt.best.y == doctest::Approx(29.0 / 72.0).epsilon(1e-12));

  CHECK(f_constraint_violation(opt.best.y, opt.best.z, opt.best.s, opt.best.m) <= 1e-9);
  CHECK(f_constraint_violation(opt.low_branch.y, opt.low_branch.z, opt.low_branch.s, opt.low_branch.m) <= 1e-9);

  CHECK(opt.numeric_value <= opt.best.value + 1e-9);
  CHECK(opt.numeric_value >= opt.best.value - 1e-9);
  CHECK(opt.max_grid_value <= opt.best.value);
  CHECK(opt.grid_points > 100000);

  CHECK_THROWS_AS(maximize_f(0.0), InputError);
  CHECK_THROWS_AS(maximize_f(0.05), InputError);
}

TEST_CASE("no feasible point of the full problem beats 13/24") {
  // Rejection sampling over (Y, Z, S, M) in [0,1]^4 with points pushed onto
  // the (c) boundary half of the time.
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int feasible = 0;
  double best = 0.0;
  for (int trial = 0; trial < 400000; ++trial) {
    const double m = unit(rng);
    const double s = unit(rng);
    const double z = unit(rng);
    double y = unit(rng);
    if (trial % 2 == 0) y = m * (1.0 - m) + (2.0 * m - 1.0) / 2.0 - z * z;
    if (f_constraint_violation(y, z, s, m) > 0.0) continue;
    ++feasible;
    best = std::max(best, f_objective(y, z, s, m));
  }
  CHECK(feasible > 1000);
  CHECK(best <= 13.0 / 24.0 + 1e-12);
  CHECK(best > 0.5);
  CHECK(13.0 / 24.0 < 0.55225694);
}

TEST_CASE("verify_chain") {
  SUBCASE("K2 skips the degree-sum link") {
    const std::vector<Edge> k2{{1, 2}};
    const auto report = verify_chain(Graph(2, k2));
    CHECK(report.all_pass());
    REQUIRE(report.links.size() == 3);
    CHECK_FALSE(report.links[2].applicable);
  }
  SUBCASE("H_100") {
    const auto report = verify_chain(half_graph(100));
    CHECK(report.all_pass());
    for (const auto& link : report.links) CHECK(link.applicable);
  }
  SUBCASE("random graphs") {
    for (std::uint64_t seed = 9000; seed < 9300; ++seed) {
      const Graph g = testing::random_graph(seed, 5, 60);
      const auto report = verify_chain(g);
      CHECK(report.all_pass());
      CHECK(report.isolated_vertices_present == (degree_profile(g).isolated > 0));
      const auto& d = report.diagnostics;
      CHECK(d.multiple_mass == d.n - d.singles - d.isolated);
    }
  }
}
