#pragma once

#include <map>
#include <string>
#include <vector>

#include "jdv/graph.hpp"
#include "jdv/rational.hpp"

namespace jdv {

/// Per-graph quantities behind the 13/24 bound.
///
/// D_i is the number of degrees k for which the class pair {i, k} carries at
/// least one edge. Summing D_i counts each off-diagonal support position twice
/// and each diagonal one once, so 2|A| <= B + n - 1.
struct SecondBoundDiagnostics {
  int n = 0;
  int isolated = 0;                  // n0
  int support_size = 0;              // |A(G)|
  std::map<int, int> class_degree;   // D_i for degrees present in the graph
  long long b = 0;                   // B(G) = sum D_i
  int distinct = 0;                  // m
  int singles = 0;                   // s
  int multiple_mass = 0;             // sum of n_i over multiple degrees (= n - s - n0)
  long long y = 0;                   // sum over singles of min(m, i)
  long long z_sq = 0;                // sum over multiples of min(m, i)
  double g_value = 0.0;              // y + sqrt(m) sqrt(z_sq) sqrt(multiple_mass)
};

SecondBoundDiagnostics diagnostics(const Graph& g);

/// m(n - m - 1) + n(2m - n + 1)/2, the largest possible value of
/// sum_{n_i > 0} min(m, i) over graphs with m distinct degrees.
/// Only claimed for m > n/sqrt(2); throws InputError otherwise.
Rational degree_sum_bound(int n, int m);

/// True iff m > n / sqrt(2), tested exactly as 2 m^2 > n^2.
bool degree_sum_bound_applies(int n, int m);

/// f(Y, Z, S, M) = Y + sqrt(M) Z sqrt(1 - S).
double f_objective(double y, double z, double s, double m);

/// Largest violation of constraints (a)-(c) at a point; <= 0 means feasible.
///   (a) all variables >= 0, S <= 1
///   (b) S <= M <= (1 + S)/2
///   (c) Y + Z^2 <= M(1 - M) + (2M - 1)/2
double f_constraint_violation(double y, double z, double s, double m);

struct FPoint {
  double y = 0.0;
  double z = 0.0;
  double s = 0.0;
  double m = 0.0;
  double value = 0.0;
};

struct FOptimum {
  FPoint best;         // overall argmax, from the closed-form branch solutions
  FPoint low_branch;   // best point with M <= 1/2 (S = 0)
  FPoint high_branch;  // best point with M >= 1/2 (S = 2M - 1)
  double numeric_value = 0.0;  // grid + golden-section search over (M, Z)
  double numeric_m = 0.0;
  long long grid_points = 0;
  double max_grid_value = 0.0;  // largest f seen on the raw grid
};

/// Maximizes f under (a)-(c). With S and Y eliminated (Y saturates (c),
/// S = max(0, 2M - 1)) both branches are quadratics in Z then in M and are
/// solved in closed form; a grid of the given step with golden-section
/// refinement checks the result independently. Throws InputError unless
/// 0 < grid_step <= 1e-2, and std::logic_error if the numeric search beats
/// the closed form.
FOptimum maximize_f(double grid_step = 1e-3);

struct ChainLink {
  std::string name;
  bool applicable = true;
  bool pass = true;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;  // exact sides where available, or why the link was skipped
};

struct ChainReport {
  SecondBoundDiagnostics diagnostics;
  std::vector<ChainLink> links;
  bool isolated_vertices_present = false;

  bool all_pass() const;
};

/// Evaluates the finite-n links of the 13/24 argument on a graph:
///   support:    |A| <= (B + n - 1)/2
///   class_sum:  B <= y + sqrt(m) sqrt(z_sq) sqrt(sum over multiples of n_i)
///   degree_sum: y + z_sq <= degree_sum_bound(n, m), when m > n/sqrt(2)
ChainReport verify_chain(const Graph& g);

}  // namespace jdv
