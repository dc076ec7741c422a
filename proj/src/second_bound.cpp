#include "jdv/second_bound.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "jdv/errors.hpp"
#include "jdv/jdv.hpp"

namespace jdv {

SecondBoundDiagnostics diagnostics(const Graph& g) {
  const DegreeProfile profile = degree_profile(g);
  const SupportSet a = support(jdv_of(g));

  SecondBoundDiagnostics d;
  d.n = g.order();
  d.isolated = profile.isolated;
  d.support_size = static_cast<int>(a.size());
  d.distinct = profile.distinct;
  d.singles = profile.single_count();
  d.multiple_mass = profile.multiple_mass();

  for (const auto& [degree, size] : profile.class_sizes) d.class_degree[degree] = 0;
  for (const DegreePair& p : a) {
    ++d.class_degree[p.low];
    if (!p.diagonal()) ++d.class_degree[p.high];
  }
  for (const auto& [degree, count] : d.class_degree) d.b += count;

  const int m = d.distinct;
  for (int i : profile.singles) d.y += std::min(m, i);
  for (int i : profile.multiples) d.z_sq += std::min(m, i);
  d.g_value = static_cast<double>(d.y) + std::sqrt(static_cast<double>(m)) *
                                             std::sqrt(static_cast<double>(d.z_sq)) *
                                             std::sqrt(static_cast<double>(d.multiple_mass));
  return d;
}

bool degree_sum_bound_applies(int n, int m) {
  return 2 * static_cast<long long>(m) * m > static_cast<long long>(n) * n;
}

Rational degree_sum_bound(int n, int m) {
  if (!degree_sum_bound_applies(n, m)) {
    throw InputError("degree-sum bound needs m > n/sqrt(2); got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
  }
  const long nl = n;
  const long ml = m;
  return Rational(ml * (nl - ml - 1)) + make_rational(nl * (2 * ml - nl + 1), 2);
}

double f_objective(double y, double z, double s, double m) {
  return y + std::sqrt(m) * z * std::sqrt(1.0 - s);
}

double f_constraint_violation(double y, double z, double s, double m) {
  const double terms[] = {
      -y, -z, -s, -m, s - 1.0,                                  // (a)
      s - m, m - (1.0 + s) / 2.0,                               // (b)
      y + z * z - (m * (1.0 - m) + (2.0 * m - 1.0) / 2.0),      // (c)
  };
  return *std::max_element(std::begin(terms), std::end(terms));
}

namespace {

// After Y saturates (c) and S takes its least value, f depends on (M, Z) only.
struct Branch {
  double m_min;
  double m_max;
  double (*slack)(double m);         // S as a function of M
  double quad_a, quad_b;             // f(Z0(M), M) = a M^2 + b M - 1/2
  double (*z_peak)(double m);        // argmax over Z for fixed M
};

double y_cap(double m) { return -m * m + 2.0 * m - 0.5; }

FPoint point_at(const Branch& br, double m, double z) {
  FPoint p;
  p.m = m;
  p.s = br.slack(m);
  p.z = z;
  p.y = y_cap(m) - z * z;
  p.value = f_objective(p.y, p.z, p.s, p.m);
  return p;
}

FPoint closed_form(const Branch& br) {
  const double vertex = -br.quad_b / (2.0 * br.quad_a);
  const double m = std::clamp(vertex, br.m_min, br.m_max);
  return point_at(br, m, br.z_peak(m));
}

template <typename F>
double golden_max(F&& fn, double lo, double hi, double* argmax) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    }
  }
  double x = 0.5 * (a + b);
  double best = fn(x);
  for (double cand : {lo, hi}) {
    const double v = fn(cand);
    if (v > best) {
      best = v;
      x = cand;
    }
  }
  if (argmax) *argmax = x;
  return best;
}

struct NumericResult {
  double value = -1.0;
  double m = 0.0;
  long long grid_points = 0;
  double max_grid_value = -1.0;
};

NumericResult search_branch(const Branch& br, double step) {
  NumericResult r;
  auto best_over_z = [&](double m) {
    const double cap = y_cap(m);
    if (cap < 0.0) return -1.0;
    const double z_max = std::sqrt(cap);
    return golden_max([&](double z) { return point_at(br, m, z).value; }, 0.0, z_max, nullptr);
  };

  const long steps = static_cast<long>(std::ceil((br.m_max - br.m_min) / step));
  double best_m = br.m_min;
  for (long a = 0; a <= steps; ++a) {
    const double m = std::min(br.m_min + a * step, br.m_max);
    const double cap = y_cap(m);
    if (cap < 0.0) continue;
    const double z_max = std::sqrt(cap);
    for (double z = 0.0; z <= z_max; z += step) {
      const double v = point_at(br, m, z).value;
      ++r.grid_points;
      r.max_grid_value = std::max(r.max_grid_value, v);
    }
    const double v = best_over_z(m);
    if (v > r.value) {
      r.value = v;
      best_m = m;
    }
  }
  double refined_m = best_m;
  const double refined = golden_max(best_over_z, std::max(br.m_min, best_m - step),
                                    std::min(br.m_max, best_m + step), &refined_m);
  if (refined > r.value) {
    r.value = refined;
    best_m = refined_m;
  }
  r.m = best_m;
  return r;
}

}  // namespace

FOptimum maximize_f(double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 1e-2) {
    throw InputError("maximize_f grid step must lie in (0, 1e-2]");
  }
  // (c) has a non-negative right-hand side only for M >= 1 - sqrt(2)/2.
  const Branch low{1.0 - std::sqrt(2.0) / 2.0, 0.5,
                   [](double) { return 0.0; },
                   -1.0, 9.0 / 4.0,
                   [](double m) { return std::sqrt(m) / 2.0; }};
  const Branch high{0.5, 1.0,
                    [](double m) { return 2.0 * m - 1.0; },
                    -1.5, 2.5,
                    [](double m) { return std::sqrt(m * (1.0 - m) / 2.0); }};

  FOptimum out;
  out.low_branch = closed_form(low);
  out.high_branch = closed_form(high);
  out.best = out.low_branch.value >= out.high_branch.value ? out.low_branch : out.high_branch;

  const NumericResult nl = search_branch(low, grid_step);
  const NumericResult nh = search_branch(high, grid_step);
  const NumericResult& nb = nl.value >= nh.value ? nl : nh;
  out.numeric_value = nb.value;
  out.numeric_m = nb.m;
  out.grid_points = nl.grid_points + nh.grid_points;
  out.max_grid_value = std::max(nl.max_grid_value, nh.max_grid_value);

  if (out.numeric_value > out.best.value + 1e-9 || out.max_grid_value > out.best.value + 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "numeric search found f = " << out.numeric_value << " above closed-form optimum "
        << out.best.value;
    throw std::logic_error(msg.str());
  }
  return out;
}

bool ChainReport::all_pass() const {
  return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return !l.applicable || l.pass; });
}

ChainReport verify_chain(const Graph& g) {
  ChainReport report;
  report.diagnostics = diagnostics(g);
  const SecondBoundDiagnostics& d = report.diagnostics;
  report.isolated_vertices_present = d.isolated > 0;

  {
    ChainLink link;
    link.name = "support";
    link.lhs = d.support_size;
    link.rhs = (static_cast<double>(d.b) + d.n - 1) / 2.0;
    link.pass = 2LL * d.support_size <= d.b + d.n - 1;
    link.detail = "2|A| = " + std::to_string(2LL * d.support_size) +
                  ", B + n - 1 = " + std::to_string(d.b + d.n - 1);
    report.links.push_back(link);
  }
  {
    ChainLink link;
    link.name = "class_sum";
    link.lhs = static_cast<double>(d.b);
    link.rhs = d.g_value;
    link.pass = link.lhs <= link.rhs + 1e-9;
    link.detail = "B = " + std::to_string(d.b) + ", y = " + std::to_string(d.y) +
                  ", z^2 = " + std::to_string(d.z_sq) + ", multiple mass = " + std::to_string(d.multiple_mass);
    report.links.push_back(link);
  }
  {
    ChainLink link;
    link.name = "degree_sum";
    const long long lhs = d.y + d.z_sq;
    link.lhs = static_cast<double>(lhs);
    if (degree_sum_bound_applies(d.n, d.distinct)) {
      const Rational bound = degree_sum_bound(d.n, d.distinct);
      link.rhs = to_double(bound);
      link.pass = Rational(static_cast<long>(lhs)) <= bound;
      link.detail = "y + z^2 = " + std::to_string(lhs) + ", bound = " + to_string(bound);
    } else {
      link.applicable = false;
      link.rhs = 0.0;
      link.detail = "skipped: m = " + std::to_string(d.distinct) + " <= n/sqrt(2)";
    }
    report.links.push_back(link);
  }
  return report;
}

}  // namespace jdv
