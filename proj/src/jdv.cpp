#include "jdv/jdv.hpp"

#include <algorithm>
#include <string>

#include "jdv/errors.hpp"

namespace jdv {

Jdv::Jdv(int n) : n_(n) {
  if (n < 1) throw InputError("JDV needs n >= 1, got " + std::to_string(n));
}

void Jdv::check_index(int i, int k) const {
  if (i < 1 || i > k || k > n_ - 1) {
    throw InputError("JDV index (" + std::to_string(i) + "," + std::to_string(k) +
                     ") outside 1 <= i <= k <= " + std::to_string(n_ - 1));
  }
}

std::int64_t Jdv::at(int i, int k) const {
  check_index(i, k);
  auto it = entries_.find({i, k});
  return it == entries_.end() ? 0 : it->second;
}

void Jdv::set(int i, int k, std::int64_t count) {
  check_index(i, k);
  if (count < 0) {
    throw InputError("negative JDV count at (" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
  if (count == 0) {
    entries_.erase({i, k});
  } else {
    entries_[{i, k}] = count;
  }
}

void Jdv::add(int i, int k, std::int64_t delta) { set(i, k, at(i, k) + delta); }

std::int64_t Jdv::total() const {
  std::int64_t sum = 0;
  for (const auto& [pos, count] : entries_) sum += count;
  return sum;
}

Jdv jdv_of(const Graph& g) {
  Jdv j(g.order());
  for (const Edge& e : g.edges()) {
    const int a = g.degree(e.u);
    const int b = g.degree(e.v);
    j.add(std::min(a, b), std::max(a, b));
  }
  return j;
}

SupportSet support(const Jdv& j) {
  SupportSet s;
  for (const auto& [pos, count] : j.entries()) s.insert(s.end(), pos);
  return s;
}

Rational weighted_degree_sum(const Jdv& j) {
  Rational sum = 0;
  for (const auto& [pos, count] : j.entries()) {
    sum += make_rational(pos.low + pos.high, static_cast<long>(pos.low) * pos.high) *
           Rational(static_cast<long>(count));
  }
  return sum;
}

std::string to_string(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::NonIntegerClass:
      return "NonIntegerClass(" + std::to_string(v.i) + ")";
    case ViolationKind::DiagonalOverflow:
      return "DiagonalOverflow(" + std::to_string(v.i) + ")";
    case ViolationKind::OffDiagonalOverflow:
      return "OffDiagonalOverflow(" + std::to_string(v.i) + "," + std::to_string(v.k) + ")";
    case ViolationKind::VertexBudget:
      return "VertexBudget";
  }
  return "Unknown";
}

GraphicalityVerdict check_graphical(const Jdv& j, bool strict_vertex_budget) {
  GraphicalityVerdict verdict;

  // Endpoint incidences per degree class: the diagonal entry m_ii has both
  // endpoints in class i.
  std::map<int, __int128> incidences;
  for (const auto& [pos, count] : j.entries()) {
    incidences[pos.low] += count;
    incidences[pos.high] += count;
  }

  auto fail = [&](Violation v) {
    verdict.graphical = false;
    verdict.first_violation = v;
    return verdict;
  };

  std::optional<Violation> non_integer;
  for (const auto& [degree, inc] : incidences) {
    const auto lo = static_cast<std::int64_t>(inc / degree);
    const auto rem = static_cast<std::int64_t>(inc % degree);
    verdict.raw_class_sizes.emplace(degree, make_rational(rem, degree) + Rational(static_cast<long>(lo)));
    if (rem == 0) {
      verdict.class_sizes.emplace(degree, lo);
    } else if (!non_integer) {
      non_integer = Violation{ViolationKind::NonIntegerClass, degree, degree};
    }
  }
  if (non_integer) return fail(*non_integer);

  for (const auto& [pos, count] : j.entries()) {
    const __int128 ni = verdict.class_sizes.at(pos.low);
    if (pos.diagonal()) {
      if (count > ni * (ni - 1) / 2) {
        return fail({ViolationKind::DiagonalOverflow, pos.low, pos.low});
      }
    } else {
      const __int128 nk = verdict.class_sizes.at(pos.high);
      if (count > ni * nk) {
        return fail({ViolationKind::OffDiagonalOverflow, pos.low, pos.high});
      }
    }
  }

  if (strict_vertex_budget) {
    __int128 vertices = 0;
    for (const auto& [degree, size] : verdict.class_sizes) vertices += size;
    if (vertices > j.n()) return fail({ViolationKind::VertexBudget, 0, 0});
  }

  verdict.graphical = true;
  return verdict;
}

}  // namespace jdv
