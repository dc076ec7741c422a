#include "jdv/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "jdv/errors.hpp"

namespace jdv {

namespace {

struct PairTable {
  std::vector<int> u;
  std::vector<int> v;
};

PairTable pair_table(int n) {
  PairTable t;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      t.u.push_back(a);
      t.v.push_back(b);
    }
  }
  return t;
}

struct Partial {
  int best = -1;
  std::uint64_t mask = 0;
};

// Support size of the graph with edge set `mask`: collects the degree pair of
// every edge into a 64-bit set indexed by 8*low + high (degrees stay below 8).
int support_of_mask(const PairTable& t, std::uint64_t mask) {
  std::array<int, 9> deg{};
  for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
    const int b = std::countr_zero(bits);
    ++deg[static_cast<std::size_t>(t.u[static_cast<std::size_t>(b)])];
    ++deg[static_cast<std::size_t>(t.v[static_cast<std::size_t>(b)])];
  }
  std::uint64_t seen = 0;
  for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
    const int b = std::countr_zero(bits);
    const int x = deg[static_cast<std::size_t>(t.u[static_cast<std::size_t>(b)])];
    const int y = deg[static_cast<std::size_t>(t.v[static_cast<std::size_t>(b)])];
    seen |= std::uint64_t{1} << (8 * std::min(x, y) + std::max(x, y));
  }
  return std::popcount(seen);
}

Partial scan(const PairTable& t, std::uint64_t first, std::uint64_t last) {
  Partial p;
  for (std::uint64_t mask = first; mask < last; ++mask) {
    const int s = support_of_mask(t, mask);
    if (s > p.best) {
      p.best = s;
      p.mask = mask;
    }
  }
  return p;
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  const PairTable t = pair_table(n);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < t.u.size(); ++b) {
    if (mask >> b & 1U) edges.push_back({t.u[b], t.v[b]});
  }
  return Graph(n, edges);
}

OracleResult max_support_exhaustive(int n, int cap, int workers) {
  if (n < 2) throw InputError("oracle needs n >= 2, got " + std::to_string(n));
  const int pairs = n * (n - 1) / 2;
  if (n > cap || n > 8) {
    throw InputError("oracle refuses n=" + std::to_string(n) + " (cap " + std::to_string(cap) +
                     "): would scan 2^" + std::to_string(pairs) + " ~ " +
                     std::to_string(std::ldexp(1.0, pairs)) + " labeled graphs");
  }
  workers = std::max(1, workers);

  const PairTable table = pair_table(n);
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const auto chunks = static_cast<std::uint64_t>(workers);
  std::vector<Partial> partials(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t w = 0; w < chunks; ++w) {
    const std::uint64_t first = total * w / chunks;
    const std::uint64_t last = total * (w + 1) / chunks;
    threads.emplace_back([&, w, first, last] { partials[w] = scan(table, first, last); });
  }
  for (auto& th : threads) th.join();

  Partial best;
  for (const Partial& p : partials) {
    if (p.best > best.best || (p.best == best.best && p.mask < best.mask)) best = p;
  }

  OracleResult r;
  r.n = n;
  r.max_support = best.best;
  r.witness_mask = best.mask;
  r.witness = graph_from_mask(n, best.mask);
  r.graphs_scanned = total;
  return r;
}

}  // namespace jdv
