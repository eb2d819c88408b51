#include "girthforge/chromatic.hpp"

#include <algorithm>

#include "girthforge/rational.hpp"

namespace girthforge {

namespace {

// Backtracking k-coloring, used only to recover a witness once chi is
// known (so the search is guaranteed to succeed).
bool color_with(const Graph& g, int k, const std::vector<int>& order,
                size_t idx, std::vector<int>& color) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int max_new = 0;
  for (size_t i = 0; i < idx; ++i) max_new = std::max(max_new, color[order[i]]);
  for (int c = 1; c <= std::min(k, max_new + 1); ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_with(g, k, order, idx + 1, color)) return true;
    color[v] = 0;
  }
  return false;
}

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g) {
  int n = g.n();
  if (n > kChromaticCap)
    throw InstanceTooLarge("chromatic_number_exact is capped at " +
                           std::to_string(kChromaticCap) + " vertices, got " +
                           std::to_string(n));
  ChromaticResult res;
  res.coloring.assign(n + 1, 0);
  if (n == 0) return res;

  // ind[S] = number of independent subsets of S.
  std::vector<uint64_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u - 1] |= uint64_t(1) << (v - 1);
    nbr[v - 1] |= uint64_t(1) << (u - 1);
  }
  size_t full = size_t(1) << n;
  std::vector<uint32_t> ind(full);
  ind[0] = 1;
  for (size_t s = 1; s < full; ++s) {
    int v = __builtin_ctzll(s);
    uint64_t rest = s & (s - 1);
    ind[s] = ind[rest] + ind[rest & ~nbr[v]];
  }

  // chi = smallest k with sum_S (-1)^{n-|S|} ind(S)^k > 0; the sum
  // counts ordered covers of V by k independent sets.
  int chi = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt total = 0;
    for (size_t s = 0; s < full; ++s) {
      BigInt term = ipow(BigInt(ind[s]), unsigned(k));
      if ((n - __builtin_popcountll(s)) & 1)
        total -= term;
      else
        total += term;
    }
    if (total > 0) {
      chi = k;
      break;
    }
  }
  res.chi = chi;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  bool ok = color_with(g, chi, order, 0, res.coloring);
  if (!ok)
    throw std::logic_error("witness extraction failed for exact chi");
  return res;
}

}  // namespace girthforge
