#include "girthforge/independent_set.hpp"

#include <algorithm>

namespace girthforge {

namespace {

struct Solver {
  const Graph& g;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<int> best, cur;

  explicit Solver(const Graph& g_, long long budget_) : g(g_), budget(budget_) {}

  int deg_in(int v, const Bitset& p) const {
    Bitset t = g.neighbor_bits(v);
    t &= p;
    return t.count();
  }

  // Greedy clique cover of the candidate set; its size is an upper
  // bound on the independence number of g[p].
  int clique_cover_bound(Bitset p) const {
    int cliques = 0;
    while (true) {
      int v = p.first();
      if (v < 0) break;
      ++cliques;
      p.reset(v);
      Bitset common = g.neighbor_bits(v);
      common &= p;
      int u;
      while ((u = common.first()) >= 0) {
        p.reset(u);
        common.reset(u);
        common &= g.neighbor_bits(u);
      }
    }
    return cliques;
  }

  void run(Bitset p) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    // Vertices of degree <= 1 in the candidate graph can always be
    // taken.
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      if (deg_in(v, p) <= 1) {
        cur.push_back(v);
        p.reset(v);
        Bitset nb = g.neighbor_bits(v);
        nb &= p;
        p.subtract(nb);
        v = 0;  // restart scan, the reduction may cascade
      }
    }
    if (!p.any()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (int(cur.size()) + clique_cover_bound(p) <= int(best.size())) return;

    int pick = -1, pick_deg = -1;
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      int d = deg_in(v, p);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }

    size_t mark = cur.size();
    // Include pick.
    Bitset q = p;
    q.reset(pick);
    q.subtract(g.neighbor_bits(pick));
    cur.push_back(pick);
    run(q);
    cur.resize(mark);
    if (exhausted) return;
    // Exclude pick.
    p.reset(pick);
    run(p);
    cur.resize(mark);
  }
};

}  // namespace

MisResult max_independent_set(const Graph& g, long long node_budget) {
  Solver s(g, node_budget);
  Bitset all(g.n());
  for (int v = 1; v <= g.n(); ++v) all.set(v);
  // Seed with a min-degree greedy set so an exhausted budget still
  // leaves a useful certified witness.
  {
    Bitset p = all;
    while (p.any()) {
      int pick = -1, pick_deg = g.n() + 1;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        int d = s.deg_in(v, p);
        if (d < pick_deg) {
          pick_deg = d;
          pick = v;
        }
      }
      s.best.push_back(pick);
      p.reset(pick);
      p.subtract(g.neighbor_bits(pick));
    }
  }
  s.run(all);

  MisResult r;
  r.alpha = int(s.best.size());
  r.witness = s.best;
  std::sort(r.witness.begin(), r.witness.end());
  r.exact = !s.exhausted;
  r.nodes = s.nodes;
  return r;
}

}  // namespace girthforge
