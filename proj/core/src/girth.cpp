#include "girthforge/girth.hpp"

#include <algorithm>
#include <deque>

namespace girthforge {

namespace {

struct BfsResult {
  std::vector<int> dist, parent;
};

BfsResult bfs_from(const Graph& g, int s, int min_vertex) {
  BfsResult r;
  r.dist.assign(g.n() + 1, -1);
  r.parent.assign(g.n() + 1, 0);
  std::deque<int> q{s};
  r.dist[s] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u)) {
      if (v < min_vertex || r.dist[v] >= 0) continue;
      r.dist[v] = r.dist[u] + 1;
      r.parent[v] = u;
      q.push_back(v);
    }
  }
  return r;
}

}  // namespace

Girth girth(const Graph& g) {
  // BFS from every root; the minimum of dist[u]+dist[w]+1 over
  // non-tree edges (u,w) equals the girth.
  int best = -1;
  int best_root = 0, best_u = 0, best_w = 0;
  for (int s = 1; s <= g.n(); ++s) {
    BfsResult b = bfs_from(g, s, 1);
    for (auto [u, w] : g.edges()) {
      if (b.dist[u] < 0 || b.dist[w] < 0) continue;
      if (b.parent[u] == w || b.parent[w] == u) continue;
      int len = b.dist[u] + b.dist[w] + 1;
      if (best < 0 || len < best) {
        best = len;
        best_root = s;
        best_u = u;
        best_w = w;
      }
    }
  }
  Girth result;
  if (best < 0) return result;  // forest

  // Rebuild the witness from the two BFS tree paths, trimming at the
  // deepest shared vertex so the result is always a simple cycle.
  BfsResult b = bfs_from(g, best_root, 1);
  std::vector<int> path_u;
  std::vector<char> on_u(g.n() + 1, 0);
  for (int x = best_u;; x = b.parent[x]) {
    path_u.push_back(x);
    on_u[x] = 1;
    if (x == best_root) break;
  }
  std::vector<int> path_w;
  int meet = best_root;
  for (int x = best_w;; x = b.parent[x]) {
    if (on_u[x]) {
      meet = x;
      break;
    }
    path_w.push_back(x);
  }
  std::vector<int> cycle;
  for (int x : path_u) {
    cycle.push_back(x);
    if (x == meet) break;
  }
  for (auto it = path_w.rbegin(); it != path_w.rend(); ++it)
    cycle.push_back(*it);

  result.finite = true;
  result.value = int(cycle.size());
  result.witness = std::move(cycle);
  return result;
}

CycleEnumeration count_short_cycles(const Graph& g, int r, long long cap) {
  CycleEnumeration out;
  int max_len = r - 1;
  if (max_len < 3) return out;
  long long work = 0;
  const long long work_cap = std::max<long long>(20'000'000, 100 * cap);

  std::vector<int> path;
  std::vector<char> on_path(g.n() + 1, 0);
  std::vector<int> dist;

  // Paths start at their smallest vertex s and stay inside {v > s};
  // requiring path[1] < path.back() at closing kills the reflection.
  for (int s = 1; s <= g.n() && !out.cap_exceeded; ++s) {
    BfsResult b = bfs_from(g, s, s);
    dist = std::move(b.dist);
    path.assign(1, s);
    on_path.assign(g.n() + 1, 0);
    on_path[s] = 1;

    auto dfs = [&](auto&& self, int u) -> void {
      if (out.cap_exceeded) return;
      int len = int(path.size()) - 1;  // edges used so far
      if (len >= 2 && g.has_edge(u, s) && path[1] < path.back()) {
        ++out.count;
        if (out.count > cap) {
          out.cap_exceeded = true;
          return;
        }
        out.witnesses.push_back(path);
      }
      if (len + 1 >= max_len + 1) return;
      for (int v : g.neighbors(u)) {
        if (++work > work_cap) {
          out.cap_exceeded = true;
          return;
        }
        if (v <= s || on_path[v]) continue;
        if (dist[v] < 0 || len + 1 + dist[v] > max_len) continue;
        path.push_back(v);
        on_path[v] = 1;
        self(self, v);
        path.pop_back();
        on_path[v] = 0;
      }
    };
    dfs(dfs, s);
  }
  if (out.cap_exceeded) out.witnesses.clear();
  return out;
}

}  // namespace girthforge
