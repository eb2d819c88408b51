#include "girthforge/monotone.hpp"

#include <algorithm>
#include <deque>

namespace girthforge {

std::vector<Bitset> monotone_reachability(const Graph& g) {
  int n = g.n();
  std::vector<Bitset> reach(n + 1, Bitset(n));
  // One pass in decreasing label order: everything reachable from x
  // goes through a larger-labeled neighbor.
  for (int x = n; x >= 1; --x) {
    for (int y : g.neighbors(x)) {
      if (y <= x) continue;
      reach[x].set(y);
      reach[x] |= reach[y];
    }
  }
  return reach;
}

std::vector<PathCount> saturating_path_counts(
    int n, const std::vector<std::pair<int, int>>& dag_edges, int source) {
  std::vector<std::vector<int>> out(n + 1);
  for (auto [u, v] : dag_edges) {
    if (u > v) std::swap(u, v);
    out[u].push_back(v);
  }
  std::vector<uint8_t> cnt(n + 1, 0);
  cnt[source] = 1;
  for (int u = source; u <= n; ++u) {
    if (!cnt[u]) continue;
    for (int v : out[u]) cnt[v] = uint8_t(std::min(2, cnt[v] + cnt[u]));
  }
  std::vector<PathCount> res(n + 1, PathCount::Zero);
  for (int v = 1; v <= n; ++v) res[v] = PathCount(cnt[v]);
  return res;
}

namespace {

// Unit-capacity max flow on the label-oriented DAG between x and y,
// stopped as soon as the value reaches 2.
struct FlowEdge {
  int to;
  int cap;
  int rev;
};

class UnitFlow {
 public:
  UnitFlow(int n) : adj_(n + 1) {}

  void add(int u, int v) {
    adj_[u].push_back({v, 1, int(adj_[v].size())});
    adj_[v].push_back({u, 0, int(adj_[u].size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> from(adj_.size(), {-1, -1});
    std::deque<int> q{s};
    from[s] = {s, 0};
    while (!q.empty() && from[t].first < 0) {
      int u = q.front();
      q.pop_front();
      for (size_t i = 0; i < adj_[u].size(); ++i) {
        const FlowEdge& e = adj_[u][i];
        if (e.cap <= 0 || from[e.to].first >= 0) continue;
        from[e.to] = {u, int(i)};
        q.push_back(e.to);
      }
    }
    if (from[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [u, i] = from[v];
      adj_[u][i].cap -= 1;
      adj_[v][adj_[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }

 private:
  std::vector<std::vector<FlowEdge>> adj_;
};

}  // namespace

bool has_two_edge_disjoint_monotone_paths(const Graph& g, int x, int y) {
  if (x >= y) return false;
  UnitFlow f(g.n());
  for (auto [u, v] : g.edges()) {
    if (u >= x && v <= y) f.add(u, v);
  }
  return f.augment(x, y) && f.augment(x, y);
}

std::vector<std::pair<int, int>> list_bad_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> bad;
  auto reach = monotone_reachability(g);
  for (int x = 1; x <= g.n(); ++x) {
    if (!reach[x].any()) continue;
    auto counts = saturating_path_counts(g.n(), g.edges(), x);
    for (int y = reach[x].first(); y >= 0; y = reach[x].next(y)) {
      if (counts[y] != PathCount::Many) continue;
      if (has_two_edge_disjoint_monotone_paths(g, x, y)) bad.emplace_back(x, y);
    }
  }
  return bad;
}

}  // namespace girthforge
