#include "girthforge/poset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "girthforge/lineio.hpp"

namespace girthforge {

namespace {

std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (auto [x, y] : edges) {
    out[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> order;
  order.reserve(n);
  // Smallest label first among the available vertices.
  std::vector<char> ready(n + 1, 0);
  for (int round = 0; int(order.size()) < n; ++round) {
    int picked = 0;
    for (int v = 1; v <= n; ++v) {
      if (!ready[v] && indeg[v] == 0) {
        ready[v] = 1;
        order.push_back(v);
        for (int w : out[v]) --indeg[w];
        picked = 1;
        break;
      }
    }
    if (!picked) throw ConfigError("cover relation contains a cycle");
  }
  return order;
}

std::vector<Bitset> below_sets(const Poset& p) {
  std::vector<Bitset> below(p.n() + 1, Bitset(p.n()));
  for (int x = 1; x <= p.n(); ++x)
    for (int y = p.above(x).first(); y >= 0; y = p.above(x).next(y))
      below[y].set(x);
  return below;
}

}  // namespace

Poset Poset::from_relation(int n, std::vector<Bitset> above,
                           std::optional<std::vector<int>> extension) {
  if (int(above.size()) != n + 1) throw ConfigError("bad relation size");
  for (int x = 1; x <= n; ++x) {
    if (above[x].test(x)) throw ConfigError("order is not irreflexive");
    for (int y = above[x].first(); y >= 0; y = above[x].next(y)) {
      if (above[y].test(x)) throw ConfigError("order is not antisymmetric");
      Bitset t = above[y];
      t.subtract(above[x]);
      if (t.any()) throw ConfigError("order is not transitive");
    }
  }
  Poset p;
  p.n_ = n;
  p.above_ = std::move(above);
  if (extension) {
    if (int(extension->size()) != n) throw ConfigError("bad extension length");
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      int v = (*extension)[i];
      if (v < 1 || v > n || pos[v]) throw ConfigError("extension is not a permutation");
      pos[v] = i + 1;
    }
    for (int x = 1; x <= n; ++x)
      for (int y = p.above_[x].first(); y >= 0; y = p.above_[x].next(y))
        if (pos[x] > pos[y])
          throw ConfigError("extension does not respect the order");
    p.extension_ = std::move(*extension);
  } else {
    std::vector<std::pair<int, int>> rel;
    for (int x = 1; x <= n; ++x)
      for (int y = p.above_[x].first(); y >= 0; y = p.above_[x].next(y))
        rel.emplace_back(x, y);
    p.extension_ = topo_order(n, rel);
  }
  return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         std::optional<std::vector<int>> extension) {
  for (auto [x, y] : covers)
    if (x < 1 || x > n || y < 1 || y > n || x == y)
      throw ConfigError("cover edge out of range");
  std::vector<int> order = topo_order(n, covers);
  std::vector<std::vector<int>> up(n + 1);
  for (auto [x, y] : covers) up[x].push_back(y);
  std::vector<Bitset> above(n + 1, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    for (int y : up[x]) {
      above[x].set(y);
      above[x] |= above[y];
    }
  }
  return from_relation(n, std::move(above), std::move(extension));
}

std::vector<std::vector<int>> CoverDag::up_adjacency() const {
  std::vector<std::vector<int>> up(n + 1);
  for (auto [x, y] : edges) up[x].push_back(y);
  return up;
}

std::vector<std::vector<int>> CoverDag::down_adjacency() const {
  std::vector<std::vector<int>> down(n + 1);
  for (auto [x, y] : edges) down[y].push_back(x);
  return down;
}

Graph CoverDag::cover_graph() const {
  return Graph::from_edges(n, edges);
}

CoverDag covers_from_order(const Poset& p) {
  CoverDag cd;
  cd.n = p.n();
  auto below = below_sets(p);
  for (int x = 1; x <= p.n(); ++x) {
    for (int y = p.above(x).first(); y >= 0; y = p.above(x).next(y)) {
      Bitset mid = p.above(x);
      mid &= below[y];
      if (!mid.any()) cd.edges.emplace_back(x, y);
    }
  }
  return cd;
}

UniqueGenCheck is_uniquely_generated(const CoverDag& cd) {
  std::vector<int> order = topo_order(cd.n, cd.edges);
  std::vector<int> pos(cd.n + 1, 0);
  for (int i = 0; i < cd.n; ++i) pos[order[i]] = i;
  auto up = cd.up_adjacency();
  std::vector<uint8_t> cnt(cd.n + 1);
  for (int s = 1; s <= cd.n; ++s) {
    if (up[s].empty()) continue;
    std::fill(cnt.begin(), cnt.end(), 0);
    cnt[s] = 1;
    for (int i = pos[s]; i < cd.n; ++i) {
      int u = order[i];
      if (!cnt[u]) continue;
      for (int v : up[u]) {
        cnt[v] = uint8_t(std::min(2, cnt[v] + cnt[u]));
        if (cnt[v] >= 2) return {false, {s, v}};
      }
    }
  }
  return {};
}

std::vector<int> linear_extension(const CoverDag& cd) {
  return topo_order(cd.n, cd.edges);
}

Coloring greedy_color(const CoverDag& cd, const std::vector<int>& ext) {
  std::vector<int> pos(cd.n + 1, 0);
  if (int(ext.size()) != cd.n) throw ConfigError("bad extension length");
  for (int i = 0; i < cd.n; ++i) {
    int v = ext[i];
    if (v < 1 || v > cd.n || pos[v]) throw ConfigError("extension is not a permutation");
    pos[v] = i + 1;
  }
  for (auto [x, y] : cd.edges)
    if (pos[x] > pos[y])
      throw ConfigError("given order is not a linear extension of the covers");

  auto down = cd.down_adjacency();
  Coloring col;
  col.color.assign(cd.n + 1, 0);
  std::vector<char> seen;
  for (int v : ext) {
    seen.assign(down[v].size() + 2, 0);
    for (int u : down[v]) {
      int c = col.color[u];
      if (c <= int(down[v].size()) + 1) seen[c] = 1;
    }
    int c = 1;
    while (seen[c]) ++c;
    col.color[v] = c;
    col.max_color = std::max(col.max_color, c);
  }
  // Properness on the whole cover graph is a consequence of the rule;
  // recheck it anyway.
  for (auto [x, y] : cd.edges)
    if (col.color[x] == col.color[y])
      throw std::logic_error("greedy coloring not proper on cover edge " +
                             std::to_string(x) + "->" + std::to_string(y));
  return col;
}

bool verify_color_bound(const Coloring& coloring, int n) {
  int bound = 1;
  while ((1LL << bound) <= n) ++bound;  // bound = floor(log2 n) + 1
  return coloring.max_color <= bound;
}

DownSet down_set_tree(const CoverDag& cd, int v) {
  auto check = is_uniquely_generated(cd);
  if (!check.unique)
    throw NotUniquelyGenerated(check.violation.first, check.violation.second);

  auto down = cd.down_adjacency();
  Bitset in(cd.n);
  std::vector<int> stack{v};
  in.set(v);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : down[u])
      if (!in.test(w)) {
        in.set(w);
        stack.push_back(w);
      }
  }
  DownSet ds;
  ds.root = v;
  ds.members = in.to_vector();
  for (auto [x, y] : cd.edges)
    if (in.test(x) && in.test(y)) ds.cover_edges.emplace_back(x, y);
  if (int(ds.cover_edges.size()) != int(ds.members.size()) - 1)
    throw std::logic_error("down-set of a uniquely generated poset is not a tree");
  return ds;
}

bool verify_tree_claim(const CoverDag& cd, const Coloring& coloring) {
  auto down = cd.down_adjacency();
  // |T(v)| via reverse reachability, vertex by vertex.
  for (int v = 1; v <= cd.n; ++v) {
    Bitset in(cd.n);
    std::vector<int> stack{v};
    in.set(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : down[u])
        if (!in.test(w)) {
          in.set(w);
          stack.push_back(w);
        }
    }
    int k = coloring.color[v];
    if (k >= 1 && k - 1 < 62) {
      if ((long long)in.count() < (1LL << (k - 1))) return false;
    }
  }
  return true;
}

Graph comparability_graph(const Poset& p) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 1; x <= p.n(); ++x)
    for (int y = p.above(x).first(); y >= 0; y = p.above(x).next(y))
      edges.emplace_back(x, y);
  Graph g = Graph::from_edges(p.n(), std::move(edges));
  for (auto [x, y] : covers_from_order(p).edges)
    if (!g.has_edge(x, y))
      throw std::logic_error("cover edge missing from comparability graph");
  return g;
}

Height2 check_height2(const Poset& p) {
  auto below = below_sets(p);
  for (int z = 1; z <= p.n(); ++z) {
    if (below[z].any() && p.above(z).any())
      throw ChainOfThree(below[z].first(), z, p.above(z).first());
  }
  Height2 h;
  for (int v = 1; v <= p.n(); ++v) {
    if (below[v].any())
      h.maximals.push_back(v);
    else
      h.minimals.push_back(v);  // isolated elements count as minimal
  }
  return h;
}

Poset parse_poset(std::istream& in) {
  detail::LineReader rd(in);
  std::vector<std::string> tok;
  if (!rd.next(tok)) throw ParseError(rd.lineno(), "empty poset file");
  if (tok[0] != "poset" || tok.size() != 2) rd.fail("expected 'poset <n>'");
  long long n = rd.to_int(tok[1]);
  if (n < 0 || n > 10'000'000) rd.fail("element count out of range");
  std::vector<std::pair<int, int>> covers;
  std::optional<std::vector<int>> ext;
  while (rd.next(tok)) {
    if (tok[0] == "cover" && tok.size() == 3) {
      long long x = rd.to_int(tok[1]), y = rd.to_int(tok[2]);
      if (x < 1 || x > n || y < 1 || y > n || x == y)
        rd.fail("bad cover edge");
      covers.emplace_back(int(x), int(y));
    } else if (tok[0] == "ext" && tok.size() == size_t(n) + 1) {
      std::vector<int> perm;
      for (size_t i = 1; i < tok.size(); ++i)
        perm.push_back(int(rd.to_int(tok[i])));
      ext = std::move(perm);
    } else {
      rd.fail("unknown directive '" + tok[0] + "'");
    }
  }
  std::sort(covers.begin(), covers.end());
  if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
    throw ParseError(0, "duplicate cover edge");
  Poset p;
  try {
    p = Poset::from_covers(int(n), covers, std::move(ext));
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
  // Every stored cover line must be a genuine cover of the closure: a
  // transitively implied line is rejected.
  auto true_covers = covers_from_order(p).edges;
  std::sort(true_covers.begin(), true_covers.end());
  if (true_covers != covers)
    throw ParseError(0, "cover list contains a non-cover (transitive) edge");
  return p;
}

Poset parse_poset_file(const std::string& path) {
  auto f = detail::open_or_throw(path);
  try {
    return parse_poset(f);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_poset(std::ostream& out, const CoverDag& cd,
                 const std::vector<int>& extension,
                 const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "poset " << cd.n << "\n";
  auto sorted = cd.edges;
  std::sort(sorted.begin(), sorted.end());
  for (auto [x, y] : sorted) out << "cover " << x << " " << y << "\n";
  if (!extension.empty()) {
    out << "ext";
    for (int v : extension) out << " " << v;
    out << "\n";
  }
}

}  // namespace girthforge
