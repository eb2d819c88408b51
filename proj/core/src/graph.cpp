#include "girthforge/graph.hpp"

#include <algorithm>
#include <ostream>

#include "girthforge/lineio.hpp"

namespace girthforge {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw ConfigError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw ConfigError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n)
      throw ConfigError("edge endpoint out of range: " + std::to_string(u) +
                        "-" + std::to_string(v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ConfigError("duplicate edge");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.resize(n + 1);
  g.adj_bits_.assign(n + 1, Bitset(n));
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.adj_bits_[u].set(v);
    g.adj_bits_[v].set(u);
  }
  return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> new_label(n_ + 1, 0);
  int next = 0;
  for (int v : keep) {
    if (v < 1 || v > n_ || new_label[v])
      throw ConfigError("bad induced vertex list");
    new_label[v] = ++next;
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges_)
    if (new_label[u] && new_label[v]) es.emplace_back(new_label[u], new_label[v]);
  return from_edges(next, std::move(es));
}

Graph parse_graph(std::istream& in) {
  detail::LineReader rd(in);
  std::vector<std::string> tok;
  if (!rd.next(tok)) throw ParseError(rd.lineno(), "empty graph file");
  if (tok[0] != "graph" || tok.size() != 2) rd.fail("expected 'graph <n>'");
  long long n = rd.to_int(tok[1]);
  if (n < 0 || n > 100'000'000) rd.fail("vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  while (rd.next(tok)) {
    if (tok[0] != "e" || tok.size() != 3)
      rd.fail("unknown directive '" + tok[0] + "'");
    long long u = rd.to_int(tok[1]), v = rd.to_int(tok[2]);
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      rd.fail("bad edge " + tok[1] + " " + tok[2]);
    edges.emplace_back(int(u), int(v));
  }
  try {
    return Graph::from_edges(int(n), std::move(edges));
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
}

Graph parse_graph_file(const std::string& path) {
  auto f = detail::open_or_throw(path);
  try {
    return parse_graph(f);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "graph " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

}  // namespace girthforge
