#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "girthforge/util.hpp"

namespace girthforge {

/// Undirected simple graph on vertices 1..n.  Edges are stored with
/// u < v, sorted and deduplicated at construction; the adjacency lists
/// and adjacency bitsets are built once and the value is immutable
/// after that.
class Graph {
 public:
  Graph() = default;

  // Validates: endpoints in 1..n, no self-loops, no duplicate edges.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const Bitset& neighbor_bits(int v) const { return adj_bits_[v]; }
  bool has_edge(int u, int v) const {
    return u != v && adj_bits_[u].test(v);
  }
  int degree(int v) const { return int(adj_[v].size()); }

  // Induced subgraph on `keep` (ascending vertex list), relabeled to
  // 1..keep.size() preserving relative order.
  Graph induced(const std::vector<int>& keep) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> adj_bits_;
};

// Text format: `graph <n>`, one `e <u> <v>` per edge, `#` comments.
// An optional `layers <k> <m>` directive is accepted only by the
// layered-graph parser in construction.hpp.  Parsing is strict:
// unknown directives raise ParseError with the line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& header_comments = {});

}  // namespace girthforge
