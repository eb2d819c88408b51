#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

/// Strict partial order on 1..n, stored as per-element successor
/// bitsets, plus a distinguished linear extension.
class Poset {
 public:
  Poset() = default;

  // `above[x]` must be the strict-successor set of x; irreflexivity
  // and transitivity are validated.  If no extension is given the
  // smallest-label-first topological order is used.
  static Poset from_relation(int n, std::vector<Bitset> above,
                             std::optional<std::vector<int>> extension = {});

  // Reachability closure of a cover-edge list (x,y) meaning y covers x.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           std::optional<std::vector<int>> extension = {});

  int n() const { return n_; }
  bool less(int x, int y) const { return above_[x].test(y); }
  const Bitset& above(int x) const { return above_[x]; }
  const std::vector<int>& extension() const { return extension_; }

 private:
  int n_ = 0;
  std::vector<Bitset> above_;
  std::vector<int> extension_;
};

/// Hasse diagram: directed edges x->y, meaning y covers x.
struct CoverDag {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> up_adjacency() const;    // x -> covers of x
  std::vector<std::vector<int>> down_adjacency() const;  // y -> covered by y
  Graph cover_graph() const;  // undirected shadow
};

CoverDag covers_from_order(const Poset& p);

struct UniqueGenCheck {
  bool unique = true;
  std::pair<int, int> violation{0, 0};  // two cover chains between these
};
UniqueGenCheck is_uniquely_generated(const CoverDag& cd);

// Topological order, smallest label first among the available.
// Throws ConfigError on a cyclic relation.
std::vector<int> linear_extension(const CoverDag& cd);

struct Coloring {
  std::vector<int> color;  // 1-based, color[0] unused
  int max_color = 0;
};

/// The greedy coloring from the log-bound proof: process vertices in
/// extension order, give each the smallest color absent from its
/// covered set C(v).  Properness on the whole cover graph is verified
/// before returning.
Coloring greedy_color(const CoverDag& cd, const std::vector<int>& ext);

// max color <= floor(log2 n) + 1.
bool verify_color_bound(const Coloring& coloring, int n);

struct DownSet {
  int root = 0;
  std::vector<int> members;                    // T(v), ascending
  std::vector<std::pair<int, int>> cover_edges;  // induced
};

// T(v) with its tree certificate; throws NotUniquelyGenerated.
DownSet down_set_tree(const CoverDag& cd, int v);

// |T(v)| >= 2^{color(v)-1} for every vertex.
bool verify_tree_claim(const CoverDag& cd, const Coloring& coloring);

Graph comparability_graph(const Poset& p);

struct Height2 {
  std::vector<int> minimals;  // includes isolated elements
  std::vector<int> maximals;
};

// Succeeds iff there is no 3-element chain; throws ChainOfThree.
Height2 check_height2(const Poset& p);

// Poset file: `poset <n>`, `cover <x> <y>` lines (y covers x), an
// optional `ext <perm...>` line.  The order is rebuilt as the
// reachability closure of the cover lines.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);
void write_poset(std::ostream& out, const CoverDag& cd,
                 const std::vector<int>& extension,
                 const std::vector<std::string>& header_comments = {});

}  // namespace girthforge
