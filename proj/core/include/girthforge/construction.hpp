#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "girthforge/girth.hpp"
#include "girthforge/graph.hpp"
#include "girthforge/poset.hpp"
#include "girthforge/rational.hpp"

namespace girthforge {

enum class Tri : uint8_t { False, True, Unchecked };
std::string to_string(Tri t);

/// Parameters of the layered random construction.
///
/// Asymptotic reproduces the asymptotic parameter chain N=3n,
/// k=floor(log2(N)/(10r)), m=floor(N/k); it requires n >= 2^{10r} and
/// is only materializable for tiny r.  DeskScale takes k and m
/// directly and scales the edge probabilities to
/// p_ij = min(1, c*2^{j-i}/m), which keeps expected degrees testable.
/// Both modes share the sampling code path.
struct ConstructionParams {
  enum class Mode { Asymptotic, DeskScale };
  Mode mode = Mode::DeskScale;
  int r = 4;              // girth target, >= 4
  int layers = 2;         // k
  long long layer_size = 2;  // m
  Rational edge_scale = 1;   // c; fixed to 1 in Asymptotic
  uint64_t seed = 0;
  std::optional<int> target_n;

  static ConstructionParams desk_scale(int layers, long long layer_size, int r,
                                       Rational edge_scale, uint64_t seed,
                                       std::optional<int> target_n = {});
  static ConstructionParams asymptotic(int r, const BigInt& n, uint64_t seed);

  long long total_vertices() const { return layers * layer_size; }
  // p_ij numerator/denominator before the min(1,.) cap.
  Rational edge_probability(int i, int j) const;
};

/// A sampled graph together with its layer structure: vertices 1..N
/// split into k consecutive intervals of size m.
struct LayeredGraph {
  Graph graph;
  int layers = 0;
  long long layer_size = 0;

  int layer_of(int v) const { return int((v - 1) / layer_size) + 1; }
  int layer_first(int i) const { return int((i - 1) * layer_size) + 1; }
  int layer_last(int i) const { return int(i * layer_size); }
  void validate() const;  // partition + no intra-layer edges
};

// Deterministic in (params.seed); the per-layer-pair RNG substream has
// index i*k+j, so the output does not depend on sampling order.
LayeredGraph sample_layered_graph(const ConstructionParams& params);

/// Exact check of the no-sparse-bipartite-hole event: for every layer
/// pair i<j and every X in A_i with Y = the common non-neighborhood of
/// X in A_j, |X||Y| < 3m^2 2^{i-j}.  Exhaustive over X, so only run
/// for m <= 16; larger m reports Unchecked.
Tri event_A_check(const LayeredGraph& lg);

inline constexpr int kEventACap = 16;

struct RepairReport {
  std::vector<int> deleted;          // original labels, ascending
  long long bad_pairs_found = 0;     // X, before repair
  long long short_cycles_found = 0;  // Y, before repair
  bool cycle_cap_exceeded = false;   // Y is a lower bound when set
  Tri event_A = Tri::Unchecked;
  int survived_n = 0;
  std::vector<int> old_label;        // new label -> original label
};

/// Deletes a greedy hitting set of all bad pairs and all cycles
/// shorter than r, then re-verifies girth and bad-pair-freedom from
/// scratch on the survivor graph.  When cycle enumeration overruns its
/// cap the repair falls back to peeling one shortest-cycle vertex at a
/// time until the girth target holds.  Survivors are relabeled to
/// 1..n' preserving order.
std::pair<Graph, RepairReport> repair(const LayeredGraph& lg, int r,
                                      std::optional<int> target_n = {},
                                      long long cycle_cap = kDefaultCycleCap);

/// Monotone-reachability order on a bad-pair-free graph; the identity
/// labeling is the linear extension and the cover relation equals the
/// edge set.  Throws BadPairsPresent if the precondition fails.
Poset build_poset(const Graph& gprime);

struct VerificationReport {
  struct Clause {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass
  };
  std::vector<Clause> clauses;
  bool all_pass = true;
  long long alpha = 0;
  bool alpha_exact = false;
  long long chi_lower = 0;  // ceil(n'/alpha)

  void add(const std::string& name, bool pass, const std::string& witness = "");
  const Clause* find(const std::string& name) const;
};

VerificationReport verify_construction(const Graph& gprime, int r,
                                       const ConstructionParams& params,
                                       Tri event_A = Tri::Unchecked,
                                       long long mis_budget = 20'000'000);

/// Exact-rational certificate of the constant chain at n = 2^{10r}:
/// n/(7m) = k/21 and k/21 > log2(n)/(1000 r), where k is bounded below
/// through the bracket 19/12 < log2(3) < 27/17.  Also certifies the
/// truncated series sum_{l<=K} l 2^{-l} = 2 - (K+2) 2^{-K} < 2.
struct ConstantChain {
  int r = 0;
  Rational lhs_lower;   // rational lower bound on k/21
  Rational rhs;         // log2(n)/(1000 r) = 1/100 exactly
  bool holds = false;
  Rational series_sum;  // sum_{l=1}^{64} l 2^{-l}
  bool series_ok = false;
};

ConstantChain constant_chain(int r);

// sum_{l=1}^{K} l 2^{-l}, exact.
Rational monotone_series_partial(int K);

// --- artifact io -----------------------------------------------------

// Layered format: graph format plus a `layers <k> <m>` line after the
// header.
LayeredGraph parse_layered_graph(std::istream& in);
LayeredGraph parse_layered_graph_file(const std::string& path);
void write_layered_graph(std::ostream& out, const LayeredGraph& lg,
                         const std::vector<std::string>& header_comments = {});

// Flat key-value blocks.
void write_repair_report(std::ostream& out, const RepairReport& rep,
                         const std::vector<std::string>& header_comments = {});
void write_verification_report(std::ostream& out, const VerificationReport& rep,
                               const std::vector<std::string>& header_comments = {});

}  // namespace girthforge
