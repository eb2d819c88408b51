#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "girthforge/construction.hpp"
#include "girthforge/rational.hpp"
#include "girthforge/rng.hpp"

namespace girthforge {

/// Random bipartite hole test: A and B of size m, each cross pair an
/// independent edge with probability d/m.  The bad event: some X in A
/// and Y in B with no edge between them and |X||Y| >= 3m^2/d.
struct LemmaParams {
  int m = 0;
  int d = 0;  // 0 < d <= m, so p = d/m <= 1

  LemmaParams(int m_, int d_);
  Rational threshold() const { return Rational(3 * m * m, d); }
};

inline constexpr int kLemmaExactCap = 16;

// One sampled instance, decided exactly: X ranges over all subsets of
// A and Y is fixed to the common non-neighborhood of X (the maximizer
// of |Y| for that X).  m <= 16.
bool lemma1_bad_event(const LemmaParams& lp, Rng& rng);

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct McReport {
  std::string statistic;
  long long trials = 0;
  uint64_t master_seed = 0;
  long long hits = 0;       // bad events, for indicator statistics
  double mean = 0;
  double stderr_mean = 0;   // sqrt(sample variance / trials)
  double expected = 0;      // analytic target or bound
  double proof_bound = 0;   // intermediate bound where the proof has one
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> values;  // per-trial statistic
};

/// Bad-event frequency over seeded trials (trial t uses substream
/// derive_seed(master_seed, t)).  `expected` carries the statement
/// bound 2^-m, `proof_bound` the intermediate 2^{2m} e^{-3m}; verdict
/// compares frequency with 2^-m.
McReport lemma1_estimate(const LemmaParams& lp, long long trials,
                         uint64_t master_seed);

/// Exact expected number of monotone paths between a fixed vertex of
/// A_i and a fixed vertex of A_j, summed over all intermediate layer
/// subsets with the min(1,.) cap applied per edge.  For c = 1 and no
/// caps this closes to 2^{2(j-i)-1}/m.
Rational expected_monotone_paths(int i, int j, long long m, const Rational& c);

// The analytic per-pair bound k^2 2^{4k} / m^2 and its two-path
// factor 2^{4k}/m^2.
Rational bad_pair_bound(int k, long long m);
Rational bad_pair_two_path_term(int k, long long m);

/// Exact expected number of bad pairs for k = 3 layers: the only
/// candidates are A_1 x A_3 pairs, whose monotone paths are the direct
/// edge plus the m two-step paths (automatically edge-disjoint).
Rational expected_bad_pairs_k3(long long m, const Rational& c);

struct CycleExpectation {
  Rational union_bound;      // sum_{l=3}^{r-1} N^l p_max^l
  Rational exact_triangles;  // sum over layer triples of m^3 p p p
};

CycleExpectation short_cycle_expectation(int k, long long m, int r,
                                         const Rational& c);

// --- Monte Carlo drivers (used by the mc subcommand and the tests) ---

// Monotone path count between the first vertex of A_1 and the last
// vertex of A_k, per sampled instance.
McReport mc_monotone_paths(const ConstructionParams& base, long long trials,
                           uint64_t master_seed);
// Triangle count per sampled instance.
McReport mc_triangles(const ConstructionParams& base, long long trials,
                      uint64_t master_seed);
// Bad-pair count per sampled instance (flow oracle); expected value is
// exact only for k = 3, otherwise the union bound is reported.
McReport mc_bad_pairs(const ConstructionParams& base, long long trials,
                      uint64_t master_seed);

/// CSV: `trial,seed,statistic,value` rows, then `# key=value` summary
/// comment lines.
void write_mc_csv(std::ostream& out, const McReport& rep);

}  // namespace girthforge
