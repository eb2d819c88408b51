#include "girthforge/probability.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "girthforge/monotone.hpp"

namespace girthforge {

LemmaParams::LemmaParams(int m_, int d_) : m(m_), d(d_) {
  if (m < 1 || d < 1 || d > m)
    throw ConfigError("lemma parameters need 0 < d <= m");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

bool lemma1_bad_event(const LemmaParams& lp, Rng& rng) {
  int m = lp.m;
  if (m > kLemmaExactCap)
    throw InstanceTooLarge("exact lemma decision is capped at m = " +
                           std::to_string(kLemmaExactCap));
  std::vector<uint32_t> nbr(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rng.bernoulli(uint64_t(lp.d), uint64_t(m))) nbr[a] |= uint32_t(1) << b;

  // X over all subsets of A; Y is the common non-neighborhood, the
  // largest candidate for that X.  Bad iff d|X||Y| >= 3m^2 somewhere.
  uint32_t full = (uint32_t(1) << m) - 1;
  long long rhs = 3LL * m * m;
  std::vector<uint32_t> common(size_t(1) << m);
  common[0] = full;
  for (uint32_t s = 1; s <= full; ++s) {
    int low = __builtin_ctz(s);
    common[s] = common[s & (s - 1)] & ~nbr[low];
    long long prod = (long long)__builtin_popcount(s) *
                     __builtin_popcount(common[s]);
    if (prod * lp.d >= rhs) return true;
  }
  return false;
}

namespace {

void finalize_stats(McReport& rep) {
  long long t = rep.trials;
  if (t == 0) {
    rep.verdict = Verdict::Inconclusive;
    return;
  }
  double sum = 0;
  for (double v : rep.values) sum += v;
  rep.mean = sum / double(t);
  double ss = 0;
  for (double v : rep.values) ss += (v - rep.mean) * (v - rep.mean);
  double var = t > 1 ? ss / double(t - 1) : 0;
  rep.stderr_mean = std::sqrt(var / double(t));
}

}  // namespace

McReport lemma1_estimate(const LemmaParams& lp, long long trials,
                         uint64_t master_seed) {
  McReport rep;
  rep.statistic = "lemma1_bad_event";
  rep.trials = trials;
  rep.master_seed = master_seed;
  for (long long t = 0; t < trials; ++t) {
    Rng rng(derive_seed(master_seed, uint64_t(t)));
    bool bad = lemma1_bad_event(lp, rng);
    rep.hits += bad;
    rep.values.push_back(bad ? 1.0 : 0.0);
  }
  finalize_stats(rep);
  rep.expected = std::ldexp(1.0, -lp.m);                      // 2^-m
  rep.proof_bound = std::exp2(2.0 * lp.m) * std::exp(-3.0 * lp.m);
  if (trials == 0)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.verdict = rep.mean <= rep.expected ? Verdict::Pass : Verdict::Fail;
  return rep;
}

namespace {

Rational capped_edge_probability(int i, int j, long long m, const Rational& c) {
  Rational p = c * pow2(unsigned(j - i)) / BigInt(m);
  return p > 1 ? Rational(1) : p;
}

}  // namespace

Rational expected_monotone_paths(int i, int j, long long m, const Rational& c) {
  if (i >= j) throw ConfigError("expected_monotone_paths needs i < j");
  int gap = j - i;
  Rational total = 0;
  // Enumerate the intermediate layer subsets; a path through t
  // intermediate layers has m^t vertex choices.
  for (uint32_t mask = 0; mask < (uint32_t(1) << (gap - 1)); ++mask) {
    std::vector<int> seq{i};
    for (int t = 0; t < gap - 1; ++t)
      if (mask & (uint32_t(1) << t)) seq.push_back(i + 1 + t);
    seq.push_back(j);
    Rational prob = 1;
    for (size_t s = 0; s + 1 < seq.size(); ++s)
      prob *= capped_edge_probability(seq[s], seq[s + 1], m, c);
    total += prob * ipow(BigInt(m), unsigned(seq.size() - 2));
  }
  return total;
}

Rational bad_pair_two_path_term(int k, long long m) {
  return Rational(pow2(unsigned(4 * k)), BigInt(m) * m);
}

Rational bad_pair_bound(int k, long long m) {
  if (k < 2) throw ConfigError("bad_pair_bound needs k >= 2");
  return BigInt(k) * k * bad_pair_two_path_term(k, m);
}

Rational expected_bad_pairs_k3(long long m, const Rational& c) {
  Rational p13 = capped_edge_probability(1, 3, m, c);
  Rational step = capped_edge_probability(1, 2, m, c);
  Rational q = step * step;  // one fixed middle vertex
  Rational none = rpow(1 - q, unsigned(m));
  Rational one = BigInt(m) * q * rpow(1 - q, unsigned(m - 1));
  // Bad iff (direct edge and >= 1 two-path) or >= 2 two-paths.
  Rational p_bad = p13 * (1 - none) + (1 - p13) * (1 - none - one);
  return BigInt(m) * m * p_bad;
}

CycleExpectation short_cycle_expectation(int k, long long m, int r,
                                         const Rational& c) {
  if (k < 3) throw ConfigError("triangle expectation needs k >= 3");
  CycleExpectation out;
  Rational p_max = capped_edge_probability(1, k, m, c);
  BigInt N = BigInt(k) * m;
  out.union_bound = 0;
  for (int l = 3; l <= r - 1; ++l)
    out.union_bound += ipow(N, unsigned(l)) * rpow(p_max, unsigned(l));
  out.exact_triangles = 0;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int l = j + 1; l <= k; ++l)
        out.exact_triangles += BigInt(m) * m * m *
                               capped_edge_probability(i, j, m, c) *
                               capped_edge_probability(j, l, m, c) *
                               capped_edge_probability(i, l, m, c);
  return out;
}

namespace {

McReport run_layered_mc(const ConstructionParams& base, long long trials,
                        uint64_t master_seed, const std::string& statistic,
                        double (*stat)(const LayeredGraph&)) {
  McReport rep;
  rep.statistic = statistic;
  rep.trials = trials;
  rep.master_seed = master_seed;
  for (long long t = 0; t < trials; ++t) {
    ConstructionParams p = base;
    p.seed = derive_seed(master_seed, uint64_t(t));
    LayeredGraph lg = sample_layered_graph(p);
    double v = stat(lg);
    rep.hits += (v != 0);
    rep.values.push_back(v);
  }
  finalize_stats(rep);
  return rep;
}

void verdict_three_se(McReport& rep) {
  if (rep.trials == 0) {
    rep.verdict = Verdict::Inconclusive;
    return;
  }
  double dev = std::fabs(rep.mean - rep.expected);
  rep.verdict = dev <= 3 * rep.stderr_mean ? Verdict::Pass : Verdict::Fail;
}

double count_monotone_paths_end_to_end(const LayeredGraph& lg) {
  int n = lg.graph.n();
  std::vector<double> cnt(n + 1, 0);
  cnt[1] = 1;
  for (int u = 1; u <= n; ++u) {
    if (cnt[u] == 0) continue;
    for (int v : lg.graph.neighbors(u))
      if (v > u) cnt[v] += cnt[u];
  }
  return cnt[n];
}

double count_triangles(const LayeredGraph& lg) {
  long long total = 0;
  for (auto [u, v] : lg.graph.edges()) {
    Bitset common = lg.graph.neighbor_bits(u);
    common &= lg.graph.neighbor_bits(v);
    for (int w = common.next(v); w >= 0; w = common.next(w)) ++total;
  }
  return double(total);
}

double count_bad_pairs(const LayeredGraph& lg) {
  return double(list_bad_pairs(lg.graph).size());
}

}  // namespace

McReport mc_monotone_paths(const ConstructionParams& base, long long trials,
                           uint64_t master_seed) {
  McReport rep = run_layered_mc(base, trials, master_seed, "monotone_paths",
                                &count_monotone_paths_end_to_end);
  rep.expected = to_double(
      expected_monotone_paths(1, base.layers, base.layer_size, base.edge_scale));
  verdict_three_se(rep);
  return rep;
}

McReport mc_triangles(const ConstructionParams& base, long long trials,
                      uint64_t master_seed) {
  McReport rep =
      run_layered_mc(base, trials, master_seed, "triangles", &count_triangles);
  rep.expected = to_double(
      short_cycle_expectation(base.layers, base.layer_size, base.r,
                              base.edge_scale)
          .exact_triangles);
  verdict_three_se(rep);
  return rep;
}

McReport mc_bad_pairs(const ConstructionParams& base, long long trials,
                      uint64_t master_seed) {
  McReport rep =
      run_layered_mc(base, trials, master_seed, "bad_pairs", &count_bad_pairs);
  int k = base.layers;
  if (k == 2) {
    // Two-layer graphs cannot have bad pairs at all.
    rep.expected = 0;
    rep.verdict = rep.trials == 0 ? Verdict::Inconclusive
                  : rep.mean == 0 ? Verdict::Pass
                                  : Verdict::Fail;
  } else if (k == 3) {
    rep.expected = to_double(expected_bad_pairs_k3(base.layer_size, base.edge_scale));
    verdict_three_se(rep);
  } else {
    // Only the analytic upper bound is available.
    BigInt N = BigInt(k) * base.layer_size;
    rep.expected =
        to_double(Rational(N * N, 2) * bad_pair_bound(k, base.layer_size));
    rep.verdict = rep.trials == 0 ? Verdict::Inconclusive
                  : rep.mean <= rep.expected ? Verdict::Pass
                                             : Verdict::Fail;
  }
  return rep;
}

void write_mc_csv(std::ostream& out, const McReport& rep) {
  out << "trial,seed,statistic,value\n";
  out << std::setprecision(17);
  for (long long t = 0; t < rep.trials; ++t)
    out << t << "," << derive_seed(rep.master_seed, uint64_t(t)) << ","
        << rep.statistic << "," << rep.values[size_t(t)] << "\n";
  out << "# trials=" << rep.trials << "\n";
  out << "# master_seed=" << rep.master_seed << "\n";
  out << "# hits=" << rep.hits << "\n";
  out << "# mean=" << rep.mean << "\n";
  out << "# stderr=" << rep.stderr_mean << "\n";
  out << "# bound=" << rep.expected << "\n";
  if (rep.proof_bound != 0) out << "# proof_bound=" << rep.proof_bound << "\n";
  out << "# verdict=" << to_string(rep.verdict) << "\n";
}

}  // namespace girthforge
