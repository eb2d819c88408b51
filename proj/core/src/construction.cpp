#include "girthforge/construction.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "girthforge/independent_set.hpp"
#include "girthforge/lineio.hpp"
#include "girthforge/monotone.hpp"
#include "girthforge/rng.hpp"

namespace girthforge {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unchecked";
  }
}

ConstructionParams ConstructionParams::desk_scale(int layers, long long layer_size,
                                                  int r, Rational edge_scale,
                                                  uint64_t seed,
                                                  std::optional<int> target_n) {
  if (layers < 2) throw ConfigError("need at least 2 layers");
  if (layer_size < 2) throw ConfigError("layer size must be at least 2");
  if (r < 4) throw ConfigError("girth target must be at least 4");
  if (edge_scale <= 0) throw ConfigError("edge scale must be positive");
  ConstructionParams p;
  p.mode = Mode::DeskScale;
  p.layers = layers;
  p.layer_size = layer_size;
  p.r = r;
  p.edge_scale = std::move(edge_scale);
  p.seed = seed;
  p.target_n = target_n;
  return p;
}

ConstructionParams ConstructionParams::asymptotic(int r, const BigInt& n,
                                                   uint64_t seed) {
  if (r < 4) throw ConfigError("girth target must be at least 4");
  if (n < pow2(unsigned(10 * r)))
    throw ConfigError("asymptotic mode requires n >= 2^(10r)");
  BigInt N = 3 * n;
  unsigned log2N = unsigned(boost::multiprecision::msb(N));  // floor(log2 N)
  long long k = (long long)(log2N / unsigned(10 * r));
  if (k < 2) throw ConfigError("derived layer count below 2");
  BigInt m = N / k;
  if (pow2(unsigned(k)) > m)
    throw ConfigError("edge probability would exceed 1: 2^k > m");
  if (N > 10'000'000)
    throw InstanceTooLarge("asymptotic instance has " + N.str() +
                           " vertices; not materializable");
  ConstructionParams p;
  p.mode = Mode::Asymptotic;
  p.layers = int(k);
  p.layer_size = m.convert_to<long long>();
  p.r = r;
  p.edge_scale = 1;
  p.seed = seed;
  return p;
}

Rational ConstructionParams::edge_probability(int i, int j) const {
  if (i >= j) throw ConfigError("edge_probability needs i < j");
  return edge_scale * pow2(unsigned(j - i)) / BigInt(layer_size);
}

void LayeredGraph::validate() const {
  if (layers < 1 || layer_size < 1 || graph.n() != layers * layer_size)
    throw ConfigError("layer intervals do not partition the vertex set");
  for (auto [u, v] : graph.edges())
    if (layer_of(u) == layer_of(v))
      throw ConfigError("intra-layer edge " + std::to_string(u) + "-" +
                        std::to_string(v));
}

LayeredGraph sample_layered_graph(const ConstructionParams& params) {
  int k = params.layers;
  long long m = params.layer_size;
  long long N = params.total_vertices();
  if (N > 5'000'000) throw InstanceTooLarge("layered graph too large to sample");

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      Rational p = params.edge_probability(i, j);
      if (params.mode == ConstructionParams::Mode::Asymptotic && p > 1)
        throw ConfigError("edge probability exceeds 1 in asymptotic mode");
      if (p > 1) p = 1;  // desk-scale cap
      uint64_t num = numerator(p).convert_to<uint64_t>();
      uint64_t den = denominator(p).convert_to<uint64_t>();
      // Substream per layer pair: index i*k+j.
      Rng rng(derive_seed(params.seed, uint64_t(i) * k + j));
      long long base_i = (i - 1) * m, base_j = (j - 1) * m;
      for (long long x = 1; x <= m; ++x)
        for (long long y = 1; y <= m; ++y)
          if (rng.bernoulli(num, den))
            edges.emplace_back(int(base_i + x), int(base_j + y));
    }
  }
  LayeredGraph lg;
  lg.graph = Graph::from_edges(int(N), std::move(edges));
  lg.layers = k;
  lg.layer_size = m;
  lg.validate();
  return lg;
}

Tri event_A_check(const LayeredGraph& lg) {
  long long m = lg.layer_size;
  if (m > kEventACap) return Tri::Unchecked;
  int k = lg.layers;
  long long m2x3 = 3 * m * m;
  uint32_t full = (m == 32) ? 0xffffffffu : ((uint32_t(1) << m) - 1);
  std::vector<uint32_t> nbr(m);
  std::vector<uint32_t> common(size_t(1) << m);
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (long long t = 0; t < m; ++t) {
        int x = int((i - 1) * m + t + 1);
        uint32_t mask = 0;
        for (long long s = 0; s < m; ++s)
          if (lg.graph.has_edge(x, int((j - 1) * m + s + 1)))
            mask |= uint32_t(1) << s;
        nbr[t] = mask;
      }
      // common[S] = non-neighborhood in A_j shared by all of X=S; the
      // largest Y admissible for this X, so checking it decides the
      // event exactly.
      common[0] = full;
      for (uint32_t s = 1; s <= full; ++s) {
        int low = __builtin_ctz(s);
        common[s] = common[s & (s - 1)] & ~nbr[low];
        long long prod = (long long)__builtin_popcount(s) *
                         __builtin_popcount(common[s]);
        if ((prod << (j - i)) >= m2x3) return Tri::False;
      }
    }
  }
  return Tri::True;
}

namespace {

Graph alive_subgraph(const LayeredGraph& lg, const std::vector<char>& alive) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : lg.graph.edges())
    if (alive[u] && alive[v]) edges.emplace_back(u, v);
  return Graph::from_edges(lg.graph.n(), std::move(edges));
}

// Greedy hitting set: repeatedly delete the vertex lying in the most
// unresolved violation sets, smallest label on ties.
void greedy_hit(const std::vector<std::vector<int>>& violations, int n,
                std::vector<char>& alive) {
  std::vector<std::vector<int>> member_of(n + 1);
  std::vector<int> count(n + 1, 0);
  std::vector<char> resolved(violations.size(), 0);
  for (size_t i = 0; i < violations.size(); ++i)
    for (int v : violations[i]) {
      member_of[v].push_back(int(i));
      ++count[v];
    }
  size_t remaining = violations.size();
  while (remaining > 0) {
    int pick = 0;
    for (int v = 1; v <= n; ++v)
      if (alive[v] && count[v] > (pick ? count[pick] : 0)) pick = v;
    if (!pick) break;  // all remaining violations already hit
    alive[pick] = 0;
    for (int idx : member_of[pick]) {
      if (resolved[idx]) continue;
      resolved[idx] = 1;
      --remaining;
      for (int u : violations[idx]) --count[u];
    }
  }
}

// Delete one vertex of the current shortest cycle: the one with the
// highest remaining degree, smallest label on ties.
int pick_from_cycle(const Graph& g, const std::vector<int>& cycle) {
  int pick = cycle[0];
  for (int v : cycle)
    if (g.degree(v) > g.degree(pick)) pick = v;
  return pick;
}

}  // namespace

std::pair<Graph, RepairReport> repair(const LayeredGraph& lg, int r,
                                      std::optional<int> target_n,
                                      long long cycle_cap) {
  lg.validate();
  int N = lg.graph.n();
  RepairReport rep;
  rep.event_A = event_A_check(lg);

  std::vector<char> alive(N + 1, 1);
  Graph cur = lg.graph;

  auto bad = list_bad_pairs(cur);
  auto cyc = count_short_cycles(cur, r, cycle_cap);
  rep.bad_pairs_found = (long long)bad.size();
  rep.short_cycles_found = cyc.count;
  rep.cycle_cap_exceeded = cyc.cap_exceeded;

  if (!cyc.cap_exceeded) {
    std::vector<std::vector<int>> violations;
    violations.reserve(bad.size() + cyc.witnesses.size());
    for (auto [x, y] : bad) violations.push_back({x, y});
    for (auto& c : cyc.witnesses) violations.push_back(c);
    greedy_hit(violations, N, alive);
  } else {
    // Too many short cycles to enumerate: peel shortest cycles one
    // deletion at a time, then clear the surviving bad pairs.
    while (true) {
      cur = alive_subgraph(lg, alive);
      Girth gi = girth(cur);
      if (gi.at_least(r)) break;
      alive[pick_from_cycle(cur, gi.witness)] = 0;
    }
    cur = alive_subgraph(lg, alive);
    auto residual_bad = list_bad_pairs(cur);
    std::vector<std::vector<int>> violations;
    for (auto [x, y] : residual_bad) violations.push_back({x, y});
    greedy_hit(violations, N, alive);
  }

  // Re-verify from scratch; deletions are monotone (they cannot create
  // cycles or bad pairs), so this loop terminates.
  while (true) {
    cur = alive_subgraph(lg, alive);
    Girth gi = girth(cur);
    if (!gi.at_least(r)) {
      alive[pick_from_cycle(cur, gi.witness)] = 0;
      continue;
    }
    auto residual_bad = list_bad_pairs(cur);
    if (!residual_bad.empty()) {
      std::vector<std::vector<int>> violations;
      for (auto [x, y] : residual_bad) violations.push_back({x, y});
      greedy_hit(violations, N, alive);
      continue;
    }
    break;
  }

  std::vector<int> survivors;
  for (int v = 1; v <= N; ++v)
    if (alive[v]) survivors.push_back(v);
  if (target_n) {
    if (int(survivors.size()) < *target_n)
      throw InsufficientSurvivors(int(survivors.size()), *target_n);
    survivors.resize(*target_n);  // drop the highest-labeled extras
  }
  for (int v = 1; v <= N; ++v)
    if (!std::binary_search(survivors.begin(), survivors.end(), v))
      rep.deleted.push_back(v);
  rep.survived_n = int(survivors.size());
  rep.old_label = survivors;
  return {lg.graph.induced(survivors), rep};
}

Poset build_poset(const Graph& gprime) {
  auto bad = list_bad_pairs(gprime);
  if (!bad.empty()) throw BadPairsPresent(bad[0].first, bad[0].second);
  std::vector<Bitset> above = monotone_reachability(gprime);
  std::vector<int> identity(gprime.n());
  for (int i = 0; i < gprime.n(); ++i) identity[i] = i + 1;
  return Poset::from_relation(gprime.n(), std::move(above), identity);
}

void VerificationReport::add(const std::string& name, bool pass,
                             const std::string& witness) {
  clauses.push_back({name, pass, pass ? "" : witness});
  if (!pass) all_pass = false;
}

const VerificationReport::Clause* VerificationReport::find(
    const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_construction(const Graph& gprime, int r,
                                       const ConstructionParams& params,
                                       Tri event_A, long long mis_budget) {
  VerificationReport rep;

  // (a) girth
  Girth gi = girth(gprime);
  {
    std::ostringstream w;
    if (gi.finite) {
      w << "cycle of length " << gi.value << ":";
      for (int v : gi.witness) w << " " << v;
    }
    rep.add("girth", gi.at_least(r), w.str());
  }

  // (b) zero bad pairs
  auto bad = list_bad_pairs(gprime);
  {
    std::ostringstream w;
    if (!bad.empty()) w << "{" << bad[0].first << "," << bad[0].second << "}";
    rep.add("bad_pairs", bad.empty(), w.str());
  }

  // (c) covers == edges, (d) uniquely generated
  if (bad.empty()) {
    Poset p = build_poset(gprime);
    auto covers = covers_from_order(p).edges;
    std::sort(covers.begin(), covers.end());
    auto edges = gprime.edges();
    bool same = covers == edges;
    std::ostringstream w;
    if (!same) {
      std::vector<std::pair<int, int>> diff;
      std::set_symmetric_difference(covers.begin(), covers.end(),
                                    edges.begin(), edges.end(),
                                    std::back_inserter(diff));
      if (!diff.empty())
        w << "pair {" << diff[0].first << "," << diff[0].second << "}";
    }
    rep.add("covers_equal_edges", same, w.str());

    CoverDag cd{gprime.n(), gprime.edges()};
    auto ug = is_uniquely_generated(cd);
    std::ostringstream wu;
    if (!ug.unique)
      wu << "two cover chains between " << ug.violation.first << " and "
         << ug.violation.second;
    rep.add("uniquely_generated", ug.unique, wu.str());
  } else {
    rep.add("covers_equal_edges", false, "skipped: bad pairs present");
    rep.add("uniquely_generated", false, "skipped: bad pairs present");
  }

  // (e) independence number and chromatic lower bound (report only)
  MisResult mis = max_independent_set(gprime, mis_budget);
  rep.alpha = mis.alpha;
  rep.alpha_exact = mis.exact;
  rep.chi_lower = mis.alpha > 0 ? (gprime.n() + mis.alpha - 1) / mis.alpha : 0;
  rep.add("alpha_reported", true);

  // (f) event A implies alpha <= 7m; any independent set of G' is one
  // of G, so the certified value is comparable even when inexact.
  if (event_A == Tri::True) {
    long long cap = 7 * params.layer_size;
    std::ostringstream w;
    if (mis.alpha > cap)
      w << "independent set of size " << mis.alpha << " > 7m = " << cap;
    rep.add("event_A_alpha_bound", mis.alpha <= cap, w.str());
  } else {
    rep.add("event_A_alpha_bound", true);
  }
  return rep;
}

Rational monotone_series_partial(int K) {
  Rational sum = 0;
  for (int l = 1; l <= K; ++l) sum += Rational(l, pow2(unsigned(l)));
  return sum;
}

ConstantChain constant_chain(int r) {
  if (r < 4 || r > 64) throw ConfigError("constant chain covers 4 <= r <= 64");
  ConstantChain c;
  c.r = r;
  // With n = 2^{10r}: N = 3n, k = log2(N)/(10r) = 1 + log2(3)/(10r),
  // m = N/k, so n/(7m) = n*k/(7*3n) = k/21 exactly.  log2(3) > 19/12
  // because 2^19 < 3^12, giving a rational lower bound on k.
  c.lhs_lower = (Rational(1) + Rational(19, 12 * 10 * r)) / 21;
  c.rhs = Rational(10 * r, 1000 * r);  // log2(n)/(1000 r) = 1/100
  c.holds = c.lhs_lower > c.rhs;

  int K = 64;
  c.series_sum = monotone_series_partial(K);
  // Closed form of the truncation: 2 - (K+2) 2^{-K}.
  Rational closed = Rational(2) - Rational(K + 2, pow2(unsigned(K)));
  c.series_ok = (c.series_sum == closed) && c.series_sum < 2;
  return c;
}

LayeredGraph parse_layered_graph(std::istream& in) {
  detail::LineReader rd(in);
  std::vector<std::string> tok;
  if (!rd.next(tok)) throw ParseError(rd.lineno(), "empty graph file");
  if (tok[0] != "graph" || tok.size() != 2) rd.fail("expected 'graph <n>'");
  long long n = rd.to_int(tok[1]);
  if (!rd.next(tok) || tok[0] != "layers" || tok.size() != 3)
    rd.fail("expected 'layers <k> <m>'");
  long long k = rd.to_int(tok[1]), m = rd.to_int(tok[2]);
  if (k < 1 || m < 1 || k * m != n) rd.fail("layers do not partition vertices");
  std::vector<std::pair<int, int>> edges;
  while (rd.next(tok)) {
    if (tok[0] != "e" || tok.size() != 3)
      rd.fail("unknown directive '" + tok[0] + "'");
    long long u = rd.to_int(tok[1]), v = rd.to_int(tok[2]);
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      rd.fail("bad edge " + tok[1] + " " + tok[2]);
    edges.emplace_back(int(u), int(v));
  }
  LayeredGraph lg;
  try {
    lg.graph = Graph::from_edges(int(n), std::move(edges));
    lg.layers = int(k);
    lg.layer_size = m;
    lg.validate();
  } catch (const ConfigError& e) {
    throw ParseError(0, e.what());
  }
  return lg;
}

LayeredGraph parse_layered_graph_file(const std::string& path) {
  auto f = detail::open_or_throw(path);
  try {
    return parse_layered_graph(f);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_layered_graph(std::ostream& out, const LayeredGraph& lg,
                         const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "graph " << lg.graph.n() << "\n";
  out << "layers " << lg.layers << " " << lg.layer_size << "\n";
  for (auto [u, v] : lg.graph.edges()) out << "e " << u << " " << v << "\n";
}

void write_repair_report(std::ostream& out, const RepairReport& rep,
                         const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "bad_pairs_found " << rep.bad_pairs_found << "\n";
  out << "short_cycles_found " << rep.short_cycles_found
      << (rep.cycle_cap_exceeded ? " cap_exceeded" : "") << "\n";
  out << "event_A " << to_string(rep.event_A) << "\n";
  out << "survived_n " << rep.survived_n << "\n";
  out << "deleted";
  for (int v : rep.deleted) out << " " << v;
  out << "\n";
  out << "old_label";
  for (int v : rep.old_label) out << " " << v;
  out << "\n";
}

void write_verification_report(std::ostream& out, const VerificationReport& rep,
                               const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  for (const auto& c : rep.clauses) {
    out << "clause " << c.name << " " << (c.pass ? "pass" : "fail");
    if (!c.witness.empty()) out << " " << c.witness;
    out << "\n";
  }
  out << "alpha " << rep.alpha << (rep.alpha_exact ? " exact" : " lower_bound")
      << "\n";
  out << "chi_lower_bound " << rep.chi_lower << "\n";
  out << "all_pass " << (rep.all_pass ? 1 : 0) << "\n";
}

}  // namespace girthforge
