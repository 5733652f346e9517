#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <variant>

#include "dmagic/errors.hpp"
#include "dmagic/search.hpp"

using namespace dmagic;

namespace {

// Every bijection and every orientation, no pruning.
bool brute_force_magic(const UndirectedGraph& g) {
  const int N = g.vertex_count();
  const auto E = g.edge_count();
  std::vector<int> labels(N);
  std::iota(labels.begin(), labels.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << E); ++mask) {
      std::vector<int> w(N, 0);
      for (std::size_t e = 0; e < E; ++e) {
        int t = g.edge(e).u, h = g.edge(e).v;
        if ((mask >> e) & 1) std::swap(t, h);
        w[h] += labels[t];
        w[t] -= labels[h];
      }
      bool ok = true;
      for (int v = 1; v < N && ok; ++v) ok = ((w[v] - w[0]) % N + N) % N == 0;
      if (ok) return true;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return false;
}

UndirectedGraph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.push_back({u, v});
  return UndirectedGraph(n, edges);
}

void expect_valid_witness(const SearchOutcome& out, const UndirectedGraph& g) {
  ASSERT_EQ(out.verdict, Verdict::kWitness);
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_EQ(out.witness->graph, g);
  EXPECT_TRUE(std::holds_alternative<MagicCertificate>(verify(g, out.witness->orientation, out.witness->labeling)));
}

}  // namespace

TEST(SearchTest, SmallCompleteGraphs) {
  EXPECT_EQ(decide_existence(complete(4)).verdict, Verdict::kExhaustedNoSolution);
  expect_valid_witness(decide_existence(complete(5)), complete(5));
  expect_valid_witness(decide_existence(complete(1)), complete(1));
  EXPECT_EQ(decide_existence(complete(2)).verdict, Verdict::kExhaustedNoSolution);
}

TEST(SearchTest, MultipartiteWitness) {
  const std::vector<int> sizes{1, 2, 2};
  const auto g = complete_multipartite(sizes);
  expect_valid_witness(decide_existence(g), g);
}

TEST(SearchTest, CubePrismExhausted) {
  EXPECT_EQ(decide_existence(prism(4)).verdict, Verdict::kExhaustedNoSolution);
}

TEST(SearchTest, ParityPruningSavesNodes) {
  SearchConfig off;
  off.parity_pruning = false;
  const auto with = decide_existence(prism(4));
  const auto without = decide_existence(prism(4), off);
  EXPECT_EQ(with.verdict, without.verdict);
  EXPECT_LE(with.stats.nodes, without.stats.nodes);
  EXPECT_EQ(without.stats.parity_prunes, 0u);
}

TEST(SearchTest, BudgetExhaustionIsInconclusive) {
  SearchConfig tiny;
  tiny.node_budget = 1;
  tiny.parity_pruning = false;
  const auto out = decide_existence(complete(6), tiny);
  EXPECT_EQ(out.verdict, Verdict::kInconclusive);
  EXPECT_FALSE(out.witness.has_value());
}

TEST(SearchTest, InvalidConfigurations) {
  SearchConfig bad;
  bad.threads = 0;
  EXPECT_THROW(decide_existence(cycle(3), bad), UsageError);
  EXPECT_THROW(decide_existence(empty_graph(0)), UsageError);
  EXPECT_THROW(decide_existence(empty_graph(65)), UsageError);
  SearchConfig zero;
  zero.node_budget = 0;
  EXPECT_THROW(decide_existence(cycle(3), zero), UsageError);
}

TEST(SearchTest, DeterministicSingleThreaded) {
  const std::vector<int> sizes{1, 2, 4};
  const auto g = complete_multipartite(sizes);
  SearchConfig config;
  config.seed = 42;
  const auto a = decide_existence(g, config);
  const auto b = decide_existence(g, config);
  expect_valid_witness(a, g);
  EXPECT_EQ(a.witness->labeling, b.witness->labeling);
  EXPECT_EQ(a.witness->orientation, b.witness->orientation);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(SearchTest, ThreadedVerdictsMatch) {
  SearchConfig threaded;
  threaded.threads = 4;
  for (const auto& g : {complete(4), complete(5), prism(4), cycle(6), complete(6)}) {
    const auto one = decide_existence(g);
    const auto many = decide_existence(g, threaded);
    EXPECT_EQ(one.verdict, many.verdict);
    if (many.verdict == Verdict::kWitness) expect_valid_witness(many, g);
  }
}

TEST(SearchProperty, AgreesWithBruteForceUpToOrderFive) {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      const auto g = graph_from_mask(n, mask);
      const auto out = decide_existence(g);
      ASSERT_NE(out.verdict, Verdict::kInconclusive);
      EXPECT_EQ(out.verdict == Verdict::kWitness, brute_force_magic(g)) << n << " mask " << mask;
      if (out.verdict == Verdict::kWitness) expect_valid_witness(out, g);
    }
  }
}

TEST(SearchProperty, ReductionsPreserveVerdicts) {
  std::mt19937_64 rng(9);
  std::vector<UndirectedGraph> graphs;
  for (std::uint32_t mask = 0; mask < 1024; ++mask) graphs.push_back(graph_from_mask(5, mask));
  for (int i = 0; i < 200; ++i) graphs.push_back(graph_from_mask(6, static_cast<std::uint32_t>(rng() & 0x7fff)));
  SearchConfig scaled;
  scaled.unit_scaling = true;
  SearchConfig plain;
  plain.parity_pruning = false;
  for (const auto& g : graphs) {
    const auto reduced = decide_existence(g).verdict;
    EXPECT_EQ(reduced, decide_existence(g, SearchConfig{}.unreduced()).verdict);
    EXPECT_EQ(reduced, decide_existence(g, scaled).verdict);
    EXPECT_EQ(reduced, decide_existence(g, plain.unreduced()).verdict);
  }
}

TEST(SearchProperty, SeedsOnlyChangeTheWitness) {
  const auto g = prism(5);  // magic or not, the verdict must not depend on the seed
  const auto base = decide_existence(g).verdict;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SearchConfig c;
    c.seed = seed;
    EXPECT_EQ(decide_existence(g, c).verdict, base);
  }
}

TEST(SearchTest, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::kWitness), "witness");
  EXPECT_EQ(to_string(Verdict::kExhaustedNoSolution), "exhausted-no-solution");
  EXPECT_EQ(to_string(Verdict::kInconclusive), "inconclusive");
}
