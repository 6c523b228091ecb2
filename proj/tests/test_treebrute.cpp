#include <gtest/gtest.h>

#include <set>

#include "spantree/errors.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/treebrute.hpp"

using namespace spantree;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

SpanningTree tree_of(const Graph& g, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  SpanningTree t;
  for (auto [a, b] : pairs) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) t.edges.push_back({i, 0});
    }
  }
  return t;
}

// Independent check of a candidate tree: n-1 edges, no cycle (union-find).
bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
  const std::size_t n = g.n_vertices();
  if (t.edges.size() + 1 != n) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const TreeEdge& te : t.edges) {
    const Edge& e = g.edges()[te.edge];
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Oracle for small graphs: try every (n-1)-subset of expanded edges.
std::size_t subset_count(const Graph& g) {
  std::vector<TreeEdge> expanded;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    for (unsigned c = 0; c < g.edges()[i].multiplicity; ++c) expanded.push_back({i, c});
  }
  const std::size_t m = expanded.size();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) + 1 != g.n_vertices()) continue;
    SpanningTree t;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1UL << i)) t.edges.push_back(expanded[i]);
    }
    count += is_spanning_tree(g, t) ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(all_spanning_trees(complete_graph(3)).size(), 3u);
  EXPECT_EQ(all_spanning_trees(complete_graph(4)).size(), 16u);
  EXPECT_EQ(all_spanning_trees(hypercube(3)).size(), 384u);
  EXPECT_EQ(all_spanning_trees(multigraph_kn(2, 5)).size(), 5u);
  EXPECT_EQ(all_spanning_trees(complete_graph(1)).size(), 1u);
}

TEST(Enumerate, MatchesSubsetOracle) {
  const std::vector<Graph> graphs{complete_graph(4), multigraph_kn(3, 3), hypercube(2),
                                  cartesian_product({complete_graph(2), complete_graph(3)}),
                                  threshold_graph(Partition({4, 3, 2, 2, 1}))};
  for (const Graph& g : graphs) {
    const auto trees = all_spanning_trees(g);
    EXPECT_EQ(trees.size(), subset_count(g)) << g.describe();
    EXPECT_EQ(Integer(trees.size()), predicted_tree_count(g)) << g.describe();
    std::set<std::vector<std::pair<std::size_t, unsigned>>> distinct;
    for (const SpanningTree& t : trees) {
      ASSERT_TRUE(is_spanning_tree(g, t));
      std::vector<std::pair<std::size_t, unsigned>> key;
      for (const TreeEdge& te : t.edges) key.push_back({te.edge, te.copy});
      std::sort(key.begin(), key.end());
      distinct.insert(key);
    }
    EXPECT_EQ(distinct.size(), trees.size()) << g.describe();
  }
}

TEST(Enumerate, CapAndConnectivity) {
  EXPECT_THROW(all_spanning_trees(complete_graph(5), 100), CapExceeded);
  EXPECT_NO_THROW(all_spanning_trees(complete_graph(5), 125));
  EXPECT_THROW(all_spanning_trees(threshold_graph(Partition({1, 1, 0}))), Disconnected);
  EXPECT_EQ(predicted_tree_count(threshold_graph(Partition({1, 1, 0}))), 0);
}

TEST(Statistic, PathDegree) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(statistic_monomial(k3, tree_of(k3, {{0, 1}, {1, 2}}), TreeStatistic::Degree).to_string(), "x1*x2^2*x3");
}

TEST(Statistic, InOutDegree) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(statistic_monomial(k3, tree_of(k3, {{0, 1}, {0, 2}}), TreeStatistic::InOutDegree).to_string(),
            "x1^2*y2*y3");
}

TEST(Statistic, CubeSubstitutedOmittingOneEdge) {
  const Graph q2 = hypercube(2);
  // Vertices: 0 = {}, 1 = {1}, 2 = {2}, 3 = {1,2}. Omit {} ~ {1}.
  const SpanningTree t = tree_of(q2, {{0, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(Polynomial(statistic_monomial(q2, t, TreeStatistic::CubeSubstituted)), P("q1*q2^2*x2"));
}

TEST(Statistic, DecoupledDegreeMonomial) {
  const Graph g = cartesian_product({complete_graph(2), complete_graph(2)});
  // Path (1,1)-(1,2)-(2,2)-(2,1): interior vertices have degree 2.
  const SpanningTree t = tree_of(g, {{0, 1}, {1, 3}, {3, 2}});
  EXPECT_EQ(Polynomial(statistic_monomial(g, t, TreeStatistic::DirDecoupled)),
            P("q1*q2^2*x(1,1)^3*x(1,2)^3*x(2,1)^2*x(2,2)^4"));
}

TEST(Statistic, NotApplicable) {
  EXPECT_THROW(enumerate_sum(complete_graph(3), TreeStatistic::CubeSubstituted), SchemeMismatch);
  EXPECT_THROW(enumerate_sum(hypercube(2), TreeStatistic::InOutDegree), SchemeMismatch);
  EXPECT_EQ(parse_tree_statistic("inout"), TreeStatistic::InOutDegree);
}

TEST(EnumerateSum, Examples) {
  EXPECT_EQ(enumerate_sum(complete_graph(3), TreeStatistic::Degree), P("x1*x2*x3*x1 + x1*x2*x3*x2 + x1*x2*x3*x3"));
  const Graph square = cartesian_product({complete_graph(2), complete_graph(2)});
  EXPECT_EQ(enumerate_sum(square, TreeStatistic::Direction), P("2*q1^2*q2 + 2*q1*q2^2"));
  EXPECT_EQ(enumerate_sum(threshold_graph(Partition({2, 2, 2})), TreeStatistic::InOutDegree),
            P("x1^2*y2*y3 + x1*x2*y2*y3 + x1*x2*y3^2"));
}

TEST(EnumerateSum, EdgeProductMatchesGenericDeterminant) {
  for (const Graph& g : {complete_graph(4), multigraph_kn(3, 2), hypercube(2)}) {
    EXPECT_EQ(enumerate_sum(g, TreeStatistic::EdgeProduct), tree_enumerator_det(g, WeightScheme::Generic))
        << g.describe();
  }
}
