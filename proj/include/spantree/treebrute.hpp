#pragma once

// Brute-force spanning tree enumeration: the independent oracle that every
// determinant-based enumerator is checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "spantree/graphs.hpp"
#include "spantree/polyring.hpp"

namespace spantree {

enum class TreeStatistic {
  EdgeProduct,      // prod e_{uv}
  Degree,           // x^deg(T)
  Direction,        // q^dir(T)
  DirDecoupled,     // q^dir(T) x^dd(T)
  CubeSubstituted,  // q^dir(T) x^ddq(T)
  InOutDegree,      // prod x_i^indeg y_i^outdeg, edges oriented from larger to smaller label
};

std::string_view to_string(TreeStatistic s);
std::optional<TreeStatistic> parse_tree_statistic(std::string_view name);
bool applicable(TreeStatistic s, const Graph& g);

// One copy of a (possibly multiple) edge of the parent graph.
struct TreeEdge {
  std::size_t edge = 0;
  unsigned copy = 0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct SpanningTree {
  std::vector<TreeEdge> edges;
};

inline constexpr std::uint64_t kDefaultTreeCap = 10'000'000;

// Number of spanning trees from an integer Bareiss determinant of the
// unweighted reduced Laplacian.
Integer predicted_tree_count(const Graph& g);

// Visits every spanning tree exactly once. Throws Disconnected, or
// CapExceeded when the predicted count exceeds cap.
void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                            std::uint64_t cap = kDefaultTreeCap);

std::vector<SpanningTree> all_spanning_trees(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

Monomial statistic_monomial(const Graph& g, const SpanningTree& t, TreeStatistic s);

Polynomial enumerate_sum(const Graph& g, TreeStatistic s, std::uint64_t cap = kDefaultTreeCap);

}  // namespace spantree
