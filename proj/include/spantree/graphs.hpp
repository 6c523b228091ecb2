#pragma once

// Graph families: complete graphs, multigraph thickenings K_n^(q), Cartesian
// products, hypercubes and threshold graphs. Every edge carries a direction
// (the product coordinate it changes, 1 for plain graphs) and a multiplicity.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace spantree {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are kept
// so that degree sequences with isolated vertices keep their length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  // 1-based access; 0 beyond the end.
  unsigned part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }
  unsigned long sum() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

// lambda'_k = #{i : lambda_i >= k}, k = 1..lambda_1.
Partition conjugate(const Partition& lambda);

// Largest s with lambda_s >= s.
unsigned durfee(const Partition& lambda);

enum class GraphFamily { Complete, Multigraph, Product, Hypercube, Threshold };

struct Edge {
  std::size_t u = 0;  // 0-based vertex indices
  std::size_t v = 0;
  unsigned direction = 1;
  unsigned multiplicity = 1;
};

class Graph {
 public:
  Graph(GraphFamily family, std::vector<std::vector<unsigned>> labels, std::vector<std::vector<unsigned>> coords,
        std::vector<unsigned> dims, std::vector<Edge> edges);

  GraphFamily family() const { return family_; }
  std::size_t n_vertices() const { return labels_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Integers 1..n for plain graphs, coordinate tuples for products, subset
  // elements for hypercubes (vertex index is the subset bitmask).
  const std::vector<unsigned>& label(std::size_t v) const { return labels_[v]; }
  // 1-based coordinate of vertex v in factor t (1-based). For hypercubes,
  // coordinate 2 means "t is in the subset".
  unsigned coordinate(std::size_t v, unsigned t) const { return coords_[v][t - 1]; }
  // Factor sizes n_1..n_r; {n} for plain graphs.
  const std::vector<unsigned>& dims() const { return dims_; }
  unsigned n_directions() const { return static_cast<unsigned>(dims_.size()); }

  // Degree sequence for threshold graphs.
  const std::optional<Partition>& degree_sequence() const { return degree_sequence_; }

  bool is_product_like() const { return family_ != GraphFamily::Threshold; }
  bool is_plain() const { return family_ != GraphFamily::Product && family_ != GraphFamily::Hypercube; }

  unsigned long edge_count() const;  // with multiplicity
  std::vector<unsigned long> degrees() const;
  bool is_connected() const;

  std::string describe() const;

 private:
  friend Graph threshold_graph(const Partition& lambda);

  GraphFamily family_;
  std::vector<std::vector<unsigned>> labels_;
  std::vector<std::vector<unsigned>> coords_;
  std::vector<unsigned> dims_;
  std::vector<Edge> edges_;
  std::optional<Partition> degree_sequence_;
};

Graph complete_graph(unsigned n);
Graph multigraph_kn(unsigned n, unsigned q);
// Vertices in row-major order over coordinate tuples, last coordinate fastest.
// Factor edges in factor position t get direction t.
Graph cartesian_product(const std::vector<Graph>& factors);
Graph hypercube(unsigned n);

// Builds by the rule "neighbors of i are the lambda_i smallest members of
// [n] \ {i}" and rejects the input unless the realized degrees equal lambda.
// Disconnected inputs (trailing zero part) are accepted; check is_connected().
Graph threshold_graph(const Partition& lambda);

bool is_threshold_sequence(const Partition& lambda);

// Degree sequences of all threshold graphs on n vertices, generated from
// creation sequences (repeatedly add an isolated or a dominating vertex),
// deduplicated and sorted.
std::vector<Partition> threshold_sequences(unsigned n, bool connected_only);

// The valid connected threshold sequence on the same number of vertices that
// is closest to lambda in L1 distance; ties go to the smallest change in edge
// count, then to the lexicographically largest sequence.
Partition nearest_threshold_sequence(const Partition& lambda);

}  // namespace spantree
