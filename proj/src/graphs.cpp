#include "spantree/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "spantree/errors.hpp"

namespace spantree {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw InvalidSize("partition must be weakly decreasing: " + to_string());
  }
}

unsigned long Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0UL); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<unsigned> out;
  for (unsigned k = 1; k <= lambda.part(1); ++k) {
    unsigned count = 0;
    for (unsigned p : lambda.parts()) count += p >= k ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

unsigned durfee(const Partition& lambda) {
  unsigned s = 0;
  while (lambda.part(s + 1) >= s + 1) ++s;
  return s;
}

Graph::Graph(GraphFamily family, std::vector<std::vector<unsigned>> labels, std::vector<std::vector<unsigned>> coords,
             std::vector<unsigned> dims, std::vector<Edge> edges)
    : family_(family),
      labels_(std::move(labels)),
      coords_(std::move(coords)),
      dims_(std::move(dims)),
      edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidSize("self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u >= labels_.size() || e.v >= labels_.size()) throw IndexOutOfRange("edge endpoint out of range");
  }
}

unsigned long Graph::edge_count() const {
  unsigned long total = 0;
  for (const Edge& e : edges_) total += e.multiplicity;
  return total;
}

std::vector<unsigned long> Graph::degrees() const {
  std::vector<unsigned long> deg(n_vertices(), 0);
  for (const Edge& e : edges_) {
    deg[e.u] += e.multiplicity;
    deg[e.v] += e.multiplicity;
  }
  return deg;
}

bool Graph::is_connected() const {
  const std::size_t n = n_vertices();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges_) {
    std::size_t a = find(e.u);
    std::size_t b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string Graph::describe() const {
  std::ostringstream out;
  switch (family_) {
    case GraphFamily::Complete:
      out << "K" << n_vertices();
      break;
    case GraphFamily::Multigraph:
      out << "K" << n_vertices() << "(" << (edges_.empty() ? 1 : edges_.front().multiplicity) << ")";
      break;
    case GraphFamily::Product:
      out << "product of " << dims_.size() << " factors";
      break;
    case GraphFamily::Hypercube:
      out << "Q" << dims_.size();
      break;
    case GraphFamily::Threshold:
      out << "threshold " << (degree_sequence_ ? degree_sequence_->to_string() : "?");
      break;
  }
  out << ": " << n_vertices() << " vertices, " << edge_count() << " edges";
  return out.str();
}

namespace {

Graph plain_complete(unsigned n, unsigned q, GraphFamily family) {
  if (n == 0) throw InvalidSize("complete graph needs n >= 1");
  if (q == 0) throw InvalidSize("edge multiplicity must be >= 1");
  std::vector<std::vector<unsigned>> labels;
  std::vector<std::vector<unsigned>> coords;
  for (unsigned i = 1; i <= n; ++i) {
    labels.push_back({i});
    coords.push_back({i});
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1, q});
  }
  return Graph(family, std::move(labels), std::move(coords), {n}, std::move(edges));
}

}  // namespace

Graph complete_graph(unsigned n) { return plain_complete(n, 1, GraphFamily::Complete); }

Graph multigraph_kn(unsigned n, unsigned q) {
  if (q == 1) return complete_graph(n);
  return plain_complete(n, q, GraphFamily::Multigraph);
}

Graph cartesian_product(const std::vector<Graph>& factors) {
  if (factors.empty()) throw EmptyFactor("cartesian product needs at least one factor");
  std::vector<unsigned> dims;
  for (const Graph& g : factors) {
    if (g.n_vertices() == 0) throw EmptyFactor("cartesian product factor has no vertices");
    dims.push_back(static_cast<unsigned>(g.n_vertices()));
  }
  const std::size_t r = dims.size();
  // Row-major strides, last coordinate fastest.
  std::vector<std::size_t> stride(r, 1);
  for (std::size_t t = r - 1; t > 0; --t) stride[t - 1] = stride[t] * dims[t];
  const std::size_t n = stride[0] * dims[0];

  std::vector<std::vector<unsigned>> coords(n, std::vector<unsigned>(r));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < r; ++t) coords[v][t] = static_cast<unsigned>((v / stride[t]) % dims[t]) + 1;
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < r; ++t) {
      const std::size_t here = coords[v][t] - 1;
      for (const Edge& fe : factors[t].edges()) {
        if (fe.u != here) continue;
        std::size_t w = v - here * stride[t] + fe.v * stride[t];
        edges.push_back({v, w, static_cast<unsigned>(t + 1), fe.multiplicity});
      }
    }
  }
  auto labels = coords;
  return Graph(GraphFamily::Product, std::move(labels), std::move(coords), std::move(dims), std::move(edges));
}

Graph hypercube(unsigned n) {
  if (n == 0) throw InvalidSize("hypercube needs n >= 1");
  if (n > 20) throw InvalidSize("hypercube dimension too large");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<unsigned>> labels(count);
  std::vector<std::vector<unsigned>> coords(count, std::vector<unsigned>(n));
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < count; ++s) {
    for (unsigned i = 1; i <= n; ++i) {
      const std::size_t bit = std::size_t{1} << (i - 1);
      if (s & bit) {
        labels[s].push_back(i);
        coords[s][i - 1] = 2;
      } else {
        coords[s][i - 1] = 1;
        edges.push_back({s, s | bit, i, 1});
      }
    }
  }
  return Graph(GraphFamily::Hypercube, std::move(labels), std::move(coords), std::vector<unsigned>(n, 2),
               std::move(edges));
}

namespace {

// Edge set produced by the threshold rule, as a symmetric adjacency matrix.
std::vector<std::vector<bool>> threshold_rule(const Partition& lambda) {
  const std::size_t n = lambda.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    unsigned want = lambda.parts()[i];
    for (std::size_t j = 0; j < n && want > 0; ++j) {
      if (j == i) continue;
      adj[i][j] = adj[j][i] = true;
      --want;
    }
  }
  return adj;
}

bool realizes(const Partition& lambda, const std::vector<std::vector<bool>>& adj) {
  for (std::size_t i = 0; i < adj.size(); ++i) {
    auto deg = static_cast<unsigned>(std::count(adj[i].begin(), adj[i].end(), true));
    if (deg != lambda.parts()[i]) return false;
  }
  return true;
}

}  // namespace

bool is_threshold_sequence(const Partition& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) return false;
  if (lambda.part(1) > n - 1) return false;
  return realizes(lambda, threshold_rule(lambda));
}

Graph threshold_graph(const Partition& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) throw InvalidSize("threshold graph needs at least one vertex");
  if (lambda.part(1) > n - 1) {
    throw NotThresholdSequence("degree " + std::to_string(lambda.part(1)) + " exceeds n-1 in " + lambda.to_string());
  }
  auto adj = threshold_rule(lambda);
  if (!realizes(lambda, adj)) {
    throw NotThresholdSequence(lambda.to_string() + " is not the degree sequence of a threshold graph");
  }
  std::vector<std::vector<unsigned>> labels;
  std::vector<std::vector<unsigned>> coords;
  for (unsigned i = 1; i <= n; ++i) {
    labels.push_back({i});
    coords.push_back({i});
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj[i][j]) edges.push_back({i, j, 1, 1});
    }
  }
  Graph g(GraphFamily::Threshold, std::move(labels), std::move(coords), {static_cast<unsigned>(n)},
          std::move(edges));
  g.degree_sequence_ = lambda;
  return g;
}

std::vector<Partition> threshold_sequences(unsigned n, bool connected_only) {
  if (n == 0) return {};
  std::set<Partition> seen;
  // Bit k of the code says whether vertex k+2 joins as dominating (1) or isolated (0).
  const unsigned steps = n - 1;
  for (unsigned long code = 0; code < (1UL << steps); ++code) {
    if (connected_only && steps > 0 && !((code >> (steps - 1)) & 1UL)) continue;
    std::vector<unsigned> deg(n, 0);
    for (unsigned k = 0; k < steps; ++k) {
      if ((code >> k) & 1UL) {
        const unsigned added = k + 1;  // 0-based index of the new vertex
        for (unsigned j = 0; j < added; ++j) ++deg[j];
        deg[added] = added;
      }
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    seen.insert(Partition(std::move(deg)));
  }
  return {seen.begin(), seen.end()};
}

Partition nearest_threshold_sequence(const Partition& lambda) {
  if (lambda.size() < 2) throw InvalidSize("need at least two vertices");
  if (is_threshold_sequence(lambda) && lambda.parts().back() > 0) return lambda;
  const auto candidates = threshold_sequences(static_cast<unsigned>(lambda.size()), true);
  const auto target_sum = static_cast<long>(lambda.sum());
  auto key = [&](const Partition& p) {
    long l1 = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      l1 += std::labs(static_cast<long>(p.parts()[i]) - static_cast<long>(lambda.parts()[i]));
    }
    return std::make_tuple(l1, std::labs(static_cast<long>(p.sum()) - target_sum));
  };
  const Partition* best = &candidates.front();
  for (const Partition& p : candidates) {
    auto kp = key(p);
    auto kb = key(*best);
    if (kp < kb || (kp == kb && p > *best)) best = &p;
  }
  return *best;
}

}  // namespace spantree
