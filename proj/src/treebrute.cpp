#include "spantree/treebrute.hpp"

#include <numeric>
#include <unordered_map>

#include "spantree/errors.hpp"

namespace spantree {

std::string_view to_string(TreeStatistic s) {
  switch (s) {
    case TreeStatistic::EdgeProduct:
      return "edges";
    case TreeStatistic::Degree:
      return "degree";
    case TreeStatistic::Direction:
      return "direction";
    case TreeStatistic::DirDecoupled:
      return "decoupled";
    case TreeStatistic::CubeSubstituted:
      return "cube";
    case TreeStatistic::InOutDegree:
      return "inout";
  }
  return "?";
}

std::optional<TreeStatistic> parse_tree_statistic(std::string_view name) {
  for (auto s : {TreeStatistic::EdgeProduct, TreeStatistic::Degree, TreeStatistic::Direction,
                 TreeStatistic::DirDecoupled, TreeStatistic::CubeSubstituted, TreeStatistic::InOutDegree}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool applicable(TreeStatistic s, const Graph& g) {
  switch (s) {
    case TreeStatistic::EdgeProduct:
    case TreeStatistic::Degree:
      return true;
    case TreeStatistic::Direction:
    case TreeStatistic::DirDecoupled:
      return g.is_product_like();
    case TreeStatistic::CubeSubstituted:
      return g.family() == GraphFamily::Hypercube;
    case TreeStatistic::InOutDegree:
      return g.is_plain();
  }
  return false;
}

Integer predicted_tree_count(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n <= 1) return 1;
  const std::size_t m = n - 1;
  std::vector<Integer> a(m * m, 0);
  for (const Edge& e : g.edges()) {
    if (e.u < m) a[e.u * m + e.u] += e.multiplicity;
    if (e.v < m) a[e.v * m + e.v] += e.multiplicity;
    if (e.u < m && e.v < m) {
      a[e.u * m + e.v] -= e.multiplicity;
      a[e.v * m + e.u] -= e.multiplicity;
    }
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t s = k + 1;
      while (s < m && a[s * m + k] == 0) ++s;
      if (s == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[s * m + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        Integer num = a[k * m + k] * a[i * m + j] - a[i * m + k] * a[k * m + j];
        mpz_divexact(a[i * m + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * m + k];
  }
  return sign * a[m * m - 1];
}

namespace {

// Deletion/contraction over the expanded edge list. Components are tracked
// by vertex labels; an edge is contracted (included) or deleted (excluded),
// and deletion is skipped when the edge is a bridge of what remains.
class TreeWalker {
 public:
  TreeWalker(const Graph& g, const std::function<void(const SpanningTree&)>& visit) : visit_(visit) {
    n_ = g.n_vertices();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      for (unsigned c = 0; c < e.multiplicity; ++c) expanded_.push_back({i, c, e.u, e.v});
    }
  }

  void run() {
    std::vector<std::size_t> label(n_);
    std::iota(label.begin(), label.end(), 0);
    walk(0, label, n_);
  }

 private:
  struct Expanded {
    std::size_t edge;
    unsigned copy;
    std::size_t u;
    std::size_t v;
  };

  void walk(std::size_t k, const std::vector<std::size_t>& label, std::size_t components) {
    if (components == 1) {
      visit_(current_);
      return;
    }
    while (k < expanded_.size() && label[expanded_[k].u] == label[expanded_[k].v]) ++k;
    if (k == expanded_.size()) return;

    const std::size_t a = label[expanded_[k].u];
    const std::size_t b = label[expanded_[k].v];
    std::vector<std::size_t> merged = label;
    for (std::size_t& l : merged) {
      if (l == b) l = a;
    }
    current_.edges.push_back({expanded_[k].edge, expanded_[k].copy});
    walk(k + 1, merged, components - 1);
    current_.edges.pop_back();

    if (still_connected(k + 1, label)) walk(k + 1, label, components);
  }

  bool still_connected(std::size_t from, const std::vector<std::size_t>& label) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t classes = 0;
    for (std::size_t v = 0; v < n_; ++v) classes += label[v] == v ? 1 : 0;
    for (std::size_t i = from; i < expanded_.size() && classes > 1; ++i) {
      std::size_t x = find(label[expanded_[i].u]);
      std::size_t y = find(label[expanded_[i].v]);
      if (x != y) {
        parent[x] = y;
        --classes;
      }
    }
    return classes == 1;
  }

  const std::function<void(const SpanningTree&)>& visit_;
  std::size_t n_ = 0;
  std::vector<Expanded> expanded_;
  SpanningTree current_;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit,
                            std::uint64_t cap) {
  if (!g.is_connected()) throw Disconnected("graph is disconnected: " + g.describe());
  const Integer predicted = predicted_tree_count(g);
  if (predicted > Integer(std::to_string(cap))) {
    throw CapExceeded("graph has " + predicted.get_str() + " spanning trees, cap is " + std::to_string(cap));
  }
  TreeWalker(g, visit).run();
}

std::vector<SpanningTree> all_spanning_trees(const Graph& g, std::uint64_t cap) {
  std::vector<SpanningTree> trees;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { trees.push_back(t); }, cap);
  return trees;
}

Monomial statistic_monomial(const Graph& g, const SpanningTree& t, TreeStatistic s) {
  if (!applicable(s, g)) {
    throw SchemeMismatch(std::string("statistic '") + std::string(to_string(s)) + "' does not apply to " +
                         g.describe());
  }
  std::vector<Monomial::Factor> f;
  auto add_direction = [&](const Edge& e) { f.push_back({Variable::q(e.direction), 1}); };
  for (const TreeEdge& te : t.edges) {
    const Edge& e = g.edges()[te.edge];
    const auto u = static_cast<unsigned>(e.u + 1);
    const auto v = static_cast<unsigned>(e.v + 1);
    switch (s) {
      case TreeStatistic::EdgeProduct:
        f.push_back({Variable::e(u, v), 1});
        break;
      case TreeStatistic::Degree:
        f.push_back({Variable::x(u), 1});
        f.push_back({Variable::x(v), 1});
        break;
      case TreeStatistic::Direction:
        add_direction(e);
        break;
      case TreeStatistic::DirDecoupled:
        // Each endpoint contributes its coordinate variables once per incident tree edge.
        add_direction(e);
        for (unsigned d = 1; d <= g.n_directions(); ++d) {
          f.push_back({Variable::xd(d, g.coordinate(e.u, d)), 1});
          f.push_back({Variable::xd(d, g.coordinate(e.v, d)), 1});
        }
        break;
      case TreeStatistic::CubeSubstituted:
        add_direction(e);
        for (unsigned d = 1; d <= g.n_directions(); ++d) {
          int in_u = g.coordinate(e.u, d) == 2 ? 1 : 0;
          int in_v = g.coordinate(e.v, d) == 2 ? 1 : 0;
          f.push_back({Variable::x(d), in_u + in_v - 1});
        }
        break;
      case TreeStatistic::InOutDegree:
        f.push_back({Variable::x(std::min(u, v)), 1});
        f.push_back({Variable::y(std::max(u, v)), 1});
        break;
    }
  }
  return Monomial::from_factors(std::move(f));
}

Polynomial enumerate_sum(const Graph& g, TreeStatistic s, std::uint64_t cap) {
  if (!applicable(s, g)) {
    throw SchemeMismatch(std::string("statistic '") + std::string(to_string(s)) + "' does not apply to " +
                         g.describe());
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { acc[statistic_monomial(g, t, s)] += 1; }, cap);
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace spantree
