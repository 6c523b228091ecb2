#include "spantree/laplacian.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "spantree/errors.hpp"

namespace spantree {

std::string_view to_string(WeightScheme w) {
  switch (w) {
    case WeightScheme::Generic:
      return "generic";
    case WeightScheme::CayleyPrufer:
      return "cayley-prufer";
    case WeightScheme::Direction:
      return "direction";
    case WeightScheme::Decoupled:
      return "decoupled";
    case WeightScheme::CubeLaurent:
      return "cube";
    case WeightScheme::ThresholdInOut:
      return "inout";
  }
  return "?";
}

std::optional<WeightScheme> parse_weight_scheme(std::string_view name) {
  for (auto w : {WeightScheme::Generic, WeightScheme::CayleyPrufer, WeightScheme::Direction, WeightScheme::Decoupled,
                 WeightScheme::CubeLaurent, WeightScheme::ThresholdInOut}) {
    if (to_string(w) == name) return w;
  }
  return std::nullopt;
}

bool applicable(WeightScheme w, const Graph& g) {
  switch (w) {
    case WeightScheme::Generic:
    case WeightScheme::CayleyPrufer:
      return true;
    case WeightScheme::Direction:
    case WeightScheme::Decoupled:
      return g.is_product_like();
    case WeightScheme::CubeLaurent:
      return g.family() == GraphFamily::Hypercube;
    case WeightScheme::ThresholdInOut:
      return g.is_plain();
  }
  return false;
}

Polynomial edge_weight(const Graph& g, const Edge& e, WeightScheme w) {
  const auto u = static_cast<unsigned>(e.u + 1);
  const auto v = static_cast<unsigned>(e.v + 1);
  switch (w) {
    case WeightScheme::Generic:
      return Variable::e(u, v);
    case WeightScheme::CayleyPrufer:
      return Polynomial(Monomial::from_factors({{Variable::x(u), 1}, {Variable::x(v), 1}}));
    case WeightScheme::Direction:
      return Variable::q(e.direction);
    case WeightScheme::Decoupled: {
      std::vector<Monomial::Factor> f{{Variable::q(e.direction), 1}};
      for (unsigned t = 1; t <= g.n_directions(); ++t) {
        f.push_back({Variable::xd(t, g.coordinate(e.u, t)), 1});
        f.push_back({Variable::xd(t, g.coordinate(e.v, t)), 1});
      }
      return Polynomial(Monomial::from_factors(std::move(f)));
    }
    case WeightScheme::CubeLaurent: {
      // x_S x_R / x_[n]: exponent of x_t is [t in S] + [t in R] - 1.
      std::vector<Monomial::Factor> f{{Variable::q(e.direction), 1}};
      for (unsigned t = 1; t <= g.n_directions(); ++t) {
        int in_u = g.coordinate(e.u, t) == 2 ? 1 : 0;
        int in_v = g.coordinate(e.v, t) == 2 ? 1 : 0;
        f.push_back({Variable::x(t), in_u + in_v - 1});
      }
      return Polynomial(Monomial::from_factors(std::move(f)));
    }
    case WeightScheme::ThresholdInOut:
      return Polynomial(
          Monomial::from_factors({{Variable::x(std::min(u, v)), 1}, {Variable::y(std::max(u, v)), 1}}));
  }
  throw SchemeMismatch("unknown weight scheme");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!(at(i, j) == at(j, i))) return false;
    }
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j > 0) out << " | ";
      out << at(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Polynomial> operator*(const PolyMatrix& m, std::span<const Polynomial> v) {
  if (v.size() != m.size()) throw IndexOutOfRange("matrix-vector size mismatch");
  std::vector<Polynomial> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Term> acc;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      Polynomial prod = m.at(i, j) * v[j];
      acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    out[i] = Polynomial::from_terms(std::move(acc));
  }
  return out;
}

PolyMatrix weighted_laplacian(const Graph& g, WeightScheme w) {
  if (!applicable(w, g)) {
    throw SchemeMismatch(std::string("weight scheme '") + std::string(to_string(w)) + "' does not apply to " +
                         g.describe());
  }
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<Term>> cells(n * n);
  for (const Edge& e : g.edges()) {
    Polynomial weight = edge_weight(g, e, w).times(Integer(e.multiplicity));
    for (const Term& t : weight.terms()) {
      cells[e.u * n + e.u].push_back(t);
      cells[e.v * n + e.v].push_back(t);
      cells[e.u * n + e.v].push_back({t.monomial, -t.coeff});
      cells[e.v * n + e.u].push_back({t.monomial, -t.coeff});
    }
  }
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Polynomial::from_terms(std::move(cells[i * n + j]));
  }
  return m;
}

ReducedMatrix reduce(const PolyMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  if (row >= n || col >= n) {
    throw IndexOutOfRange("cannot remove row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1) +
                          " from a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  ReducedMatrix out{PolyMatrix(n - 1), ((row + col) % 2 == 0) ? 1 : -1};
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out.matrix.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

Polynomial determinant_bareiss(const PolyMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;

  // Clear negative exponents row by row.
  PolyMatrix m = input;
  Monomial undo;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial low;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.at(i, j).is_zero()) low = componentwise_min(low, m.at(i, j).min_exponents());
    }
    if (low.is_one()) continue;
    const Monomial lift = low.inverse();
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).times(lift);
    undo *= low;
  }

  int sign = 1;
  Polynomial prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m.at(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_with, j));
      sign = -sign;
    }
    const Polynomial& pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial& below = m.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = pivot * m.at(i, j);
        if (!below.is_zero() && !m.at(k, j).is_zero()) num -= below * m.at(k, j);
        m.at(i, j) = (k == 0) ? std::move(num) : div_exact(num, prev);
      }
    }
    prev = pivot;
  }
  Polynomial det = m.at(n - 1, n - 1).times(undo);
  return sign < 0 ? -det : det;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n > 24) throw InvalidSize("cofactor expansion limited to 24x24");
  // minors[S] = det of rows (n-|S|)..n-1 restricted to the columns in S.
  std::unordered_map<std::uint32_t, Polynomial> minors;
  minors.emplace(0U, Polynomial(1));
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<std::uint32_t, Polynomial> next;
    for (const auto& [cols, minor] : minors) {
      if (minor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t bit = 1U << j;
        if ((cols & bit) || m.at(row, j).is_zero()) continue;
        // Sign: position of j among the columns of cols | bit.
        const int pos = std::popcount(cols & (bit - 1));
        Polynomial term = m.at(row, j) * minor;
        auto [it, inserted] = next.try_emplace(cols | bit);
        if (pos % 2 == 0) {
          it->second += term;
        } else {
          it->second -= term;
        }
      }
    }
    minors = std::move(next);
  }
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);
  auto it = minors.find(all);
  return it == minors.end() ? Polynomial{} : it->second;
}

Polynomial determinant(const PolyMatrix& m) {
  return m.size() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Polynomial tree_enumerator_from_laplacian(const PolyMatrix& laplacian, std::size_t row, std::size_t col) {
  if (laplacian.size() == 0) throw InvalidSize("empty Laplacian");
  ReducedMatrix r = reduce(laplacian, row, col);
  Polynomial det = determinant(r.matrix);
  return r.sign < 0 ? -det : det;
}

Polynomial tree_enumerator_det(const Graph& g, WeightScheme w, std::size_t row, std::size_t col) {
  PolyMatrix laplacian = weighted_laplacian(g, w);
  if (!g.is_connected()) return {};
  return tree_enumerator_from_laplacian(laplacian, row, col);
}

Polynomial tree_enumerator_det(const Graph& g, WeightScheme w) {
  const std::size_t last = g.n_vertices() - 1;
  return tree_enumerator_det(g, w, last, last);
}

}  // namespace spantree
