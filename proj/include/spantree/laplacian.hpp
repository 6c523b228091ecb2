#pragma once

// Weighted Laplacians over the polynomial ring and their exact determinants.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/graphs.hpp"
#include "spantree/polyring.hpp"

namespace spantree {

enum class WeightScheme {
  Generic,         // e_{uv}
  CayleyPrufer,    // x_u x_v
  Direction,       // q_i for an edge in direction i
  Decoupled,       // q_i * prod_t x(t,k_t) * prod_t x(t,l_t)
  CubeLaurent,     // q_i x_S x_{S^i} / x_[n]
  ThresholdInOut,  // x_min y_max
};

std::string_view to_string(WeightScheme w);
std::optional<WeightScheme> parse_weight_scheme(std::string_view name);
bool applicable(WeightScheme w, const Graph& g);

// Weight of a single copy of the edge.
Polynomial edge_weight(const Graph& g, const Edge& e, WeightScheme w);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::span<const Polynomial> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

  bool is_symmetric() const;
  // Debug grid, one row per line, cells separated by " | ".
  std::string to_string() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> entries_;
};

std::vector<Polynomial> operator*(const PolyMatrix& m, std::span<const Polynomial> v);

// L_ii = sum of incident weights (with multiplicity), L_ij = -mult * e_ij.
PolyMatrix weighted_laplacian(const Graph& g, WeightScheme w);

struct ReducedMatrix {
  PolyMatrix matrix;
  int sign = 1;  // (-1)^(row+col)
};

// Removes row `row` and column `col` (0-based).
ReducedMatrix reduce(const PolyMatrix& m, std::size_t row, std::size_t col);

// Fraction-free Bareiss elimination. Rows with negative exponents are first
// multiplied by monomials that clear them; the shift is undone at the end.
Polynomial determinant_bareiss(const PolyMatrix& m);
// Laplace expansion along the first row, memoized on column subsets.
Polynomial determinant_cofactor(const PolyMatrix& m);
// Cofactor expansion for size <= 4, Bareiss above.
Polynomial determinant(const PolyMatrix& m);

// sign * det of the Laplacian with row/col removed; 0 for disconnected input.
// The defaults remove the last row and column.
Polynomial tree_enumerator_det(const Graph& g, WeightScheme w);
Polynomial tree_enumerator_det(const Graph& g, WeightScheme w, std::size_t row, std::size_t col);
Polynomial tree_enumerator_from_laplacian(const PolyMatrix& laplacian, std::size_t row, std::size_t col);

}  // namespace spantree
