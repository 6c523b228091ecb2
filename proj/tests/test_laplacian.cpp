#include <gtest/gtest.h>

#include "generators.hpp"
#include "spantree/errors.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/treebrute.hpp"

using namespace spantree;
using spantree::testing::Gen;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

Polynomial all_ones(const Polynomial& p) { return Polynomial(p.coefficient_sum()); }

std::vector<Graph> small_graphs() {
  return {complete_graph(2),
          complete_graph(4),
          multigraph_kn(3, 2),
          cartesian_product({complete_graph(2), complete_graph(3)}),
          hypercube(2),
          threshold_graph(Partition({3, 2, 2, 1})),
          threshold_graph(Partition({4, 4, 2, 2, 2}))};
}

}  // namespace

TEST(Weights, CayleyPruferDiagonal) {
  const PolyMatrix l = weighted_laplacian(complete_graph(3), WeightScheme::CayleyPrufer);
  EXPECT_EQ(l.at(0, 0), P("x1*x2 + x1*x3"));
  EXPECT_EQ(l.at(0, 1), P("-x1*x2"));
}

TEST(Weights, CubeLaurentEntry) {
  const Graph q2 = hypercube(2);
  const PolyMatrix l = weighted_laplacian(q2, WeightScheme::CubeLaurent);
  // Vertex 0 is the empty set, vertex 1 is {1}.
  EXPECT_EQ(l.at(0, 1), P("-q1*x2^-1"));
}

TEST(Weights, ThresholdInOutOrientsTowardSmallerLabel) {
  EXPECT_EQ(tree_enumerator_det(complete_graph(2), WeightScheme::ThresholdInOut), P("x1*y2"));
}

TEST(Weights, SchemeMustApply) {
  EXPECT_THROW(weighted_laplacian(complete_graph(3), WeightScheme::CubeLaurent), SchemeMismatch);
  EXPECT_THROW(weighted_laplacian(hypercube(2), WeightScheme::ThresholdInOut), SchemeMismatch);
  EXPECT_EQ(parse_weight_scheme("cube"), WeightScheme::CubeLaurent);
  EXPECT_FALSE(parse_weight_scheme("nope"));
}

TEST(Laplacian, RowSumsVanishAndSymmetric) {
  for (const Graph& g : small_graphs()) {
    for (auto w : {WeightScheme::Generic, WeightScheme::CayleyPrufer, WeightScheme::Direction,
                   WeightScheme::Decoupled, WeightScheme::CubeLaurent, WeightScheme::ThresholdInOut}) {
      if (!applicable(w, g)) continue;
      const PolyMatrix l = weighted_laplacian(g, w);
      EXPECT_TRUE(l.is_symmetric());
      const std::vector<Polynomial> ones(l.size(), Polynomial(1));
      for (const Polynomial& entry : l * ones) EXPECT_TRUE(entry.is_zero()) << g.describe();
    }
  }
}

TEST(Reduce, ShapeAndSign) {
  const PolyMatrix l = weighted_laplacian(complete_graph(3), WeightScheme::CayleyPrufer);
  const ReducedMatrix r = reduce(l, 2, 2);
  ASSERT_EQ(r.matrix.size(), 2u);
  EXPECT_EQ(r.matrix.at(0, 0), P("x1*x2 + x1*x3"));
  EXPECT_EQ(r.matrix.at(0, 1), P("-x1*x2"));
  EXPECT_EQ(r.matrix.at(1, 0), P("-x1*x2"));
  EXPECT_EQ(r.matrix.at(1, 1), P("x1*x2 + x2*x3"));
  EXPECT_EQ(r.sign, 1);
  EXPECT_EQ(reduce(l, 0, 1).sign, -1);
  EXPECT_THROW(reduce(l, 3, 0), IndexOutOfRange);
}

TEST(Determinant, SmallCases) {
  const PolyMatrix k1 = weighted_laplacian(complete_graph(1), WeightScheme::Generic);
  EXPECT_EQ(reduce(k1, 0, 0).matrix.size(), 0u);
  EXPECT_EQ(tree_enumerator_from_laplacian(k1, 0, 0), Polynomial(1));
  EXPECT_EQ(determinant(PolyMatrix::identity(3)), Polynomial(1));
  const PolyMatrix l = weighted_laplacian(complete_graph(3), WeightScheme::CayleyPrufer);
  EXPECT_EQ(determinant(reduce(l, 2, 2).matrix), P("x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2"));
}

TEST(Determinant, BareissAgreesWithCofactorOnRandomMatrices) {
  Gen gen(51);
  for (int round = 0; round < 60; ++round) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // Sparse entries exercise zero pivots and row swaps.
        m.at(i, j) = gen.coin() ? gen.polynomial(2, -1, 2, 8) : Polynomial();
      }
    }
    ASSERT_EQ(determinant_bareiss(m), determinant_cofactor(m)) << m.to_string();
  }
}

TEST(Determinant, ReducedCubeEnumerator) {
  const Polynomial det = tree_enumerator_det(hypercube(2), WeightScheme::CubeLaurent, 0, 0);
  EXPECT_EQ(det, P("q1*q2") * P("q1*x1^-1 + q1*x1 + q2*x2^-1 + q2*x2"));
  EXPECT_EQ(det, enumerate_sum(hypercube(2), TreeStatistic::CubeSubstituted));
}

TEST(Determinant, CayleyPruferK4) {
  const Polynomial det = tree_enumerator_det(complete_graph(4), WeightScheme::CayleyPrufer);
  EXPECT_EQ(det, P("x1*x2*x3*x4") * P("x1 + x2 + x3 + x4").pow(2));
}

TEST(Determinant, Q3AllOnes) {
  EXPECT_EQ(all_ones(tree_enumerator_det(hypercube(3), WeightScheme::CubeLaurent, 0, 0)), Polynomial(384));
}

TEST(Determinant, IndependentOfRemovedVertex) {
  // Kirchhoff: every diagonal cofactor of a Laplacian is the same.
  for (const Graph& g : small_graphs()) {
    const PolyMatrix l = weighted_laplacian(g, WeightScheme::Generic);
    const Polynomial base = tree_enumerator_from_laplacian(l, 0, 0);
    for (std::size_t k = 1; k < g.n_vertices(); ++k) {
      EXPECT_EQ(tree_enumerator_from_laplacian(l, k, k), base) << g.describe() << " k=" << k;
    }
    EXPECT_EQ(tree_enumerator_from_laplacian(l, 0, 1), base) << g.describe();
  }
}

TEST(Determinant, DisconnectedGivesZero) {
  const Graph g = threshold_graph(Partition({1, 1, 0}));
  EXPECT_TRUE(tree_enumerator_det(g, WeightScheme::Generic).is_zero());
}
