#include <gtest/gtest.h>

#include "spantree/errors.hpp"
#include "spantree/formulas.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/treebrute.hpp"

using namespace spantree;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

Polynomial all_ones(const Polynomial& p) { return Polynomial(p.coefficient_sum()); }

Partition part(std::vector<unsigned> p) { return Partition(std::move(p)); }

std::vector<std::pair<std::string, unsigned long>> rendered(const Spectrum& s) {
  std::vector<std::pair<std::string, unsigned long>> out;
  for (const auto& [value, mult] : s.pairs) out.emplace_back(value.to_string(), mult);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CayleyPrufer, SmallCases) {
  EXPECT_EQ(cayley_prufer_rhs(2), P("x1*x2"));
  EXPECT_EQ(cayley_prufer_rhs(3), P("x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2"));
  EXPECT_EQ(all_ones(cayley_prufer_rhs(4)), Polynomial(16));
  EXPECT_THROW(cayley_prufer_rhs(1), InvalidSize);
}

TEST(Directions, Examples) {
  EXPECT_EQ(directions_rhs({2, 2}), P("2*q1^2*q2 + 2*q1*q2^2"));
  EXPECT_EQ(directions_rhs({4}), P("16*q1^3"));
  EXPECT_EQ(directions_rhs({5}), P("125*q1^4"));
  EXPECT_EQ(all_ones(directions_rhs({2, 2, 2})), Polynomial(384));
}

TEST(Directions, FormsAgree) {
  for (const std::vector<unsigned>& dims : std::vector<std::vector<unsigned>>{
           {2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 3}, {4, 3}, {2, 3, 4}}) {
    EXPECT_EQ(directions_rhs_quotient_form(dims), directions_rhs_product_form(dims));
  }
}

TEST(Directions, UnitFactorsAreStripped) {
  const Dims d = normalize_dims({3, 1, 2});
  EXPECT_TRUE(d.stripped_unit_factors);
  EXPECT_EQ(d.directions, (std::vector<unsigned>{1, 3}));
  // K3 x K1 x K2 is K3 x K2 with the second direction renamed to q3.
  EXPECT_EQ(directions_rhs({3, 1, 2}), substitute(directions_rhs({3, 2}), {{Variable::q(2), Variable::q(3)}}));
  EXPECT_THROW(normalize_dims({}), InvalidSize);
  EXPECT_THROW(normalize_dims({2, 0}), InvalidSize);
}

TEST(Directions, MatchesBruteForceOnSmallProducts) {
  for (const std::vector<unsigned>& dims : std::vector<std::vector<unsigned>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    std::vector<Graph> factors;
    for (unsigned n : dims) factors.push_back(complete_graph(n));
    EXPECT_EQ(directions_rhs(dims), enumerate_sum(cartesian_product(factors), TreeStatistic::Direction));
  }
}

TEST(Spectrum, CompleteGraph) {
  const Spectrum s = product_spectrum({3});
  EXPECT_EQ(rendered(s), (std::vector<std::pair<std::string, unsigned long>>{{"0", 1}, {"3*q1", 2}}));
}

TEST(Spectrum, SquareAtOne) {
  const Spectrum s = product_spectrum({2, 2}, {Polynomial(1), Polynomial(1)});
  EXPECT_EQ(rendered(s), (std::vector<std::pair<std::string, unsigned long>>{{"0", 1}, {"2", 1}, {"2", 1}, {"4", 1}}));
}

TEST(Spectrum, MultiplicitiesSumToVertexCount) {
  for (const std::vector<unsigned>& dims : std::vector<std::vector<unsigned>>{{2}, {5}, {2, 3}, {3, 3, 4}, {2, 2, 2, 2}}) {
    unsigned long n = 1;
    for (unsigned d : dims) n *= d;
    EXPECT_EQ(product_spectrum(dims).total_multiplicity(), n);
  }
}

TEST(Spectrum, Counts) {
  EXPECT_EQ(count_from_spectrum(product_spectrum({4}, {Polynomial(1)}), 4), Polynomial(16));
  EXPECT_EQ(count_from_spectrum(product_spectrum({2, 2, 2}, {1, 1, 1}), 8), Polynomial(384));
  EXPECT_EQ(count_from_spectrum(product_spectrum({2}, {Polynomial(1)}), 2), Polynomial(1));
  // Two zero eigenvalues means a disconnected graph.
  Spectrum bad = product_spectrum({2}, {Polynomial(1)});
  bad.pairs.emplace_back(Polynomial(), 1);
  EXPECT_THROW(count_from_spectrum(bad, 3), NotDivisible);
}

TEST(Spectrum, SymbolicCountIsTheDirectionEnumerator) {
  for (const std::vector<unsigned>& dims : std::vector<std::vector<unsigned>>{{3}, {2, 2}, {2, 3}, {3, 3}}) {
    unsigned long n = 1;
    for (unsigned d : dims) n *= d;
    EXPECT_EQ(count_from_spectrum(product_spectrum(dims), n), directions_rhs(dims));
  }
}

TEST(DivisibilityFactors, Lists) {
  auto labels = [](const std::vector<unsigned>& dims) {
    std::vector<std::string> out;
    for (const Factor& f : divisibility_factors(dims)) out.push_back(f.label + "^" + std::to_string(f.exponent));
    return out;
  };
  EXPECT_EQ(labels({3}), (std::vector<std::string>{"q1^2", "x(1,1)^1", "x(1,2)^1", "x(1,3)^1",
                                                   "(x(1,1) + x(1,2) + x(1,3))^1"}));
  EXPECT_EQ(labels({2, 2}),
            (std::vector<std::string>{"q1^1", "x(1,1)^2", "x(1,2)^2", "q2^1", "x(2,1)^2", "x(2,2)^2"}));
  EXPECT_EQ(labels({2, 3}), (std::vector<std::string>{"q1^1", "x(1,1)^3", "x(1,2)^3", "q2^2", "x(2,1)^2", "x(2,2)^2",
                                                      "x(2,3)^2", "(x(2,1) + x(2,2) + x(2,3))^1"}));
}

TEST(Cube, Examples) {
  EXPECT_EQ(cube_rhs(1), P("q1"));
  EXPECT_EQ(cube_rhs(2), P("q1*q2") * P("q1*x1^-1 + q1*x1 + q2*x2^-1 + q2*x2"));
  EXPECT_EQ(all_ones(cube_rhs(3)), Polynomial(384));
  EXPECT_EQ(cube_factor({1, 3}), P("q1*x1^-1 + q1*x1 + q3*x3^-1 + q3*x3"));
}

TEST(Merris, Examples) {
  EXPECT_EQ(merris_count(part({2, 2, 2})), 3);
  EXPECT_EQ(merris_count(part({3, 1, 1, 1})), 1);
  for (unsigned n = 2; n <= 8; ++n) {
    Integer cayley;
    mpz_ui_pow_ui(cayley.get_mpz_t(), n, n - 2);
    EXPECT_EQ(merris_count(Partition(std::vector<unsigned>(n, n - 1))), cayley) << n;
  }
  EXPECT_THROW(merris_count(part({1, 1, 0})), Disconnected);
  EXPECT_THROW(merris_count(part({2, 2, 1, 1})), NotThresholdSequence);
}

TEST(Threshold, ProductForms) {
  EXPECT_EQ(threshold_rhs(part({2, 2, 2})), P("x1*y3") * P("x1*y2 + x2*y2 + x2*y3"));
  EXPECT_EQ(threshold_rhs(part({1, 1})), P("x1*y2"));
  EXPECT_EQ(threshold_rhs_symmetric(part({2, 2, 2})), cayley_prufer_rhs(3));
}

TEST(Threshold, Rewrite) {
  const Partition k3 = part({2, 2, 2});
  EXPECT_EQ(threshold_f(k3, 2), P("y2*x1 + y2*x2 + x2*y3"));
  EXPECT_EQ(threshold_rewrite_rhs(k3), P("x1*y3") * threshold_f(k3, 2));
  const Partition star = part({3, 1, 1, 1});
  EXPECT_EQ(threshold_g(star, 2), P("x1"));
  EXPECT_EQ(threshold_g(star, 3), P("x1"));
  EXPECT_EQ(threshold_rewrite_rhs(star), P("x1^3*y2*y3*y4"));
}

TEST(Threshold, RewriteAgreesExhaustively) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (const Partition& lambda : threshold_sequences(n, true)) {
      EXPECT_EQ(threshold_rewrite_rhs(lambda), threshold_rhs(lambda)) << lambda.to_string();
    }
  }
}
