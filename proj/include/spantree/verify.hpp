#pragma once

// Machine verification of the factorization identities, divisibility claims
// and nullvector constructions. Every check is an exact polynomial identity or
// an exact division; a Refuted verdict always carries a witness.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spantree/formulas.hpp"
#include "spantree/graphs.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/polyring.hpp"
#include "spantree/treebrute.hpp"

namespace spantree {

enum class Status { Verified, Refuted, Skipped };

std::string to_string(Status s);

struct Verdict {
  std::string claim_id;
  Status status = Status::Skipped;
  std::optional<Polynomial> witness;
  std::string note;
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const Verdict& v);
nlohmann::json report_json(const std::vector<Verdict>& verdicts);
bool all_verified(const std::vector<Verdict>& verdicts);

// Verified iff lhs - rhs == 0; otherwise the witness is the leading term of
// the difference.
Verdict verify_identity(const Polynomial& lhs, const Polynomial& rhs, const std::string& claim_id);

// Determinant enumerator vs brute-force sum on one graph.
Verdict verify_oracle(const Graph& g, WeightScheme w, TreeStatistic s, const std::string& claim_id,
                      std::uint64_t cap = kDefaultTreeCap);

// Negative control: the same comparison after adding 1 to entry (i, j) of the
// reduced Laplacian (last row and column removed). Expected to be Refuted.
Verdict verify_perturbed_oracle(const Graph& g, WeightScheme w, TreeStatistic s, std::size_t i, std::size_t j,
                                const std::string& claim_id, std::uint64_t cap = kDefaultTreeCap);

// Determinant (CayleyPrufer weights on K_n) vs x1..xn(x1+..+xn)^(n-2), and
// the all-ones count vs n^(n-2).
std::vector<Verdict> verify_cayley_prufer(unsigned n);

// Direction determinant vs both product forms, and the q=1 count vs the
// spectral count.
std::vector<Verdict> verify_directions(const std::vector<unsigned>& dims);

enum class Route { BruteForce, Determinant };

// Hypercube enumerator (brute force or determinant with S = {} removed) vs
// q1...qn prod f_A.
Verdict verify_cube_theorem(unsigned n, Route route);

// Enumerator vs the product form, its y = x specialization, the all-ones
// count vs Merris, and the rewritten product.
std::vector<Verdict> verify_threshold_theorem(const Partition& lambda, Route route = Route::Determinant);

struct DivisibilityReport {
  Polynomial enumerator;
  std::vector<Verdict> verdicts;
  std::optional<Polynomial> quotient;  // set when every factor divides
};

// Decoupled enumerator by determinant; checks each factor^exponent divides it
// and divides by all of them to get the quotient.
DivisibilityReport verify_divisibility(const std::vector<unsigned>& dims);

// Divides the enumerator by the listed factors in the given order.
Polynomial divide_out_factors(const Polynomial& enumerator, const std::vector<Factor>& factors);

struct ConjectureFinding {
  Verdict verdict;
  std::optional<Polynomial> quotient;
  std::optional<Integer> min_coefficient;
  std::size_t terms = 0;
};

// Non-negativity of the quotient. A Refuted verdict reports a negative term.
ConjectureFinding conjecture_scan(const std::vector<unsigned>& dims);

// Checks that L^ v is divisible by f_A entrywise, with v the cube nullvector,
// that v is nonzero modulo f_A, and that every entry equals
// +-(x_R x_{A\R})^2 / x_[n] f_A.
Verdict verify_cube_nullvector(unsigned n, const std::vector<unsigned>& subset);

// Tensor nullvectors 1 x .. x w x .. x 1 of the full decoupled Laplacian
// modulo x(i,1)+..+x(i,n_i), plus a rank check of the n_i - 1 vectors.
Verdict verify_decoupled_nullvectors(const std::vector<unsigned>& dims, unsigned direction);

// Lower summation bound of the extra g-block vector
// sum_{i=lo}^{a} (y_{a+b} e_i - y_i e_{a+b}). With a block starting at a,
// ConjugatePart takes lo = 1 + lambda'_a (= 1 + lambda_{a+1}); BlockStartDegree
// takes lo = 1 + lambda_a. The two agree unless lambda_a > lambda_{a+1}.
enum class GBlockBound { ConjugatePart, BlockStartDegree };

// f_r nullvectors for 2 <= r <= s and g-block nullvectors for each maximal
// run of equal conjugate parts beyond the Durfee square.
std::vector<Verdict> verify_threshold_nullvectors(const Partition& lambda,
                                                  GBlockBound bound = GBlockBound::ConjugatePart);

}  // namespace spantree
