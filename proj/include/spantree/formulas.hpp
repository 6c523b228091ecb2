#pragma once

// Closed-form right-hand sides: Cayley-Prufer, the direction enumerator of
// products of complete graphs (two product forms and the spectral route), the
// divisibility factors of the decoupled enumerator, the hypercube product,
// and the threshold-graph products.

#include <string>
#include <utility>
#include <vector>

#include "spantree/graphs.hpp"
#include "spantree/polyring.hpp"

namespace spantree {

// x1...xn (x1+...+xn)^(n-2).
Polynomial cayley_prufer_rhs(unsigned n);

// Factor sizes with the n_i = 1 entries removed. Direction indices are not
// renumbered, so the remaining q_i keep their original positions.
struct Dims {
  std::vector<unsigned> sizes;       // as given
  std::vector<unsigned> directions;  // 1-based positions with n_i >= 2
  bool stripped_unit_factors = false;
};
Dims normalize_dims(const std::vector<unsigned>& dims);

// (1/(n1...nr)) prod_{A != empty} (sum_{i in A} q_i n_i)^{prod_{i in A}(n_i-1)}.
Polynomial directions_rhs_quotient_form(const std::vector<unsigned>& dims);
// prod_i q_i^{n_i-1} n_i^{n_i-2} prod_{|A|>=2} (sum_{i in A} q_i n_i)^{prod(n_i-1)}.
Polynomial directions_rhs_product_form(const std::vector<unsigned>& dims);
// Both forms; throws FormMismatch if they differ.
Polynomial directions_rhs(const std::vector<unsigned>& dims);

struct Spectrum {
  std::vector<std::pair<Polynomial, unsigned long>> pairs;  // eigenvalue, multiplicity
  unsigned long total_multiplicity() const;
};

// One pair per subset A of the factors: (sum_{i in A} q_i n_i, prod_{i in A}(n_i - 1)).
Spectrum product_spectrum(const std::vector<unsigned>& dims, const std::vector<Polynomial>& qs);
// Symbolic q_i.
Spectrum product_spectrum(const std::vector<unsigned>& dims);

// (1/n) times the product of nonzero eigenvalues. Throws NotDivisible unless
// zero has multiplicity exactly one and the division is exact.
Polynomial count_from_spectrum(const Spectrum& s, unsigned long n);

struct Factor {
  Polynomial base;
  unsigned long exponent = 0;
  std::string label;
};

// q_i^{n_i-1}; x(i,j)^{prod_{t != i} n_t}; (x(i,1)+...+x(i,n_i))^{n_i-2}.
// Factors with exponent 0 are omitted.
std::vector<Factor> divisibility_factors(const std::vector<unsigned>& dims);

// f_A = sum_{i in A} q_i (x_i^-1 + x_i).
Polynomial cube_factor(const std::vector<unsigned>& subset);
// q1...qn prod_{|A|>=2} f_A.
Polynomial cube_rhs(unsigned n);

// prod_{r=2}^{n-1} lambda'_r. Throws NotThresholdSequence / Disconnected.
Integer merris_count(const Partition& lambda);
// x1 yn prod_{r=2}^{n-1} sum_{i=1}^{lambda'_r} x_min(i,r) y_max(i,r).
Polynomial threshold_rhs(const Partition& lambda);
// The same with y_i = x_i: x1...xn prod_{r=2}^{n-1} sum_{i=1}^{lambda'_r} x_i.
Polynomial threshold_rhs_symmetric(const Partition& lambda);

// f_r = y_r sum_{i<=r} x_i + x_r sum_{i=r+1}^{1+lambda_r} y_i  (2 <= r <= s)
Polynomial threshold_f(const Partition& lambda, unsigned r);
// g_r = sum_{i=1}^{lambda_{r+1}} x_i  (s < r < n)
Polynomial threshold_g(const Partition& lambda, unsigned r);
// x1 prod_{r=2}^{s} f_r prod_{r=s+1}^{n-1} g_r prod_{r=s+1}^{n} y_r; throws
// FormMismatch if it differs from threshold_rhs.
Polynomial threshold_rewrite_rhs(const Partition& lambda);

}  // namespace spantree
