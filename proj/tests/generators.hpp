#pragma once

// Seeded random generators for property tests.

#include <algorithm>
#include <random>

#include "spantree/graphs.hpp"
#include "spantree/polyring.hpp"

namespace spantree::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Variable variable() {
    switch (uniform(0, 3)) {
      case 0:
        return Variable::q(static_cast<unsigned>(uniform(1, 3)));
      case 1:
        return Variable::x(static_cast<unsigned>(uniform(1, 4)));
      case 2:
        return Variable::y(static_cast<unsigned>(uniform(1, 3)));
      default:
        return Variable::xd(static_cast<unsigned>(uniform(1, 2)), static_cast<unsigned>(uniform(1, 3)));
    }
  }

  // min_exp < 0 allows Laurent monomials.
  Monomial monomial(int max_vars, int min_exp, int max_exp) {
    std::vector<Monomial::Factor> f;
    const int k = uniform(0, max_vars);
    for (int i = 0; i < k; ++i) f.push_back({variable(), uniform(min_exp, max_exp)});
    return Monomial::from_factors(std::move(f));
  }

  Integer coefficient(int bits) {
    Integer c = uniform(1, 9);
    for (int b = 8; b < bits; b += 16) c = c * 65536 + uniform(0, 65535);
    return coin() ? Integer(-c) : c;
  }

  Polynomial polynomial(int max_terms, int min_exp = 0, int max_exp = 3, int bits = 8) {
    std::vector<Term> terms;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) terms.push_back({monomial(3, min_exp, max_exp), coefficient(bits)});
    return Polynomial::from_terms(std::move(terms));
  }

  Polynomial nonzero_polynomial(int max_terms, int min_exp = 0, int max_exp = 3, int bits = 8) {
    for (;;) {
      Polynomial p = polynomial(max_terms, min_exp, max_exp, bits);
      if (!p.is_zero()) return p;
    }
  }

  Partition partition(int max_len, int max_part) {
    std::vector<unsigned> parts;
    const int len = uniform(1, max_len);
    for (int i = 0; i < len; ++i) parts.push_back(static_cast<unsigned>(uniform(0, max_part)));
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spantree::testing
