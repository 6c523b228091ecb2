#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients.
//
// Terms are kept in canonical form: sorted in descending graded-lex order over
// the fixed Variable order, no zero coefficients, no zero exponents. Two
// polynomials are equal iff their term vectors are identical.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace spantree {

using Integer = mpz_class;

enum class Family : std::uint8_t {
  Q = 0,   // q_i, edge-direction weights
  X = 1,   // x_i, vertex variables
  Y = 2,   // y_i, out-degree variables for threshold graphs
  XD = 3,  // x^(i)_j, decoupled coordinate variables
  E = 4,   // e_{u,v}, generic edge variables
};

// A structured identifier. Ordered by family, then indices lexicographically.
class Variable {
 public:
  static Variable q(unsigned i) { return {Family::Q, i, 0}; }
  static Variable x(unsigned i) { return {Family::X, i, 0}; }
  static Variable y(unsigned i) { return {Family::Y, i, 0}; }
  static Variable xd(unsigned direction, unsigned j) { return {Family::XD, direction, j}; }
  // Endpoints are stored smallest first, so e(u,v) == e(v,u).
  static Variable e(unsigned u, unsigned v) {
    return u <= v ? Variable{Family::E, u, v} : Variable{Family::E, v, u};
  }

  static Variable parse(std::string_view text);

  Family family() const { return static_cast<Family>(key_ >> 56); }
  unsigned first() const { return static_cast<unsigned>((key_ >> 28) & kIndexMask); }
  unsigned second() const { return static_cast<unsigned>(key_ & kIndexMask); }
  std::uint64_t key() const { return key_; }

  std::string to_string() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  static constexpr std::uint64_t kIndexMask = (std::uint64_t{1} << 28) - 1;

  Variable(Family f, unsigned i, unsigned j);

  std::uint64_t key_ = 0;
};

class Monomial {
 public:
  struct Factor {
    Variable var;
    std::int32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(Variable v, std::int32_t exp = 1);

  // Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::int64_t total_degree() const { return degree_; }
  std::int32_t exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }
  // True when no exponent is negative.
  bool is_ordinary() const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }
  Monomial inverse() const;
  Monomial pow(std::int32_t k) const;

  // Exponent-wise <= ; meaningful for ordinary monomials.
  bool divides(const Monomial& other) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;  // ascending Variable order
  std::int64_t degree_ = 0;
};

// Componentwise minimum of two exponent vectors (absent exponents count as 0).
Monomial componentwise_min(const Monomial& a, const Monomial& b);

// Graded lex: total degree first, then lex with earlier variables dominant.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Integer& c = 1);

  // Canonicalizes: combines like terms, drops zeros, sorts.
  static Polynomial from_terms(std::vector<Term> terms);

  static Polynomial parse(std::string_view text);
  static Polynomial from_json(const nlohmann::json& j);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  // Single term with coefficient +1 or -1.
  bool is_unit_monomial() const;
  const Term& leading_term() const { return terms_.front(); }
  Integer coefficient(const Monomial& m) const;
  Integer coefficient_sum() const;

  // Minimal exponent of each variable across all terms; the Laurent shift.
  Monomial min_exponents() const;
  bool is_ordinary() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial times(const Monomial& m) const;
  Polynomial times(const Integer& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::vector<Term> terms_;
};

// Exact quotient n / d. When both operands are ordinary the division happens
// in the polynomial ring, so x1 does not divide x1 + x2. Otherwise it happens
// in the Laurent ring: both are shifted to ordinary polynomials by their
// minimal exponent vectors, divided under graded lex, and shifted back.
// Throws DivisionByZero or NotDivisible.
Polynomial div_exact(const Polynomial& n, const Polynomial& d);

// Non-throwing variant. On failure returns nullopt and, if requested, stores
// the remainder of the shifted division.
std::optional<Polynomial> try_div_exact(const Polynomial& n, const Polynomial& d,
                                        Polynomial* remainder = nullptr);

// Divides every coefficient by c; throws NotDivisible if any is not a multiple.
Polynomial div_exact(const Polynomial& n, const Integer& c);

using Bindings = std::map<Variable, Polynomial>;

// Ring homomorphism image. Unbound variables pass through. A variable carrying
// a negative exponent must be bound to a unit monomial (coefficient +-1).
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

struct NonnegResult {
  bool nonneg = true;
  std::optional<Term> witness;  // an offending term when nonneg == false
};

NonnegResult is_nonneg(const Polynomial& p);

// Smallest coefficient, or nullopt for the zero polynomial.
std::optional<Integer> min_coefficient(const Polynomial& p);

}  // namespace spantree

template <>
struct std::hash<spantree::Monomial> {
  std::size_t operator()(const spantree::Monomial& m) const { return m.hash(); }
};
