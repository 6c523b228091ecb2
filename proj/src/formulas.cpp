#include "spantree/formulas.hpp"

#include "spantree/errors.hpp"

namespace spantree {

namespace {

Polynomial sum_of(const std::vector<Polynomial>& ps) {
  std::vector<Term> terms;
  for (const Polynomial& p : ps) terms.insert(terms.end(), p.terms().begin(), p.terms().end());
  return Polynomial::from_terms(std::move(terms));
}

Polynomial x_sum(unsigned from, unsigned to) {
  std::vector<Polynomial> ps;
  for (unsigned i = from; i <= to; ++i) ps.emplace_back(Variable::x(i));
  return sum_of(ps);
}

Polynomial y_sum(unsigned from, unsigned to) {
  std::vector<Polynomial> ps;
  for (unsigned i = from; i <= to; ++i) ps.emplace_back(Variable::y(i));
  return sum_of(ps);
}

Polynomial monomial_product(Family family, unsigned from, unsigned to) {
  std::vector<Monomial::Factor> f;
  for (unsigned i = from; i <= to; ++i) {
    switch (family) {
      case Family::X:
        f.push_back({Variable::x(i), 1});
        break;
      case Family::Y:
        f.push_back({Variable::y(i), 1});
        break;
      default:
        f.push_back({Variable::q(i), 1});
        break;
    }
  }
  return Polynomial(Monomial::from_factors(std::move(f)));
}

// Linear form sum_{i in A} q_i n_i over the subset given by bitmask over dirs.
Polynomial direction_form(const Dims& d, unsigned long mask, unsigned long* multiplicity) {
  std::vector<Polynomial> parts;
  unsigned long mult = 1;
  for (std::size_t k = 0; k < d.directions.size(); ++k) {
    if (!(mask & (1UL << k))) continue;
    const unsigned i = d.directions[k];
    const unsigned n = d.sizes[i - 1];
    parts.push_back(Polynomial(Variable::q(i)).times(Integer(n)));
    mult *= n - 1;
  }
  *multiplicity = mult;
  return sum_of(parts);
}

void require_connected_threshold(const Partition& lambda) {
  Graph g = threshold_graph(lambda);
  if (!g.is_connected()) throw Disconnected("threshold graph " + lambda.to_string() + " is disconnected");
}

}  // namespace

Polynomial cayley_prufer_rhs(unsigned n) {
  if (n < 2) throw InvalidSize("Cayley-Prufer product needs n >= 2");
  return monomial_product(Family::X, 1, n) * x_sum(1, n).pow(n - 2);
}

Dims normalize_dims(const std::vector<unsigned>& dims) {
  if (dims.empty()) throw InvalidSize("dims must be nonempty");
  if (dims.size() > 20) throw InvalidSize("too many factors");
  Dims d;
  d.sizes = dims;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) throw InvalidSize("factor size must be >= 1");
    if (dims[i] == 1) {
      d.stripped_unit_factors = true;
    } else {
      d.directions.push_back(static_cast<unsigned>(i + 1));
    }
  }
  return d;
}

Polynomial directions_rhs_quotient_form(const std::vector<unsigned>& dims) {
  const Dims d = normalize_dims(dims);
  Integer total = 1;
  for (unsigned n : d.sizes) total *= n;
  Polynomial product = 1;
  const unsigned long subsets = 1UL << d.directions.size();
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    unsigned long mult = 0;
    Polynomial form = direction_form(d, mask, &mult);
    product *= form.pow(static_cast<unsigned>(mult));
  }
  return div_exact(product, total);
}

Polynomial directions_rhs_product_form(const std::vector<unsigned>& dims) {
  const Dims d = normalize_dims(dims);
  Polynomial product = 1;
  for (unsigned i : d.directions) {
    const unsigned n = d.sizes[i - 1];
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), n, n - 2);
    product *= Polynomial(Monomial(Variable::q(i), static_cast<std::int32_t>(n - 1)), scale);
  }
  const unsigned long subsets = 1UL << d.directions.size();
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    unsigned long mult = 0;
    Polynomial form = direction_form(d, mask, &mult);
    product *= form.pow(static_cast<unsigned>(mult));
  }
  return product;
}

Polynomial directions_rhs(const std::vector<unsigned>& dims) {
  Polynomial first = directions_rhs_quotient_form(dims);
  Polynomial second = directions_rhs_product_form(dims);
  if (!(first == second)) throw FormMismatch("the two product forms of the direction enumerator differ");
  return first;
}

unsigned long Spectrum::total_multiplicity() const {
  unsigned long total = 0;
  for (const auto& [value, mult] : pairs) total += mult;
  return total;
}

Spectrum product_spectrum(const std::vector<unsigned>& dims, const std::vector<Polynomial>& qs) {
  if (dims.empty()) throw InvalidSize("dims must be nonempty");
  if (qs.size() != dims.size()) throw InvalidSize("need one q per factor");
  if (dims.size() > 20) throw InvalidSize("too many factors");
  Spectrum s;
  const unsigned long subsets = 1UL << dims.size();
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    std::vector<Term> value;
    unsigned long mult = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (!(mask & (1UL << i))) continue;
      Polynomial part = qs[i].times(Integer(dims[i]));
      value.insert(value.end(), part.terms().begin(), part.terms().end());
      mult *= dims[i] - 1;
    }
    if (mult == 0) continue;
    s.pairs.emplace_back(Polynomial::from_terms(std::move(value)), mult);
  }
  return s;
}

Spectrum product_spectrum(const std::vector<unsigned>& dims) {
  std::vector<Polynomial> qs;
  for (std::size_t i = 1; i <= dims.size(); ++i) qs.emplace_back(Variable::q(static_cast<unsigned>(i)));
  return product_spectrum(dims, qs);
}

Polynomial count_from_spectrum(const Spectrum& s, unsigned long n) {
  unsigned long zero_mult = 0;
  Polynomial product = 1;
  for (const auto& [value, mult] : s.pairs) {
    if (value.is_zero()) {
      zero_mult += mult;
    } else {
      product *= value.pow(static_cast<unsigned>(mult));
    }
  }
  if (zero_mult != 1) {
    throw NotDivisible("zero eigenvalue has multiplicity " + std::to_string(zero_mult) + ", expected 1");
  }
  return div_exact(product, Integer(std::to_string(n)));
}

std::vector<Factor> divisibility_factors(const std::vector<unsigned>& dims) {
  if (dims.empty()) throw InvalidSize("dims must be nonempty");
  std::vector<Factor> out;
  for (std::size_t idx = 0; idx < dims.size(); ++idx) {
    const auto i = static_cast<unsigned>(idx + 1);
    const unsigned n = dims[idx];
    if (n == 0) throw InvalidSize("factor size must be >= 1");
    if (n >= 2) {
      out.push_back({Variable::q(i), n - 1, "q" + std::to_string(i)});
    }
    unsigned long others = 1;
    for (std::size_t t = 0; t < dims.size(); ++t) {
      if (t != idx) others *= dims[t];
    }
    for (unsigned j = 1; j <= n; ++j) {
      Variable v = Variable::xd(i, j);
      out.push_back({v, others, v.to_string()});
    }
    if (n >= 3) {
      std::vector<Polynomial> parts;
      for (unsigned j = 1; j <= n; ++j) parts.emplace_back(Variable::xd(i, j));
      Polynomial f = sum_of(parts);
      out.push_back({f, n - 2, "(" + f.to_string() + ")"});
    }
  }
  return out;
}

Polynomial cube_factor(const std::vector<unsigned>& subset) {
  std::vector<Term> terms;
  for (unsigned i : subset) {
    terms.push_back({Monomial::from_factors({{Variable::q(i), 1}, {Variable::x(i), -1}}), 1});
    terms.push_back({Monomial::from_factors({{Variable::q(i), 1}, {Variable::x(i), 1}}), 1});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial cube_rhs(unsigned n) {
  if (n == 0) throw InvalidSize("cube needs n >= 1");
  if (n > 20) throw InvalidSize("cube dimension too large");
  Polynomial product = monomial_product(Family::Q, 1, n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::vector<unsigned> subset;
    for (unsigned i = 1; i <= n; ++i) {
      if (mask & (1UL << (i - 1))) subset.push_back(i);
    }
    product *= cube_factor(subset);
  }
  return product;
}

Integer merris_count(const Partition& lambda) {
  require_connected_threshold(lambda);
  const Partition conj = conjugate(lambda);
  Integer count = 1;
  for (unsigned r = 2; r + 1 <= lambda.size(); ++r) count *= conj.part(r);
  return count;
}

Polynomial threshold_rhs(const Partition& lambda) {
  require_connected_threshold(lambda);
  const auto n = static_cast<unsigned>(lambda.size());
  if (n < 2) throw InvalidSize("threshold product needs n >= 2");
  const Partition conj = conjugate(lambda);
  Polynomial product(Monomial::from_factors({{Variable::x(1), 1}, {Variable::y(n), 1}}));
  for (unsigned r = 2; r <= n - 1; ++r) {
    std::vector<Term> terms;
    for (unsigned i = 1; i <= conj.part(r); ++i) {
      terms.push_back(
          {Monomial::from_factors({{Variable::x(std::min(i, r)), 1}, {Variable::y(std::max(i, r)), 1}}), 1});
    }
    product *= Polynomial::from_terms(std::move(terms));
  }
  return product;
}

Polynomial threshold_rhs_symmetric(const Partition& lambda) {
  require_connected_threshold(lambda);
  const auto n = static_cast<unsigned>(lambda.size());
  if (n < 2) throw InvalidSize("threshold product needs n >= 2");
  const Partition conj = conjugate(lambda);
  Polynomial product = monomial_product(Family::X, 1, n);
  for (unsigned r = 2; r <= n - 1; ++r) product *= x_sum(1, conj.part(r));
  return product;
}

Polynomial threshold_f(const Partition& lambda, unsigned r) {
  return Polynomial(Variable::y(r)) * x_sum(1, r) + Polynomial(Variable::x(r)) * y_sum(r + 1, 1 + lambda.part(r));
}

Polynomial threshold_g(const Partition& lambda, unsigned r) { return x_sum(1, lambda.part(r + 1)); }

Polynomial threshold_rewrite_rhs(const Partition& lambda) {
  require_connected_threshold(lambda);
  const auto n = static_cast<unsigned>(lambda.size());
  if (n < 2) throw InvalidSize("threshold product needs n >= 2");
  const unsigned s = durfee(lambda);
  Polynomial product = Variable::x(1);
  for (unsigned r = 2; r <= s; ++r) product *= threshold_f(lambda, r);
  for (unsigned r = s + 1; r <= n - 1; ++r) product *= threshold_g(lambda, r);
  if (s + 1 <= n) product *= monomial_product(Family::Y, s + 1, n);
  if (!(product == threshold_rhs(lambda))) {
    throw FormMismatch("rewritten threshold product differs for " + lambda.to_string());
  }
  return product;
}

}  // namespace spantree
