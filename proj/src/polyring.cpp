#include "spantree/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>
#include <utility>

#include "spantree/errors.hpp"

namespace spantree {

// ---------------------------------------------------------------------------
// Variable

Variable::Variable(Family f, unsigned i, unsigned j) {
  if (i > kIndexMask || j > kIndexMask) {
    throw InvalidSize("variable index too large");
  }
  key_ = (std::uint64_t{static_cast<std::uint8_t>(f)} << 56) | (std::uint64_t{i} << 28) | j;
}

std::string Variable::to_string() const {
  switch (family()) {
    case Family::Q:
      return "q" + std::to_string(first());
    case Family::X:
      return "x" + std::to_string(first());
    case Family::Y:
      return "y" + std::to_string(first());
    case Family::XD:
      return "x(" + std::to_string(first()) + "," + std::to_string(second()) + ")";
    case Family::E:
      return "e(" + std::to_string(first()) + "," + std::to_string(second()) + ")";
  }
  return "?";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned index() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) throw ParseError("index too large", start);
    return static_cast<unsigned>(std::stoul(d));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Variable parse_variable(Cursor& cur) {
  std::size_t start = cur.pos();
  char head = cur.peek();
  if (head != 'q' && head != 'x' && head != 'y' && head != 'e') {
    throw ParseError("expected variable", start);
  }
  cur.advance();
  if (cur.accept('(')) {
    if (head != 'x' && head != 'e') throw ParseError("unexpected '('", start + 1);
    unsigned i = cur.index();
    cur.expect(',');
    unsigned j = cur.index();
    cur.expect(')');
    return head == 'x' ? Variable::xd(i, j) : Variable::e(i, j);
  }
  if (head == 'e') throw ParseError("expected '(' after e", cur.pos());
  unsigned i = cur.index();
  switch (head) {
    case 'q':
      return Variable::q(i);
    case 'x':
      return Variable::x(i);
    default:
      return Variable::y(i);
  }
}

}  // namespace

Variable Variable::parse(std::string_view text) {
  Cursor cur(text);
  Variable v = parse_variable(cur);
  if (!cur.done()) throw ParseError("trailing characters in variable", cur.pos());
  return v;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::int32_t exp) {
  if (exp != 0) {
    factors_.push_back({v, exp});
    degree_ = exp;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.exp == 0; });
  for (const Factor& f : m.factors_) m.degree_ += f.exp;
  return m;
}

std::int32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

bool Monomial::is_ordinary() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp > 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      std::int32_t e = a->exp + b->exp;
      if (e != 0) out.factors_.push_back({a->var, e});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (Factor& f : out.factors_) f.exp = -f.exp;
  out.degree_ = -degree_;
  return out;
}

Monomial Monomial::pow(std::int32_t k) const {
  if (k == 0) return {};
  Monomial out = *this;
  for (Factor& f : out.factors_) f.exp *= k;
  out.degree_ = degree_ * k;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      if (a->exp > 0) return false;
      ++a;
    } else if (a == factors_.end() || b->var < a->var) {
      if (b->exp < 0) return false;
      ++b;
    } else {
      if (a->exp > b->exp) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const Factor& f : factors_) {
    h ^= f.var.key() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.exp)) * 0xff51afd7ed558ccdULL + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += '*';
    out += f.var.to_string();
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

Monomial componentwise_min(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    if (j == b.factors().end() || (i != a.factors().end() && i->var < j->var)) {
      if (i->exp < 0) out.push_back(*i);
      ++i;
    } else if (i == a.factors().end() || j->var < i->var) {
      if (j->exp < 0) out.push_back(*j);
      ++j;
    } else {
      out.push_back({i->var, std::min(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return Monomial::from_factors(std::move(out));
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      return fa[i].exp > 0 ? 1 : -1;
    }
    if (i == fa.size() || fb[j].var < fa[i].var) {
      return fb[j].exp > 0 ? -1 : 1;
    }
    if (fa[i].exp != fb[j].exp) return fa[i].exp > fb[j].exp ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial(v), 1}); }

Polynomial::Polynomial(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(terms.size());
  for (Term& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial));
    it->second += t.coeff;
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; });
  return p;
}

bool Polynomial::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Integer Polynomial::coefficient_sum() const {
  Integer s = 0;
  for (const Term& t : terms_) s += t.coeff;
  return s;
}

Monomial Polynomial::min_exponents() const {
  if (terms_.empty()) return {};
  // Start from the first term and fold; absent exponents count as zero, so a
  // variable missing from any term contributes min(e, 0).
  Monomial acc = terms_.front().monomial;
  for (std::size_t i = 1; i < terms_.size(); ++i) acc = componentwise_min(acc, terms_[i].monomial);
  return acc;
}

bool Polynomial::is_ordinary() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.is_ordinary(); });
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merge two canonical term lists with sign applied to the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = 0;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a[i].monomial, b[j].monomial);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, negate_b ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial out = *this;
  if (m.is_one()) return out;
  // Graded lex is a group order, so a monomial shift preserves term order.
  for (Term& t : out.terms_) t.monomial *= m;
  return out;
}

Polynomial Polynomial::times(const Integer& c) const {
  if (c == 0) return {};
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0].monomial).times(a.terms_[0].coeff);
  if (b.size() == 1) return a.times(b.terms_[0].monomial).times(b.terms_[0].coeff);

  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(big.size() * small.size(), big.size() * 8));
  for (const Term& s : small.terms_) {
    for (const Term& t : big.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      mpz_addmul(it->second.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.monomial, y.monomial) > 0; });
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += t.monomial.to_string();
    }
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  Cursor cur(text);
  std::vector<Term> terms;
  cur.skip_space();
  if (cur.done()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (true) {
    cur.skip_space();
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (cur.accept('+')) {
      if (first) throw ParseError("leading '+'", cur.pos() - 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", cur.pos());
    }
    first = false;
    cur.skip_space();

    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool need_factor = true;
    if (cur.at_digit()) {
      coeff = Integer(cur.digits());
      need_factor = cur.accept('*');
    }
    if (need_factor) {
      while (true) {
        Variable v = parse_variable(cur);
        std::int32_t e = 1;
        if (cur.accept('^')) {
          bool neg_exp = cur.accept('-');
          std::size_t at = cur.pos();
          std::string d = cur.digits();
          if (d.size() > 9) throw ParseError("exponent too large", at);
          e = static_cast<std::int32_t>(std::stol(d));
          if (neg_exp) e = -e;
        }
        factors.push_back({v, e});
        if (!cur.accept('*')) break;
      }
    }
    if (negative) coeff = -coeff;
    terms.push_back({Monomial::from_factors(std::move(factors)), coeff});
    cur.skip_space();
    if (cur.done()) break;
  }
  if (terms.size() == 1 && terms[0].coeff == 0) return {};
  return from_terms(std::move(terms));
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Term& t : terms_) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& f : t.monomial.factors()) exps.push_back({f.var.to_string(), f.exp});
    arr.push_back({{"coeff", t.coeff.get_str()}, {"exps", std::move(exps)}});
  }
  return arr;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& t = j[i];
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps")) {
      throw ParseError("term must have coeff and exps", i);
    }
    Integer c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient", i);
    std::vector<Monomial::Factor> factors;
    for (const auto& e : t.at("exps")) {
      factors.push_back({Variable::parse(e.at(0).get<std::string>()), e.at(1).get<std::int32_t>()});
    }
    terms.push_back({Monomial::from_factors(std::move(factors)), std::move(c)});
  }
  return from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Division

namespace {

// Division of ordinary polynomials. The quotient terms are produced in
// descending order because the leading remainder term strictly decreases.
// If d divides n every intermediate remainder is a multiple of d, so its
// leading term is divisible by LT(d); the first failure is conclusive.
std::optional<Polynomial> divide_ordinary(const Polynomial& n, const Polynomial& d, Polynomial* remainder) {
  const Term& lead = d.leading_term();
  const Monomial lead_inv = lead.monomial.inverse();

  std::map<Monomial, Integer, GrlexGreater> rem;
  for (const Term& t : n.terms()) rem.emplace_hint(rem.end(), t.monomial, t.coeff);

  std::vector<Term> quotient;
  std::vector<Term> leftover;
  Integer qc;
  Integer prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (lead.monomial.divides(top->first) && mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      Monomial qm = top->first * lead_inv;
      mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
      rem.erase(top);
      auto terms = d.terms();
      for (std::size_t i = 1; i < terms.size(); ++i) {
        prod = qc * terms[i].coeff;
        auto [it, inserted] = rem.try_emplace(qm * terms[i].monomial);
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
      quotient.push_back({std::move(qm), qc});
    } else {
      if (remainder == nullptr) return std::nullopt;
      leftover.push_back({top->first, top->second});
      rem.erase(top);
    }
  }
  if (!leftover.empty()) {
    *remainder = Polynomial::from_terms(std::move(leftover));
    return std::nullopt;
  }
  return Polynomial::from_terms(std::move(quotient));
}

}  // namespace

std::optional<Polynomial> try_div_exact(const Polynomial& n, const Polynomial& d, Polynomial* remainder) {
  if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (n.is_zero()) return Polynomial{};

  // Ordinary operands divide in the polynomial ring; anything with a negative
  // exponent divides in the Laurent ring, where monomials are units.
  const bool laurent = !n.is_ordinary() || !d.is_ordinary();
  const Monomial n_shift = laurent ? n.min_exponents() : Monomial{};
  const Monomial d_shift = laurent ? d.min_exponents() : Monomial{};
  const Polynomial n0 = n.times(n_shift.inverse());
  const Polynomial d0 = d.times(d_shift.inverse());
  const Monomial back = n_shift * d_shift.inverse();

  if (d0.size() == 1) {
    const Term& lead = d0.leading_term();
    const Monomial lead_inv = lead.monomial.inverse();
    std::vector<Term> q;
    std::vector<Term> rest;
    q.reserve(n0.size());
    for (const Term& t : n0.terms()) {
      if (!lead.monomial.divides(t.monomial)) {
        rest.push_back(t);
        continue;
      }
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        rest.push_back({t.monomial, std::move(r)});
        continue;
      }
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      q.push_back({t.monomial * lead_inv * back, std::move(qc)});
    }
    if (!rest.empty()) {
      if (remainder != nullptr) *remainder = Polynomial::from_terms(std::move(rest)).times(n_shift);
      return std::nullopt;
    }
    return Polynomial::from_terms(std::move(q));
  }

  std::optional<Polynomial> q = divide_ordinary(n0, d0, remainder);
  if (!q) {
    if (remainder != nullptr) *remainder = remainder->times(n_shift);
    return std::nullopt;
  }
  return q->times(back);
}

Polynomial div_exact(const Polynomial& n, const Polynomial& d) {
  Polynomial remainder;
  std::optional<Polynomial> q = try_div_exact(n, d, &remainder);
  if (!q) {
    std::string rem = remainder.to_string();
    if (rem.size() > 200) rem = rem.substr(0, 200) + "...";
    throw NotDivisible("polynomial is not divisible; remainder " + rem);
  }
  return *std::move(q);
}

Polynomial div_exact(const Polynomial& n, const Integer& c) {
  if (c == 0) throw DivisionByZero("division by integer zero");
  std::vector<Term> q;
  q.reserve(n.size());
  for (const Term& t : n.terms()) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw NotDivisible("coefficient " + t.coeff.get_str() + " not divisible by " + c.get_str());
    }
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    q.push_back({t.monomial, std::move(qc)});
  }
  return Polynomial::from_terms(std::move(q));
}

// ---------------------------------------------------------------------------
// Substitution and coefficient scans

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  std::map<std::pair<Variable, std::int32_t>, Polynomial> powers;
  auto power_of = [&](Variable v, const Polynomial& image, std::int32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial value;
    if (e >= 0) {
      value = image.pow(static_cast<unsigned>(e));
    } else {
      if (!image.is_unit_monomial()) {
        throw NonInvertibleSubstitution("negative power of " + v.to_string() + " bound to non-unit " +
                                        image.to_string());
      }
      const Term& t = image.leading_term();
      value = Polynomial(t.monomial.pow(e), (-e) % 2 == 1 ? t.coeff : Integer(1));
    }
    return powers.emplace(key, std::move(value)).first->second;
  };

  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    Polynomial value(t.coeff);
    std::vector<Monomial::Factor> untouched;
    for (const auto& f : t.monomial.factors()) {
      auto b = bindings.find(f.var);
      if (b == bindings.end()) {
        untouched.push_back(f);
      } else {
        value = value * power_of(f.var, b->second, f.exp);
      }
    }
    value = value.times(Monomial::from_factors(std::move(untouched)));
    for (const Term& vt : value.terms()) out.push_back(vt);
  }
  return Polynomial::from_terms(std::move(out));
}

NonnegResult is_nonneg(const Polynomial& p) {
  for (const Term& t : p.terms()) {
    if (t.coeff < 0) return {false, t};
  }
  return {true, std::nullopt};
}

std::optional<Integer> min_coefficient(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  Integer best = p.leading_term().coeff;
  for (const Term& t : p.terms()) {
    if (t.coeff < best) best = t.coeff;
  }
  return best;
}

}  // namespace spantree
