#include "spantree/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "spantree/errors.hpp"

namespace spantree {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified:
      return "Verified";
    case Status::Refuted:
      return "Refuted";
    case Status::Skipped:
      return "Skipped";
  }
  return "?";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"claim_id", v.claim_id}, {"status", to_string(v.status)}, {"elapsed_ms", v.elapsed_ms}};
  j["witness"] = v.witness ? nlohmann::json(v.witness->to_string()) : nlohmann::json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json report_json(const std::vector<Verdict>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Verdict& v : verdicts) arr.push_back(to_json(v));
  return arr;
}

bool all_verified(const std::vector<Verdict>& verdicts) {
  for (const Verdict& v : verdicts) {
    if (v.status == Status::Refuted) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Verdict refuted(const std::string& id, Polynomial witness, std::string note = {}) {
  return {id, Status::Refuted, std::move(witness), std::move(note), 0.0};
}

Verdict verified(const std::string& id, std::string note = {}) {
  return {id, Status::Verified, std::nullopt, std::move(note), 0.0};
}

std::string dims_label(const std::vector<unsigned>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

std::string subset_label(const std::vector<unsigned>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

Graph product_of_complete(const std::vector<unsigned>& dims) {
  std::vector<Graph> factors;
  for (unsigned n : dims) factors.push_back(complete_graph(n));
  return cartesian_product(factors);
}

Polynomial evaluate_ones(const Polynomial& p) { return Polynomial(p.coefficient_sum()); }

std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer a = rows[rank][c];
      Integer b = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

// Checks every entry of residues is divisible by f; returns the first
// offending index.
std::optional<std::size_t> first_indivisible(const std::vector<Polynomial>& residues, const Polynomial& f) {
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (!try_div_exact(residues[i], f)) return i;
  }
  return std::nullopt;
}

bool nonzero_mod(const std::vector<Polynomial>& v, const Polynomial& f) {
  for (const Polynomial& p : v) {
    if (!p.is_zero() && !try_div_exact(p, f)) return true;
  }
  return false;
}

Polynomial x_subset(const std::vector<unsigned>& vars, int exp) {
  std::vector<Monomial::Factor> f;
  for (unsigned i : vars) f.push_back({Variable::x(i), exp});
  return Polynomial(Monomial::from_factors(std::move(f)));
}

}  // namespace

Verdict verify_identity(const Polynomial& lhs, const Polynomial& rhs, const std::string& claim_id) {
  auto start = Clock::now();
  Polynomial diff = lhs - rhs;
  Verdict v = diff.is_zero()
                  ? verified(claim_id)
                  : refuted(claim_id, Polynomial(diff.leading_term().monomial, diff.leading_term().coeff),
                            std::to_string(diff.size()) + " differing terms");
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict verify_oracle(const Graph& g, WeightScheme w, TreeStatistic s, const std::string& claim_id,
                      std::uint64_t cap) {
  auto start = Clock::now();
  Polynomial det = tree_enumerator_det(g, w);
  Polynomial brute = enumerate_sum(g, s, cap);
  Verdict v = verify_identity(det, brute, claim_id);
  v.note = std::to_string(brute.size()) + " terms";
  v.elapsed_ms = ms_since(start);
  return v;
}

Verdict verify_perturbed_oracle(const Graph& g, WeightScheme w, TreeStatistic s, std::size_t i, std::size_t j,
                                const std::string& claim_id, std::uint64_t cap) {
  auto start = Clock::now();
  const std::size_t last = g.n_vertices() - 1;
  ReducedMatrix reduced = reduce(weighted_laplacian(g, w), last, last);
  if (i >= reduced.matrix.size() || j >= reduced.matrix.size()) throw IndexOutOfRange("perturbed entry out of range");
  reduced.matrix.at(i, j) += Polynomial(1);
  Polynomial det = determinant(reduced.matrix);
  if (reduced.sign < 0) det = -det;
  Verdict v = verify_identity(det, enumerate_sum(g, s, cap), claim_id);
  v.elapsed_ms = ms_since(start);
  return v;
}

std::vector<Verdict> verify_cayley_prufer(unsigned n) {
  const std::string id = "cayley-prufer/n=" + std::to_string(n);
  auto start = Clock::now();
  const Graph g = complete_graph(n);
  Polynomial det = tree_enumerator_det(g, WeightScheme::CayleyPrufer);
  Polynomial rhs = cayley_prufer_rhs(n);
  std::vector<Verdict> out;
  out.push_back(verify_identity(det, rhs, id + "/product"));
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), n, n - 2);
  out.push_back(verify_identity(evaluate_ones(det), Polynomial(expected), id + "/count"));
  out.front().elapsed_ms = ms_since(start);
  return out;
}

std::vector<Verdict> verify_directions(const std::vector<unsigned>& dims) {
  const std::string id = "directions" + dims_label(dims);
  auto start = Clock::now();
  std::vector<Verdict> out;
  Polynomial quotient_form = directions_rhs_quotient_form(dims);
  Polynomial product_form = directions_rhs_product_form(dims);
  out.push_back(verify_identity(quotient_form, product_form, id + "/forms"));

  const Graph g = product_of_complete(dims);
  Polynomial det = tree_enumerator_det(g, WeightScheme::Direction);
  out.push_back(verify_identity(det, product_form, id + "/determinant"));

  std::vector<Polynomial> ones(dims.size(), Polynomial(1));
  Polynomial spectral = count_from_spectrum(product_spectrum(dims, ones), g.n_vertices());
  out.push_back(verify_identity(evaluate_ones(det), spectral, id + "/spectral-count"));
  out.front().elapsed_ms = ms_since(start);
  return out;
}

Verdict verify_cube_theorem(unsigned n, Route route) {
  const std::string id =
      "cube/n=" + std::to_string(n) + (route == Route::BruteForce ? "/brute-force" : "/determinant");
  auto start = Clock::now();
  const Graph g = hypercube(n);
  Polynomial lhs = route == Route::BruteForce ? enumerate_sum(g, TreeStatistic::CubeSubstituted)
                                              : tree_enumerator_det(g, WeightScheme::CubeLaurent, 0, 0);
  Verdict v = verify_identity(lhs, cube_rhs(n), id);
  v.elapsed_ms = ms_since(start);
  return v;
}

std::vector<Verdict> verify_threshold_theorem(const Partition& lambda, Route route) {
  const std::string id = "threshold" + lambda.to_string();
  auto start = Clock::now();
  const Graph g = threshold_graph(lambda);
  if (!g.is_connected()) {
    return {{id, Status::Skipped, std::nullopt, "disconnected threshold graph has no spanning trees", 0.0}};
  }
  const auto n = static_cast<unsigned>(lambda.size());
  Polynomial lhs = route == Route::BruteForce ? enumerate_sum(g, TreeStatistic::InOutDegree)
                                              : tree_enumerator_det(g, WeightScheme::ThresholdInOut, 0, 0);
  std::vector<Verdict> out;
  Polynomial rhs = threshold_rhs(lambda);
  out.push_back(verify_identity(lhs, rhs, id + "/product"));

  Bindings y_to_x;
  for (unsigned i = 1; i <= n; ++i) y_to_x.emplace(Variable::y(i), Variable::x(i));
  out.push_back(verify_identity(substitute(lhs, y_to_x), threshold_rhs_symmetric(lambda), id + "/symmetric"));
  out.push_back(verify_identity(evaluate_ones(lhs), Polynomial(merris_count(lambda)), id + "/merris"));

  const unsigned s = durfee(lambda);
  Polynomial rewrite = Variable::x(1);
  for (unsigned r = 2; r <= s; ++r) rewrite *= threshold_f(lambda, r);
  for (unsigned r = s + 1; r + 1 <= n; ++r) rewrite *= threshold_g(lambda, r);
  for (unsigned r = s + 1; r <= n; ++r) rewrite *= Polynomial(Variable::y(r));
  out.push_back(verify_identity(rewrite, rhs, id + "/rewrite"));

  std::vector<Monomial::Factor> lead{{Variable::x(1), static_cast<std::int32_t>(n - 1)}};
  for (unsigned i = 2; i <= n; ++i) lead.push_back({Variable::y(i), 1});
  const Monomial anchor = Monomial::from_factors(std::move(lead));
  out.push_back(verify_identity(Polynomial(lhs.coefficient(anchor)), Polynomial(1), id + "/anchor-coefficient"));
  out.front().elapsed_ms = ms_since(start);
  return out;
}

Polynomial divide_out_factors(const Polynomial& enumerator, const std::vector<Factor>& factors) {
  Polynomial q = enumerator;
  for (const Factor& f : factors) q = div_exact(q, f.base.pow(static_cast<unsigned>(f.exponent)));
  return q;
}

DivisibilityReport verify_divisibility(const std::vector<unsigned>& dims) {
  for (unsigned n : dims) {
    if (n < 2) throw InvalidSize("divisibility check needs every n_i >= 2");
  }
  const std::string id = "divisibility" + dims_label(dims);
  DivisibilityReport report;
  auto start = Clock::now();
  report.enumerator = tree_enumerator_det(product_of_complete(dims), WeightScheme::Decoupled);
  const double det_ms = ms_since(start);

  const std::vector<Factor> factors = divisibility_factors(dims);
  bool every = true;
  for (const Factor& f : factors) {
    auto t0 = Clock::now();
    const std::string fid = id + "/" + f.label + "^" + std::to_string(f.exponent);
    Polynomial remainder;
    auto q = try_div_exact(report.enumerator, f.base.pow(static_cast<unsigned>(f.exponent)), &remainder);
    Verdict v = q ? verified(fid) : refuted(fid, remainder, "nonzero remainder");
    v.elapsed_ms = ms_since(t0);
    every = every && q.has_value();
    report.verdicts.push_back(std::move(v));
  }
  if (!report.verdicts.empty()) report.verdicts.front().elapsed_ms += det_ms;
  if (every) {
    auto t0 = Clock::now();
    std::optional<Polynomial> q = report.enumerator;
    for (const Factor& f : factors) {
      q = try_div_exact(*q, f.base.pow(static_cast<unsigned>(f.exponent)));
      if (!q) break;
    }
    Verdict v = q ? verified(id + "/all-factors") : refuted(id + "/all-factors", report.enumerator);
    v.elapsed_ms = ms_since(t0);
    report.verdicts.push_back(std::move(v));
    report.quotient = q;
  }
  return report;
}

ConjectureFinding conjecture_scan(const std::vector<unsigned>& dims) {
  const std::string id = "conjecture" + dims_label(dims);
  auto start = Clock::now();
  DivisibilityReport report = verify_divisibility(dims);
  ConjectureFinding finding;
  if (!report.quotient) {
    finding.verdict = {id, Status::Skipped, std::nullopt, "quotient unavailable: a factor did not divide", 0.0};
  } else {
    finding.quotient = report.quotient;
    finding.terms = report.quotient->size();
    finding.min_coefficient = min_coefficient(*report.quotient);
    NonnegResult scan = is_nonneg(*report.quotient);
    std::string note = "quotient has " + std::to_string(finding.terms) + " terms, min coefficient " +
                       (finding.min_coefficient ? finding.min_coefficient->get_str() : std::string("none"));
    finding.verdict = scan.nonneg ? verified(id, note)
                                  : refuted(id, Polynomial(scan.witness->monomial, scan.witness->coeff), note);
  }
  finding.verdict.elapsed_ms = ms_since(start);
  return finding;
}

Verdict verify_cube_nullvector(unsigned n, const std::vector<unsigned>& subset) {
  const std::string id = "cube-nullvector/n=" + std::to_string(n) + "/A=" + subset_label(subset);
  auto start = Clock::now();
  std::set<unsigned> a(subset.begin(), subset.end());
  if (a.size() != subset.size() || a.size() < 2 || *a.begin() < 1 || *a.rbegin() > n) {
    throw InvalidSize("A must be a subset of [n] with at least two elements");
  }
  const Graph g = hypercube(n);
  const ReducedMatrix reduced = reduce(weighted_laplacian(g, WeightScheme::CubeLaurent), 0, 0);
  const Polynomial f_a = cube_factor(subset);
  const std::size_t count = g.n_vertices();

  auto members = [&](std::size_t mask) {
    std::vector<unsigned> in_s;
    for (unsigned i = 1; i <= n; ++i) {
      if (mask & (std::size_t{1} << (i - 1))) in_s.push_back(i);
    }
    return in_s;
  };
  auto a_minus = [&](std::size_t mask) {
    std::vector<unsigned> out;
    for (unsigned i : subset) {
      if (!(mask & (std::size_t{1} << (i - 1)))) out.push_back(i);
    }
    return out;
  };

  const Polynomial x_a_sq = x_subset(subset, 2);
  std::vector<Polynomial> v;
  for (std::size_t s = 1; s < count; ++s) {
    const std::size_t overlap = subset.size() - a_minus(s).size();
    Polynomial tail = x_subset(a_minus(s), 2);
    v.push_back(overlap % 2 == 0 ? x_a_sq - tail : x_a_sq + tail);
  }
  if (!nonzero_mod(v, f_a)) {
    Verdict out = refuted(id, f_a, "nullvector is zero modulo f_A");
    out.elapsed_ms = ms_since(start);
    return out;
  }

  const std::vector<Polynomial> residues = reduced.matrix * v;
  if (auto bad = first_indivisible(residues, f_a)) {
    Verdict out = refuted(id, residues[*bad], "entry R=" + subset_label(members(*bad + 1)) + " not divisible by f_A");
    out.elapsed_ms = ms_since(start);
    return out;
  }

  std::vector<unsigned> everything;
  for (unsigned i = 1; i <= n; ++i) everything.push_back(i);
  const Polynomial x_all_inv = x_subset(everything, -1);
  std::size_t positive = 0;
  std::size_t negative = 0;
  for (std::size_t r = 1; r < count; ++r) {
    const Polynomial closed = x_subset(members(r), 2) * x_subset(a_minus(r), 2) * x_all_inv * f_a;
    const Polynomial& entry = residues[r - 1];
    // The sign is -(-1)^{|A cap R|}.
    const std::size_t overlap = subset.size() - a_minus(r).size();
    const Polynomial predicted = overlap % 2 == 0 ? -closed : closed;
    if (entry == predicted) {
      (overlap % 2 == 0 ? negative : positive)++;
    } else if (entry == -predicted) {
      Verdict out = refuted(id, entry, "entry R=" + subset_label(members(r)) + " has the opposite closed-form sign");
      out.elapsed_ms = ms_since(start);
      return out;
    } else {
      Verdict out = refuted(id, entry - predicted, "entry R=" + subset_label(members(r)) + " differs from closed form");
      out.elapsed_ms = ms_since(start);
      return out;
    }
  }
  Verdict out = verified(id, std::to_string(count - 1) + " residues match -(-1)^|A cap R| (x_R x_{A\\R})^2/x_[n] f_A (" +
                                 std::to_string(positive) + " positive, " + std::to_string(negative) + " negative)");
  out.elapsed_ms = ms_since(start);
  return out;
}

Verdict verify_decoupled_nullvectors(const std::vector<unsigned>& dims, unsigned direction) {
  const std::string id = "decoupled-nullvector" + dims_label(dims) + "/i=" + std::to_string(direction);
  auto start = Clock::now();
  if (direction < 1 || direction > dims.size()) throw IndexOutOfRange("direction out of range");
  const unsigned ni = dims[direction - 1];
  if (ni < 2) throw InvalidSize("direction needs n_i >= 2");
  for (unsigned n : dims) {
    if (n < 1) throw InvalidSize("factor size must be >= 1");
  }

  std::vector<Polynomial> f_parts;
  for (unsigned j = 1; j <= ni; ++j) f_parts.emplace_back(Variable::xd(direction, j));
  Polynomial f;
  for (const Polynomial& p : f_parts) f += p;

  // Nullvectors of the rank-one reduction -u^T u, u = (x(i,1),...,x(i,n_i)).
  std::vector<std::vector<Polynomial>> small;
  for (unsigned j = 1; j < ni; ++j) {
    std::vector<Polynomial> w(ni);
    w[j - 1] = Variable::xd(direction, ni);
    w[ni - 1] = -Polynomial(Variable::xd(direction, j));
    small.push_back(std::move(w));
  }

  // L^(i): Cayley-Prufer weights on K_{n_i}, renamed into the decoupled variables.
  Bindings rename;
  for (unsigned j = 1; j <= ni; ++j) rename.emplace(Variable::x(j), Variable::xd(direction, j));
  const PolyMatrix cp = weighted_laplacian(complete_graph(ni), WeightScheme::CayleyPrufer);
  PolyMatrix factor_laplacian(ni);
  for (std::size_t r = 0; r < ni; ++r) {
    for (std::size_t c = 0; c < ni; ++c) factor_laplacian.at(r, c) = substitute(cp.at(r, c), rename);
  }
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (auto bad = first_indivisible(factor_laplacian * small[k], f)) {
      Verdict out = refuted(id, (factor_laplacian * small[k])[*bad],
                            "factor nullvector " + std::to_string(k + 1) + " fails in row " + std::to_string(*bad + 1));
      out.elapsed_ms = ms_since(start);
      return out;
    }
  }

  const Graph g = product_of_complete(dims);
  const PolyMatrix laplacian = weighted_laplacian(g, WeightScheme::Decoupled);
  std::vector<std::vector<Polynomial>> tensors;
  for (std::size_t k = 0; k < small.size(); ++k) {
    std::vector<Polynomial> w(g.n_vertices());
    for (std::size_t vtx = 0; vtx < g.n_vertices(); ++vtx) w[vtx] = small[k][g.coordinate(vtx, direction) - 1];
    const std::vector<Polynomial> residues = laplacian * w;
    if (auto bad = first_indivisible(residues, f)) {
      Verdict out = refuted(id, residues[*bad],
                            "tensor nullvector " + std::to_string(k + 1) + " fails in row " + std::to_string(*bad + 1));
      out.elapsed_ms = ms_since(start);
      return out;
    }
    if (!nonzero_mod(w, f)) {
      Verdict out = refuted(id, f, "tensor nullvector " + std::to_string(k + 1) + " is zero modulo f");
      out.elapsed_ms = ms_since(start);
      return out;
    }
    tensors.push_back(std::move(w));
  }

  // Independence at a random integer point.
  std::mt19937_64 rng(0x5eed0000ULL + direction);
  std::uniform_int_distribution<long> pick(2, 1000);
  Bindings point;
  for (std::size_t t = 1; t <= dims.size(); ++t) {
    for (unsigned j = 1; j <= dims[t - 1]; ++j) point.emplace(Variable::xd(static_cast<unsigned>(t), j), pick(rng));
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& w : tensors) {
    std::vector<Integer> row;
    for (const Polynomial& p : w) row.push_back(substitute(p, point).coefficient(Monomial{}));
    rows.push_back(std::move(row));
  }
  const std::size_t rank = integer_rank(rows);
  if (rank != ni - 1) {
    Verdict out = refuted(id, Polynomial(Integer(std::to_string(rank))),
                          "rank " + std::to_string(rank) + ", expected " + std::to_string(ni - 1));
    out.elapsed_ms = ms_since(start);
    return out;
  }
  Verdict out = verified(id, std::to_string(ni - 1) + " independent nullvectors");
  out.elapsed_ms = ms_since(start);
  return out;
}

namespace {

// Vertex k (1-based, k >= 2) sits at index k-2 of the reduced matrix.
std::vector<Polynomial> threshold_vector(unsigned n, const std::vector<std::pair<unsigned, Polynomial>>& entries) {
  std::vector<Polynomial> v(n - 1);
  for (const auto& [vertex, value] : entries) v[vertex - 2] += value;
  return v;
}

}  // namespace

std::vector<Verdict> verify_threshold_nullvectors(const Partition& lambda, GBlockBound bound) {
  const std::string id = "threshold-nullvector" + lambda.to_string();
  const Graph g = threshold_graph(lambda);
  if (!g.is_connected()) throw Disconnected("threshold graph " + lambda.to_string() + " is disconnected");
  const auto n = static_cast<unsigned>(lambda.size());
  if (n < 2) throw InvalidSize("need at least two vertices");
  const ReducedMatrix reduced = reduce(weighted_laplacian(g, WeightScheme::ThresholdInOut), 0, 0);
  const Partition conj = conjugate(lambda);
  const unsigned s = durfee(lambda);

  auto adjacent = [&](unsigned i, unsigned j) {
    for (const Edge& e : g.edges()) {
      if ((e.u + 1 == i && e.v + 1 == j) || (e.u + 1 == j && e.v + 1 == i)) return true;
    }
    return false;
  };

  std::vector<Verdict> out;
  auto check = [&](const std::string& cid, const std::vector<Polynomial>& v, const Polynomial& factor,
                   const std::function<std::string(unsigned)>& case_of) {
    auto start = Clock::now();
    Verdict verdict;
    if (!nonzero_mod(v, factor)) {
      verdict = refuted(cid, factor, "vector is zero modulo the factor");
    } else {
      const std::vector<Polynomial> residues = reduced.matrix * v;
      auto bad = first_indivisible(residues, factor);
      if (bad) {
        const auto vertex = static_cast<unsigned>(*bad + 2);
        verdict = refuted(cid, residues[*bad],
                          "entry " + std::to_string(vertex) + " not divisible, case " + case_of(vertex));
      } else {
        verdict = verified(cid);
      }
    }
    verdict.elapsed_ms = ms_since(start);
    out.push_back(std::move(verdict));
  };

  // f_r vectors.
  for (unsigned r = 2; r <= s; ++r) {
    const Polynomial fr = threshold_f(lambda, r);
    std::vector<std::pair<unsigned, Polynomial>> entries;
    Polynomial head;
    for (unsigned i = 1; i <= r; ++i) head += Polynomial(Variable::x(i));
    entries.emplace_back(r, head);
    for (unsigned i = r + 1; i <= conj.part(r); ++i) entries.emplace_back(i, Variable::x(r));
    auto case_of = [&, r](unsigned j) -> std::string {
      if (j < r) return "(i)";
      if (j == r) return "(ii)";
      return adjacent(j, r) ? "(iii)" : "(iv)";
    };
    check(id + "/f" + std::to_string(r), threshold_vector(n, entries), fr, case_of);
  }

  // g blocks: maximal runs a..a+b-1 of equal conjugate parts with s < a <= n-1.
  unsigned a = s + 1;
  while (a + 1 <= n) {
    unsigned b = 1;
    while (a + b + 1 <= n && conj.part(a + b) == conj.part(a)) ++b;
    const unsigned top = a + b;  // vertex a+b
    const unsigned height = conj.part(a);  // neighbors of vertices a+1..a+b are [height]
    const Polynomial ga = threshold_g(lambda, a);
    const std::string block = id + "/g" + std::to_string(a) + (b > 1 ? "-" + std::to_string(a + b - 1) : "");

    for (unsigned r = a + 1; r < a + b; ++r) {
      if (!(threshold_g(lambda, r) == ga)) {
        out.push_back(refuted(block + "/equal-g", threshold_g(lambda, r) - ga, "g_r differs inside the block"));
      }
    }
    auto case_of = [&, a, top, height](unsigned k) -> std::string {
      if (k >= 2 && k <= height) return "(i)";
      if (k >= height + 1 && k <= a) return "(ii)";
      if (k == top) return "(iv)";
      if (k >= a + 1 && k <= n - 1) return "(iii)";
      return "outside (i)-(iv)";
    };
    for (unsigned j = a + 1; j < top; ++j) {
      std::vector<std::pair<unsigned, Polynomial>> entries{{j, Variable::y(top)}, {top, -Polynomial(Variable::y(j))}};
      check(block + "/in-block-" + std::to_string(j), threshold_vector(n, entries), ga, case_of);
    }
    std::vector<std::pair<unsigned, Polynomial>> entries;
    const unsigned lo = 1 + (bound == GBlockBound::ConjugatePart ? height : lambda.part(a));
    for (unsigned i = lo; i <= a; ++i) {
      entries.emplace_back(i, Variable::y(top));
      entries.emplace_back(top, -Polynomial(Variable::y(i)));
    }
    check(block + "/extra", threshold_vector(n, entries), ga, case_of);
    a += b;
  }
  return out;
}

}  // namespace spantree
