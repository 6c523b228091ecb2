#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spantree/errors.hpp"
#include "spantree/formulas.hpp"
#include "spantree/graph_spec.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/treebrute.hpp"
#include "spantree/verify.hpp"

namespace spantree::cli {

namespace {

struct Options {
  std::string spec;
  std::string claim;
  std::string stat;
  std::string weights;
  std::vector<unsigned> reduce;
  std::vector<unsigned> dims;
  std::vector<unsigned> lambda;
  std::vector<unsigned> subset;
  unsigned n = 0;
  unsigned direction = 0;
  std::uint64_t cap = kDefaultTreeCap;
  bool json = false;
  bool brute = false;
  bool timing = false;
  bool show_quotient = false;
  std::string out_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

WeightScheme scheme_for(TreeStatistic s) {
  switch (s) {
    case TreeStatistic::EdgeProduct:
      return WeightScheme::Generic;
    case TreeStatistic::Degree:
      return WeightScheme::CayleyPrufer;
    case TreeStatistic::Direction:
      return WeightScheme::Direction;
    case TreeStatistic::DirDecoupled:
      return WeightScheme::Decoupled;
    case TreeStatistic::CubeSubstituted:
      return WeightScheme::CubeLaurent;
    case TreeStatistic::InOutDegree:
      return WeightScheme::ThresholdInOut;
  }
  return WeightScheme::Generic;
}

std::vector<TreeStatistic> default_statistics(const Graph& g) {
  switch (g.family()) {
    case GraphFamily::Product:
      return {TreeStatistic::Direction, TreeStatistic::DirDecoupled};
    case GraphFamily::Hypercube:
      return {TreeStatistic::CubeSubstituted};
    case GraphFamily::Threshold:
      return {TreeStatistic::InOutDegree};
    case GraphFamily::Complete:
    case GraphFamily::Multigraph:
      return {TreeStatistic::Degree};
  }
  return {TreeStatistic::Degree};
}

TreeStatistic statistic_named(const std::string& name) {
  auto s = parse_tree_statistic(name);
  if (!s) throw UsageError("unknown statistic '" + name + "' (edges, degree, direction, decoupled, cube, inout)");
  return *s;
}

WeightScheme scheme_named(const std::string& name) {
  auto w = parse_weight_scheme(name);
  if (!w) {
    throw UsageError("unknown weight scheme '" + name +
                     "' (generic, cayley-prufer, direction, decoupled, cube, inout)");
  }
  return *w;
}

std::vector<unsigned> dims_of(const Graph& g) {
  switch (g.family()) {
    case GraphFamily::Product:
    case GraphFamily::Hypercube:
      return g.dims();
    case GraphFamily::Complete:
    case GraphFamily::Multigraph:
      return {static_cast<unsigned>(g.n_vertices())};
    case GraphFamily::Threshold:
      break;
  }
  throw UsageError("spectrum is available for complete graphs, multigraphs, products and hypercubes");
}

std::pair<std::size_t, std::size_t> reduction(const Options& o, const Graph& g) {
  if (o.reduce.empty()) return {g.n_vertices() - 1, g.n_vertices() - 1};
  if (o.reduce.size() != 2) throw UsageError("--reduce takes two 1-based indices r,s");
  if (o.reduce[0] < 1 || o.reduce[1] < 1 || o.reduce[0] > g.n_vertices() || o.reduce[1] > g.n_vertices()) {
    throw UsageError("--reduce indices must lie in [1, " + std::to_string(g.n_vertices()) + "]");
  }
  return {o.reduce[0] - 1, o.reduce[1] - 1};
}

Partition partition_from(const std::vector<unsigned>& parts) {
  if (parts.empty()) throw UsageError("--lambda is required");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw NotThresholdSequence("degree sequence must be weakly decreasing");
  }
  return Partition(parts);
}

void require(bool present, const std::string& flag, const std::string& claim) {
  if (!present) throw UsageError("claim '" + claim + "' needs " + flag);
}

std::string verdict_line(const Verdict& v, bool timing) {
  std::string line = to_string(v.status) + " " + v.claim_id;
  if (!v.note.empty()) line += ": " + v.note;
  if (v.witness) line += " [witness " + v.witness->to_string() + "]";
  if (timing) {
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << v.elapsed_ms;
    line += " (" + ms.str() + " ms)";
  }
  return line;
}

// Elapsed times only appear on request so that repeated runs are byte-identical.
nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts, bool timing) {
  nlohmann::json arr = report_json(verdicts);
  if (!timing) {
    for (auto& v : arr) v.erase("elapsed_ms");
  }
  return arr;
}

int emit_verdicts(const std::vector<Verdict>& verdicts, const Options& o, std::ostream& out) {
  if (o.json) {
    out << verdicts_json(verdicts, o.timing).dump(2) << "\n";
  } else {
    for (const Verdict& v : verdicts) out << verdict_line(v, o.timing) << "\n";
  }
  return all_verified(verdicts) ? kOk : kRefuted;
}

int do_count(const Options& o, std::ostream& out) {
  const Graph g = parse_spec(o.spec);
  Integer count = 0;
  if (!g.is_connected()) {
    count = 0;
  } else if (o.brute) {
    std::uint64_t trees = 0;
    for_each_spanning_tree(g, [&](const SpanningTree&) { ++trees; }, o.cap);
    count = Integer(std::to_string(trees));
  } else {
    count = predicted_tree_count(g);
  }
  if (o.json) {
    out << nlohmann::json{{"graph", o.spec}, {"count", count.get_str()}}.dump(2) << "\n";
  } else {
    out << count.get_str() << "\n";
  }
  return kOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  const Graph g = parse_spec(o.spec);
  if (o.brute && !o.weights.empty()) throw UsageError("--weights selects the determinant route; drop --brute");
  if (o.brute && !o.reduce.empty()) throw UsageError("--reduce only applies to the determinant route");

  std::vector<std::pair<std::string, Polynomial>> results;
  if (!o.weights.empty()) {
    const WeightScheme w = scheme_named(o.weights);
    auto [row, col] = reduction(o, g);
    results.emplace_back(std::string(to_string(w)), tree_enumerator_det(g, w, row, col));
  } else {
    std::vector<TreeStatistic> stats = o.stat.empty() ? default_statistics(g) : std::vector{statistic_named(o.stat)};
    for (TreeStatistic s : stats) {
      if (!applicable(s, g)) {
        throw SchemeMismatch("statistic '" + std::string(to_string(s)) + "' does not apply to " + g.describe());
      }
      Polynomial p;
      if (!g.is_connected()) {
        p = 0;
      } else if (o.brute) {
        p = enumerate_sum(g, s, o.cap);
      } else {
        auto [row, col] = reduction(o, g);
        p = tree_enumerator_det(g, scheme_for(s), row, col);
      }
      results.emplace_back(std::string(to_string(s)), std::move(p));
    }
  }

  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [name, p] : results) arr.push_back({{"statistic", name}, {"polynomial", p.to_json()}});
    out << nlohmann::json{{"graph", o.spec}, {"route", o.brute ? "brute-force" : "determinant"}, {"enumerators", arr}}
               .dump(2)
        << "\n";
  } else if (results.size() == 1) {
    out << results.front().second.to_string() << "\n";
  } else {
    for (const auto& [name, p] : results) out << name << ": " << p.to_string() << "\n";
  }
  return kOk;
}

int do_spectrum(const Options& o, std::ostream& out) {
  const Graph g = parse_spec(o.spec);
  const std::vector<unsigned> dims = dims_of(g);
  std::vector<Polynomial> qs;
  for (std::size_t i = 1; i <= dims.size(); ++i) qs.emplace_back(Variable::q(static_cast<unsigned>(i)));
  std::vector<Polynomial> ones(dims.size(), Polynomial(1));
  if (g.family() == GraphFamily::Multigraph) {
    // Every edge carries the same multiplicity.
    const Integer mult(g.edges().front().multiplicity);
    qs.front() = qs.front().times(mult);
    ones.front() = Polynomial(mult);
  }
  const Spectrum s = product_spectrum(dims, qs);
  const Polynomial count = count_from_spectrum(product_spectrum(dims, ones), g.n_vertices());
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [value, mult] : s.pairs) arr.push_back({{"eigenvalue", value.to_json()}, {"multiplicity", mult}});
    out << nlohmann::json{{"graph", o.spec}, {"spectrum", arr}, {"count", count.to_string()}}.dump(2) << "\n";
  } else {
    for (const auto& [value, mult] : s.pairs) out << value.to_string() << " (multiplicity " << mult << ")\n";
    out << "count at q=1: " << count.to_string() << "\n";
  }
  return kOk;
}

std::vector<unsigned> all_dims_directions(const std::vector<unsigned>& dims) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] >= 2) out.push_back(static_cast<unsigned>(i + 1));
  }
  return out;
}

int do_verify(const Options& o, std::ostream& out) {
  const std::string& c = o.claim;
  const Route route = o.brute ? Route::BruteForce : Route::Determinant;
  std::vector<Verdict> verdicts;
  if (c == "cayley") {
    require(o.n >= 2, "--n (>= 2)", c);
    verdicts = verify_cayley_prufer(o.n);
  } else if (c == "directions") {
    require(!o.dims.empty(), "--dims", c);
    verdicts = verify_directions(o.dims);
  } else if (c == "divisibility") {
    require(!o.dims.empty(), "--dims", c);
    verdicts = verify_divisibility(o.dims).verdicts;
  } else if (c == "cube") {
    require(o.n >= 1, "--n", c);
    verdicts.push_back(verify_cube_theorem(o.n, route));
  } else if (c == "threshold") {
    verdicts = verify_threshold_theorem(partition_from(o.lambda), route);
  } else if (c == "cube-nullvector") {
    require(o.n >= 2, "--n (>= 2)", c);
    if (!o.subset.empty()) {
      verdicts.push_back(verify_cube_nullvector(o.n, o.subset));
    } else {
      for (unsigned long mask = 1; mask < (1UL << o.n); ++mask) {
        if (__builtin_popcountl(mask) < 2) continue;
        std::vector<unsigned> a;
        for (unsigned i = 1; i <= o.n; ++i) {
          if (mask & (1UL << (i - 1))) a.push_back(i);
        }
        verdicts.push_back(verify_cube_nullvector(o.n, a));
      }
    }
  } else if (c == "decoupled-nullvector") {
    require(!o.dims.empty(), "--dims", c);
    std::vector<unsigned> dirs = o.direction ? std::vector<unsigned>{o.direction} : all_dims_directions(o.dims);
    for (unsigned i : dirs) verdicts.push_back(verify_decoupled_nullvectors(o.dims, i));
  } else if (c == "threshold-nullvector") {
    verdicts = verify_threshold_nullvectors(partition_from(o.lambda));
  } else if (c == "oracle") {
    require(!o.spec.empty(), "a graph spec", c);
    const Graph g = parse_spec(o.spec);
    std::vector<TreeStatistic> stats = o.stat.empty() ? default_statistics(g) : std::vector{statistic_named(o.stat)};
    for (TreeStatistic s : stats) {
      verdicts.push_back(
          verify_oracle(g, scheme_for(s), s, "oracle/" + o.spec + "/" + std::string(to_string(s)), o.cap));
    }
  } else {
    throw UsageError("unknown claim '" + c +
                     "' (cayley, directions, divisibility, cube, threshold, cube-nullvector, "
                     "decoupled-nullvector, threshold-nullvector, oracle)");
  }
  return emit_verdicts(verdicts, o, out);
}

int do_conjecture_scan(const Options& o, std::ostream& out) {
  if (o.dims.empty()) throw UsageError("conjecture-scan needs --dims");
  const ConjectureFinding f = conjecture_scan(o.dims);
  if (o.json) {
    nlohmann::json j{{"verdict", verdicts_json({f.verdict}, o.timing).front()}, {"terms", f.terms}};
    j["min_coefficient"] = f.min_coefficient ? nlohmann::json(f.min_coefficient->get_str()) : nlohmann::json(nullptr);
    if (o.show_quotient && f.quotient) j["quotient"] = f.quotient->to_json();
    out << j.dump(2) << "\n";
  } else {
    out << verdict_line(f.verdict, o.timing) << "\n";
    if (o.show_quotient && f.quotient) out << "quotient: " << f.quotient->to_string() << "\n";
    out << "note: coefficients of extreme q-monomials of the quotient are not examined\n";
  }
  return f.verdict.status == Status::Refuted ? kRefuted : kOk;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Emit JSON");
  cmd->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spanning tree enumerators of complete, product, hypercube and threshold graphs", "spantree"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Number of spanning trees");
  count->add_option("graph", o.spec, "Graph spec: K4, K3xK4, Q3, K3(2), T:3,1,1,1")->required();
  count->add_flag("--brute", o.brute, "Count by explicit enumeration");
  count->add_option("--cap", o.cap, "Refuse enumerations with more trees than this");
  add_output_flags(count, o);

  auto* enumerate = app.add_subcommand("enumerate", "Spanning tree enumerator polynomial");
  enumerate->add_option("graph", o.spec, "Graph spec")->required();
  auto* stat = enumerate->add_option("--stat", o.stat, "Tree statistic: edges, degree, direction, decoupled, cube, inout");
  enumerate->add_option("--weights", o.weights, "Determinant with an explicit weight scheme")->excludes(stat);
  enumerate->add_flag("--brute", o.brute, "Sum over explicitly enumerated trees");
  enumerate->add_option("--reduce", o.reduce, "Row and column removed (1-based), e.g. 1,1")->delimiter(',');
  enumerate->add_option("--cap", o.cap, "Refuse enumerations with more trees than this");
  add_output_flags(enumerate, o);

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of a product of complete graphs");
  spectrum->add_option("graph", o.spec, "Graph spec")->required();
  add_output_flags(spectrum, o);

  auto* verify = app.add_subcommand("verify", "Check an identity, divisibility claim or nullvector construction");
  verify->add_option("claim", o.claim,
                     "cayley, directions, divisibility, cube, threshold, cube-nullvector, "
                     "decoupled-nullvector, threshold-nullvector, oracle")
      ->required();
  verify->add_option("graph", o.spec, "Graph spec (oracle only)");
  verify->add_option("--n", o.n, "Size parameter");
  verify->add_option("--dims", o.dims, "Factor sizes, e.g. 2,3")->delimiter(',');
  verify->add_option("--lambda", o.lambda, "Threshold degree sequence, e.g. 3,3,2,2")->delimiter(',');
  verify->add_option("--subset", o.subset, "Subset A of [n] for cube-nullvector")->delimiter(',');
  verify->add_option("--direction", o.direction, "Direction i for decoupled-nullvector");
  verify->add_option("--stat", o.stat, "Statistic for the oracle claim");
  verify->add_option("--cap", o.cap, "Refuse enumerations with more trees than this");
  verify->add_flag("--brute", o.brute, "Use brute force instead of the determinant where both exist");
  verify->add_flag("--timing", o.timing, "Report elapsed milliseconds");
  add_output_flags(verify, o);

  auto* scan = app.add_subcommand("conjecture-scan", "Non-negativity scan of the divisibility quotient");
  scan->add_option("--dims", o.dims, "Factor sizes, e.g. 2,3")->delimiter(',')->required();
  scan->add_flag("--show-quotient", o.show_quotient, "Print the quotient");
  scan->add_flag("--timing", o.timing, "Report elapsed milliseconds");
  add_output_flags(scan, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "spantree: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*count) {
      code = do_count(o, buffer);
    } else if (*enumerate) {
      code = do_enumerate(o, buffer);
    } else if (*spectrum) {
      code = do_spectrum(o, buffer);
    } else if (*verify) {
      code = do_verify(o, buffer);
    } else {
      code = do_conjecture_scan(o, buffer);
    }
  } catch (const CapExceeded& e) {
    err << "spantree: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const UsageError& e) {
    err << "spantree: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "spantree: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "spantree: cannot write " << o.out_file << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace spantree::cli
