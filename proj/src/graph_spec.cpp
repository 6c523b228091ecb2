#include "spantree/graph_spec.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "spantree/errors.hpp"

namespace spantree {

namespace {

constexpr unsigned kMaxVertices = 4096;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  unsigned number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad graph spec '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_spec(std::string_view spec) {
  Cursor in(spec);
  if (in.accept('T')) {
    in.expect(':');
    std::vector<unsigned> parts{in.number()};
    while (in.accept(',')) parts.push_back(in.number());
    if (!in.done()) in.fail("trailing characters");
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i] > parts[i - 1]) throw NotThresholdSequence("degree sequence must be weakly decreasing");
    }
    return threshold_graph(Partition(std::move(parts)));
  }
  if (in.accept('Q')) {
    const std::size_t at = in.pos();
    unsigned n = in.number();
    if (!in.done()) in.fail("trailing characters");
    if (n < 1 || n > 12) throw ParseError("hypercube dimension must be in [1, 12]", at);
    return hypercube(n);
  }

  std::vector<unsigned> dims;
  unsigned long vertices = 1;
  unsigned multiplicity = 1;
  do {
    in.expect('K');
    const std::size_t at = in.pos();
    unsigned n = in.number();
    if (n < 1) throw ParseError("complete graph needs at least one vertex", at);
    vertices *= n;
    if (vertices > kMaxVertices) throw ParseError("graph too large", at);
    dims.push_back(n);
    if (in.accept('(')) {
      if (dims.size() != 1) in.fail("multiplicity is only allowed on a single K_n");
      const std::size_t qat = in.pos();
      multiplicity = in.number();
      if (multiplicity < 1) throw ParseError("multiplicity must be >= 1", qat);
      in.expect(')');
      if (!in.done()) in.fail("multiplicity is only allowed on a single K_n");
    }
  } while (in.accept('x'));
  if (!in.done()) in.fail("trailing characters");

  if (dims.size() == 1) return multiplicity == 1 ? complete_graph(dims[0]) : multigraph_kn(dims[0], multiplicity);
  std::vector<Graph> factors;
  for (unsigned n : dims) factors.push_back(complete_graph(n));
  return cartesian_product(factors);
}

}  // namespace spantree
