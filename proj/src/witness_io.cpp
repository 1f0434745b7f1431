#include "sic/witness_io.hpp"

#include <sstream>

#include "sic/error.hpp"
#include "sic/graph_io.hpp"

namespace sic {

std::string serialize_witness(const SiWitness& w) {
  std::ostringstream out;
  out << "sic-witness\nhost " << serialize_graph(w.host) << "maps " << w.maps.size() << '\n';
  for (const auto& m : w.maps) {
    for (std::size_t i = 0; i < m.image.size(); ++i) out << (i ? " " : "") << m.image[i];
    out << '\n';
  }
  out << "claimed " << serialize_graph(w.claimed);
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  void expect(const std::string& word) {
    std::string got;
    if (!(in_ >> got) || got != word) throw ParseError("witness: expected \"" + word + "\"");
  }

  long long number(const char* what) {
    long long x;
    if (!(in_ >> x)) throw ParseError(std::string("witness: expected ") + what);
    return x;
  }

  Graph graph() {
    long long n = number("vertex count"), m = number("edge count");
    if (n < 0 || m < 0) throw ParseError("witness: negative graph size");
    std::vector<Edge> es;
    for (long long i = 0; i < m; ++i) {
      long long u = number("edge endpoint"), v = number("edge endpoint");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("witness: edge endpoint out of range");
      es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
      return Graph(static_cast<int>(n), std::move(es));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("witness: ") + e.what());
    }
  }

  void finish() {
    std::string rest;
    if (in_ >> rest) throw ParseError("witness: trailing content");
  }

 private:
  std::istringstream in_;
};

}  // namespace

SiWitness parse_witness(const std::string& text) {
  Reader r(text);
  r.expect("sic-witness");
  r.expect("host");
  SiWitness w;
  w.host = r.graph();
  r.expect("maps");
  long long k = r.number("map count");
  if (k < 1) throw ParseError("witness: needs at least one map");
  for (long long j = 0; j < k; ++j) {
    VertexMap m;
    for (int i = 0; i < w.host.order(); ++i) {
      long long x = r.number("map label");
      if (x < 0 || x > 2000000000) throw ParseError("witness: label out of range");
      m.image.push_back(static_cast<int>(x));
    }
    w.maps.push_back(std::move(m));
  }
  r.expect("claimed");
  w.claimed = r.graph();
  r.finish();
  return w;
}

}  // namespace sic
