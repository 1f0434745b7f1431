#include "sic/weight.hpp"

#include <algorithm>
#include <sstream>

#include "sic/error.hpp"

namespace sic {

Weight parse_weight(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty weight");
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      Weight w(s, 10);
      if (w.get_den() == 0) throw ParseError("zero denominator in weight: " + raw);
      w.canonicalize();
      return w;
    }
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed weight: " + raw);
    mpz_class num(whole + frac, 10), den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Weight w(num, den);
    w.canonicalize();
    return neg ? Weight(-w) : w;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed weight: " + raw);
  }
}

std::string format_weight(const Weight& w) { return w.get_str(); }

WeightedGraph::WeightedGraph(Graph g, std::vector<Weight> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.order())
    throw PreconditionError("weight vector has " + std::to_string(weights.size()) +
                            " entries for " + std::to_string(graph.order()) + " vertices");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].get_den() == 0) throw PreconditionError("zero denominator at vertex " + std::to_string(i));
    weights[i].canonicalize();
    if (weights[i] < 0) throw PreconditionError("negative weight at vertex " + std::to_string(i));
  }
}

WeightedGraph WeightedGraph::unit(Graph g) {
  std::vector<Weight> w(g.order(), Weight(1));
  return WeightedGraph(std::move(g), std::move(w));
}

Weight WeightedGraph::weight_of(const VertexList& vs) const {
  Weight total = 0;
  for (int v : vs) total += weights.at(v);
  return total;
}

Score Score::of(const WeightedGraph& wg, VertexList set) {
  std::sort(set.begin(), set.end());
  Score s;
  s.weight = wg.weight_of(set);
  s.set = std::move(set);
  return s;
}

bool better(const Score& a, const Score& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
  // Equal sizes: the first differing position holds the lowest differing vertex.
  return a.set < b.set;
}

Score combine(const Score& a, const Score& b) {
  Score out;
  out.weight = a.weight + b.weight;
  std::merge(a.set.begin(), a.set.end(), b.set.begin(), b.set.end(), std::back_inserter(out.set));
  return out;
}

std::vector<Weight> parse_weights(const std::string& text) {
  std::vector<Weight> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_weight(line));
  }
  return out;
}

}  // namespace sic
