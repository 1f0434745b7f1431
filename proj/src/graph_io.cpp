#include "sic/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "sic/error.hpp"

namespace sic {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in(line);
  long long x;
  while (in >> x) out.push_back(x);
  return in.eof() && !out.empty();
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  std::vector<long long> nums;
  if (!parse_ints(lines[0], nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
    throw ParseError("malformed header: expected \"n m\"");
  const long long n = nums[0], m = nums[1];
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> es;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!parse_ints(lines[i], nums) || nums.size() != 2)
      throw ParseError("line " + std::to_string(i + 1) + ": expected \"u v\"");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n)
      throw ParseError("line " + std::to_string(i + 1) + ": vertex index out of range");
    es.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  try {
    return Graph(static_cast<int>(n), std::move(es));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph6(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  std::size_t pos = 0;
  long long n;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError("unsupported graph6 order encoding");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  }
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != need)
    throw ParseError("graph6 length does not match order " + std::to_string(n));
  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (; k < need * 6; ++k)
    if (((s[pos + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding");
  return Graph(static_cast<int>(n), std::move(es));
}

Graph parse_graph(const std::string& text) {
  auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  std::vector<long long> nums;
  if (parse_ints(lines[0], nums)) return parse_edge_list(text);
  if (lines.size() != 1) throw ParseError("graph6 input must be a single line");
  return parse_graph6(lines[0]);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    s += static_cast<char>(126);
    for (int i = 2; i >= 0; --i) s += static_cast<char>(((n >> (6 * i)) & 63) + 63);
  } else {
    throw GuardError("graph6 output supports at most 258047 vertices");
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        s += static_cast<char>(acc + 63);
        acc = used = 0;
      }
    }
  if (used > 0) s += static_cast<char>((acc << (6 - used)) + 63);
  return s;
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return to_graph6(g) + "\n";
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat format_for_path(const std::string& path) {
  const std::string ext = ".g6";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return GraphFormat::Graph6;
  return GraphFormat::EdgeList;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Graph read_graph_file(const std::string& path) {
  auto text = read_text_file(path);
  return format_for_path(path) == GraphFormat::Graph6 ? parse_graph6(text) : parse_graph(text);
}

void write_graph_file(const std::string& path, const Graph& g) {
  write_text_file(path, serialize_graph(g, format_for_path(path)));
}

}  // namespace sic
