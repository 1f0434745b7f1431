#include "sic/random.hpp"

#include <algorithm>
#include <numeric>

namespace sic {

// Modulo reduction keeps sequences identical across standard libraries; the
// bias is irrelevant at these ranges.
int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

bool coin(Rng& rng, int num, int den) { return uniform_int(rng, 0, den - 1) < num; }

Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, num, den)) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

VertexList random_permutation(Rng& rng, int n) {
  VertexList perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  return perm;
}

Graph shuffle_labels(Rng& rng, const Graph& g) { return relabel(g, random_permutation(rng, g.order())); }

}  // namespace sic
