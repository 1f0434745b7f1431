#pragma once

#include <cstdint>
#include <random>

#include "sic/graph.hpp"

namespace sic {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// True with probability num/den.
bool coin(Rng& rng, int num, int den);

/// G(n, p) with p = num/den.
Graph random_graph(Rng& rng, int n, int num = 1, int den = 2);

/// Uniform permutation of 0..n-1 (Fisher-Yates on uniform_int).
VertexList random_permutation(Rng& rng, int n);

/// Random relabeling of g.
Graph shuffle_labels(Rng& rng, const Graph& g);

}  // namespace sic
