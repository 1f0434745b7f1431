#pragma once

#include <string>
#include <vector>

#include "sic/graph.hpp"

namespace sic {

// Labeling conventions (stable; witnesses refer to them):
//  complete(n)        0..n-1
//  biclique(p,q)      part A = 0..p-1, part B = p..p+q-1
//  path(n)            0-1-...-(n-1)
//  cycle(n)           path plus edge (n-1,0)
//  spider(a,b,c)      center 0; leg i listed outward from the center, legs
//                     numbered consecutively: 1..a, a+1..a+b, a+b+1..a+b+c
//  spiders(t,a,b,c)   t copies of spider(a,b,c), blockwise
//  x_graph(p)         biclique(p,p) plus apex 2p adjacent to 0 and 1
//  y_graph(p)         biclique(p,p) plus apex 2p adjacent to 0 and p
//  h_graph(k)         k = 0: star K_{1,4} with center 0. k >= 1: paths 0-1-2
//                     and 3-4-5 with middles 1 and 4 joined by 1-6-...-(k+4)-4
//  paw                triangle 0,1,2 plus pendant 3 on 0
//  diamond            edges 01 02 03 12 13 (0,1 of degree 3)

Graph complete_graph(int n);
Graph biclique(int p, int q);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph spider(int a, int b, int c);
Graph spiders(int t, int a, int b, int c);
Graph tripod_forest(int t);  // tS_{t,t,t}
Graph x_graph(int p);
Graph y_graph(int p);
Graph h_graph(int k);
Graph paw();
Graph diamond();
Graph edgeless(int n);
Graph petersen();
Graph grid(int rows, int cols);

/// Dispatch by family name: K, Kpq, P, C, spider, spiders, tripod_forest, Xp,
/// Yp, Hk, paw, diamond, edgeless, petersen, grid.
Graph gen_named(const std::string& family, const std::vector<int>& params);

/// Family names accepted by gen_named.
std::vector<std::string> named_families();

}  // namespace sic
