#pragma once
// Edge polytopes of graphs and the constructive decomposition pipeline for
// Minkowski sums P_{G1} + P_{G2} with G2 a subgraph of a common-vertex graph
// G1: a cycle-cancellation rewriting of fractional edge weightings into
// integer ones that never loses weight on a tracked edge set, and the full
// k-fold decomposition built on top of it.

#include <mink/graph.hpp>
#include <mink/polytope.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace mink {

// indicator vector e_i + e_j of an edge on d vertices (1-indexed endpoints)
LatticePoint rho(const std::pair<int, int>& edge, int d);

// convex hull of { rho(e) : e in E(G) }; pre: G has at least one edge
LatticePolytope edge_polytope(const Graph& g);

// dimension of the edge polytope of a connected graph: d-2 if bipartite,
// d-1 otherwise
int dim_formula(const Graph& g);

// dimension of the Minkowski sum of the edge polytopes of connected graphs on
// one vertex set: d-2 if the union graph is bipartite, d-1 otherwise
int dim_formula_sum(const std::vector<Graph>& gs);

// a rational weighting of some edges of a graph
struct EdgeWeighting {
  Graph graph;
  std::vector<std::pair<std::pair<int, int>, BigRational>> weights;
};

struct RewriteResult {
  // integer weight per support edge (zeros kept), sorted by edge
  std::vector<std::pair<std::pair<int, int>, BigInt>> integer_weights;
  BigInt tracked_sum;  // total integer weight landing on the tracked edges
};

// Rewrites a nonnegative rational edge weighting with integral weighted sum
// sum_e w_e rho(e) into nonnegative integer weights with the same weighted
// sum, such that the total on tracked_edges does not drop below its input
// total. Repeatedly cancels along an even cycle of the fractional support, or
// along two odd cycles through their unique common vertex once no even cycle
// remains; the cancellation direction is chosen to favor the tracked side.
// pre: graph connected, any two of its odd cycles share a vertex, weights
// supported on distinct graph edges, tracked_edges a subset of the support.
RewriteResult lemma35_rewrite(const EdgeWeighting& weighting,
                              const std::vector<std::pair<int, int>>& tracked_edges);

// Decomposes alpha in k(P_{G1} + P_{G2}) into k lattice points of
// P_{G1} + P_{G2}, each of the form rho(e) + rho(e') with e in G1, e' in G2.
// Returns nullopt iff alpha is not in the k-fold dilate. pre: g1 connected
// with at least one edge, any two odd cycles of g1 share a vertex, g2 a
// subgraph of g1 with at least one edge, k >= 1.
std::optional<std::vector<LatticePoint>> theorem34_decompose(const Graph& g1, const Graph& g2,
                                                             const LatticePoint& alpha, int k);

}  // namespace mink
