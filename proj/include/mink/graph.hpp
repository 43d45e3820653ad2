#pragma once
// Finite simple graphs on vertices 1..n, with the cycle machinery behind the
// edge-polytope results: induced (chordless) odd cycle enumeration, the
// odd-cycle and common-vertex conditions, and biconnected components.

#include <optional>
#include <utility>
#include <vector>

namespace mink {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // each (i, j) with i < j; sorted, deduped

  Graph() = default;
  // validates 1 <= i, j <= n, i != j; normalizes orientation and order
  Graph(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int i, int j) const;
  // 1-indexed sorted neighbor lists; index 0 unused
  std::vector<std::vector<int>> adjacency() const;
};

// cycle stored by its canonical traversal: minimal vertex first, then the
// smaller of its two cycle-neighbors
struct Cycle {
  std::vector<int> vertices;
  bool odd() const { return vertices.size() % 2 == 1; }
};

bool is_connected(const Graph& g);

// 2-coloring (absent iff an odd cycle exists). Each component's smallest
// vertex goes to the first side; sides returned sorted.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// all chordless cycles of odd length, sorted by canonical vertex sequence.
// Any odd cycle contains a chordless odd cycle on a subset of its vertices,
// so the two conditions below only need these.
std::vector<Cycle> induced_odd_cycles(const Graph& g);

// every two vertex-disjoint odd cycles are joined by an edge (pre: connected)
bool odd_cycle_condition(const Graph& g);

// every two odd cycles share a vertex (pre: connected); implies the above
bool common_vertex_condition(const Graph& g);

// maximal 2-connected subgraphs (single edges count); deterministic order
std::vector<Graph> two_connected_components(const Graph& g);

// union of edge sets; all graphs must share the same vertex count
Graph graph_sum(const std::vector<Graph>& gs);

bool is_subgraph(const Graph& h, const Graph& g);  // pre: same vertex count

}  // namespace mink
