#pragma once
// Deterministic verification harness. Runs the library's reference scenarios
// plus seeded randomized property checks and returns an ordered list of
// PASS / FAIL / SKIPPED results. For a fixed configuration the output is
// byte-identical across runs.

#include <mink/edge_polytope.hpp>
#include <mink/graph.hpp>
#include <mink/polytope.hpp>
#include <mink/semigroup.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mink {

struct RunConfig {
  int max_k = 3;                  // dilation depth for the decomposition checks
  std::uint64_t random_seed = 0;  // seed for all randomized checks
  int sample_count = 20;          // instances per randomized check
  int dim_cap = 8;                // ambient-dimension ceiling for random instances
};

struct PaperCheck {
  std::string id;
  std::string status;  // "PASS" | "FAIL" | "SKIPPED"
  std::string reason;  // nonempty only when status == "SKIPPED"
  std::string details;
};

// All checks, in a fixed order; never throws (a check that raises an internal
// error is reported as FAIL with the message in details).
std::vector<PaperCheck> verify_paper(const RunConfig& config);

// Deterministic pseudo-random stream (fixed engine + hand-rolled rejection
// sampling, so values are identical across platforms and standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // uniform integer in [lo, hi], inclusive; pre: lo <= hi
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

// ---- seeded samplers (shared by the harness, tests, and acceptance gate) ----

// generators drawn uniformly from {0..coord_cap}^ambient_dim
LatticePolytope random_polytope(Rng& rng, int ambient_dim, int coord_cap, int generator_count);

// random spanning tree plus `extra_edges` random additional edges; pre: n >= 1
Graph random_connected_graph(Rng& rng, int n, int extra_edges);

// connected graph satisfying the common-vertex condition (rejection-sampled)
Graph random_cvc_graph(Rng& rng, int n);

// connected subgraph on the same vertex set: random spanning tree of g plus a
// random subset of g's remaining edges; pre: g connected
Graph random_spanning_connected_subgraph(Rng& rng, const Graph& g);

// one representative per isomorphism class of connected graphs on exactly
// 1..max_n vertices, in deterministic order; pre: max_n <= 7
std::vector<Graph> connected_graph_reps(int max_n);

// ---- frozen reference scenarios ---------------------------------------------

// conv{(0,0,0), (1,0,0), (0,1,0)}
LatticePolytope unit_triangle_3d();
// conv{(0,0,0), (1,1,3)}
LatticePolytope steep_segment_3d();
// triangles spanned by the indicator vectors of two disjoint perfect
// matchings of six vertices: {12, 34, 56} and {16, 23, 45}
LatticePolytope matching_simplex_a();
LatticePolytope matching_simplex_b();
// reconstructed spanning trees through those matchings: {12, 34, 56} plus
// {13, 15}, and {16, 23, 45} plus {13, 15} — the lexicographically first
// minimal connected augmentation for which (2,2,1,1,1,1) still has no 2-part
// split over the summed edge polytopes
Graph matching_tree_a();
Graph matching_tree_b();
// triangles {1,2,3} and {4,5,6} joined by the bridge {3,4}
Graph bridged_triangles();
// subgraph {13, 23, 45, 46} of the above
Graph bridged_triangles_cover();
// pentagons (1,2,3,4,5) and (5,6,7,8,9) sharing vertex 5, plus pendant {9,10}
Graph double_pentagon_tail();
// subgraph {15, 23, 45, 67, 89} of the above
Graph double_pentagon_tail_cover();
// subgraph {12, 34, {9,10}} of the above
Graph double_pentagon_tail_matching();

}  // namespace mink
