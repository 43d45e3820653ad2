#include <mink/graph.hpp>

#include <algorithm>
#include <stdexcept>

namespace mink {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("Graph: loop edge");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw std::invalid_argument("Graph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool is_connected(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(g.n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(g.n + 1, -1);
  for (int s = 1; s <= g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;  // component's smallest vertex goes first side
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 1; v <= g.n; ++v) (color[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

namespace {

// chordless cycle enumeration: grow paths from the cycle's minimal vertex s,
// keeping the invariant that the only adjacencies among path vertices are the
// consecutive ones (and s-path[1]); a neighbor of the tip adjacent to s closes
// a chordless cycle. Reflections are killed by requiring path[1] < closing
// vertex.
struct CycleSearch {
  const Graph& g;
  std::vector<std::vector<int>> adj;
  std::vector<char> on_path;
  std::vector<int> path;
  std::vector<Cycle>& out;
  bool odd_only;

  CycleSearch(const Graph& g_, std::vector<Cycle>& out_, bool odd_only_)
      : g(g_), adj(g_.adjacency()), on_path(g_.n + 1, 0), out(out_), odd_only(odd_only_) {}

  void run() {
    for (int s = 1; s <= g.n; ++s) {
      path = {s};
      on_path.assign(g.n + 1, 0);
      on_path[s] = 1;
      for (int u : adj[s]) {
        if (u < s) continue;
        path.push_back(u);
        on_path[u] = 1;
        extend();
        on_path[u] = 0;
        path.pop_back();
      }
    }
  }

  void extend() {
    int s = path[0], last = path.back();
    for (int w : adj[last]) {
      if (w < s || on_path[w]) continue;
      bool chord = false;
      for (size_t t = 1; t + 1 < path.size(); ++t)
        if (g.has_edge(path[t], w)) { chord = true; break; }
      if (chord) continue;
      if (g.has_edge(s, w)) {
        // closing edge; path.size() >= 2 so the cycle has length >= 3
        if (path[1] < w && (!odd_only || (path.size() + 1) % 2 == 1)) {
          Cycle c;
          c.vertices = path;
          c.vertices.push_back(w);
          out.push_back(std::move(c));
        }
        continue;  // any extension through w would leave a chord to s
      }
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
    }
  }
};

std::vector<char> vertex_mask(const Cycle& c, int n) {
  std::vector<char> m(n + 1, 0);
  for (int v : c.vertices) m[v] = 1;
  return m;
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

}  // namespace

std::vector<Cycle> induced_odd_cycles(const Graph& g) {
  std::vector<Cycle> out;
  CycleSearch(g, out, /*odd_only=*/true).run();
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
  return out;
}

bool odd_cycle_condition(const Graph& g) {
  require_connected(g, "odd_cycle_condition");
  auto cycles = induced_odd_cycles(g);
  for (size_t a = 0; a < cycles.size(); ++a) {
    auto ma = vertex_mask(cycles[a], g.n);
    for (size_t b = a + 1; b < cycles.size(); ++b) {
      auto mb = vertex_mask(cycles[b], g.n);
      bool disjoint = true;
      for (int v = 1; v <= g.n && disjoint; ++v)
        if (ma[v] && mb[v]) disjoint = false;
      if (!disjoint) continue;
      bool joined = false;
      for (auto [i, j] : g.edges)
        if ((ma[i] && mb[j]) || (ma[j] && mb[i])) { joined = true; break; }
      if (!joined) return false;
    }
  }
  return true;
}

bool common_vertex_condition(const Graph& g) {
  require_connected(g, "common_vertex_condition");
  auto cycles = induced_odd_cycles(g);
  for (size_t a = 0; a < cycles.size(); ++a) {
    auto ma = vertex_mask(cycles[a], g.n);
    for (size_t b = a + 1; b < cycles.size(); ++b) {
      bool shared = false;
      for (int v : cycles[b].vertices)
        if (ma[v]) { shared = true; break; }
      if (!shared) return false;
    }
  }
  return true;
}

std::vector<Graph> two_connected_components(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> disc(g.n + 1, 0), low(g.n + 1, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> comps;
  int timer = 0;

  // iterative lowpoint DFS with an edge stack
  struct Frame {
    int u, parent;
    size_t next = 0;
  };
  for (int root = 1; root <= g.n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.u].size()) {
        int v = adj[f.u][f.next++];
        if (v == f.parent) continue;
        if (!disc[v]) {
          estack.emplace_back(f.u, v);
          disc[v] = low[v] = ++timer;
          stack.push_back({v, f.u});
        } else if (disc[v] < disc[f.u]) {
          estack.emplace_back(f.u, v);
          if (disc[v] < low[f.u]) low[f.u] = disc[v];
        }
      } else {
        int u = f.u, parent = f.parent;
        stack.pop_back();
        if (parent == 0) continue;
        if (low[u] < low[parent]) low[parent] = low[u];
        if (low[u] >= disc[parent]) {
          // pop one biconnected component ending at edge (parent, u)
          std::vector<std::pair<int, int>> comp;
          for (;;) {
            auto e = estack.back();
            estack.pop_back();
            comp.push_back(e);
            if ((e.first == parent && e.second == u) || (e.first == u && e.second == parent))
              break;
          }
          comps.push_back(std::move(comp));
        }
      }
    }
  }

  std::vector<Graph> out;
  out.reserve(comps.size());
  for (auto& comp : comps) out.emplace_back(g.n, std::move(comp));
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.edges < b.edges; });
  return out;
}

Graph graph_sum(const std::vector<Graph>& gs) {
  if (gs.empty()) throw std::invalid_argument("graph_sum: empty list");
  int n = gs[0].n;
  std::vector<std::pair<int, int>> all;
  for (const auto& g : gs) {
    if (g.n != n) throw std::invalid_argument("graph_sum: vertex count mismatch");
    all.insert(all.end(), g.edges.begin(), g.edges.end());
  }
  return Graph(n, std::move(all));
}

bool is_subgraph(const Graph& h, const Graph& g) {
  if (h.n != g.n) throw std::invalid_argument("is_subgraph: vertex count mismatch");
  for (auto [i, j] : h.edges)
    if (!g.has_edge(i, j)) return false;
  return true;
}

}  // namespace mink
