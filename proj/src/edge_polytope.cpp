#include <mink/edge_polytope.hpp>

#include <mink/lp.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mink {
namespace {

using Edge = std::pair<int, int>;

Edge norm_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("edge endpoints must differ");
  return i < j ? Edge{i, j} : Edge{j, i};
}

// edges of a cycle given as a vertex sequence (closing edge included);
// index t holds {seq[t], seq[t+1]}, so even indices are the odd positions
// of the walk and odd indices the even positions
std::vector<Edge> cycle_edges(const std::vector<int>& seq) {
  std::vector<Edge> out;
  out.reserve(seq.size());
  for (size_t t = 0; t < seq.size(); ++t)
    out.push_back(norm_edge(seq[t], seq[(t + 1) % seq.size()]));
  return out;
}

// vertex sequence of a component that is a single cycle: starts at the least
// vertex and walks toward its smaller neighbor
std::vector<int> cycle_sequence(const Graph& comp) {
  auto adj = comp.adjacency();
  int start = comp.edges.front().first;
  for (const auto& e : comp.edges) start = std::min({start, e.first, e.second});
  std::vector<int> seq{start};
  int prev = start;
  int cur = adj[static_cast<size_t>(start)].front();
  while (cur != start) {
    seq.push_back(cur);
    const auto& nb = adj[static_cast<size_t>(cur)];
    if (nb.size() != 2) throw std::logic_error("cycle_sequence: vertex degree is not 2");
    int nxt = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
  }
  return seq;
}

// the component is a single cycle iff its edge and vertex counts agree
bool is_single_cycle(const Graph& comp) {
  std::set<int> verts;
  for (const auto& e : comp.edges) {
    verts.insert(e.first);
    verts.insert(e.second);
  }
  return comp.edges.size() == verts.size();
}

// rotate a cycle sequence to start at v, walking toward v's smaller neighbor
std::vector<int> rotate_cycle(const std::vector<int>& seq, int v) {
  size_t p = 0;
  while (p < seq.size() && seq[p] != v) ++p;
  if (p == seq.size()) throw std::logic_error("rotate_cycle: vertex not on cycle");
  std::vector<int> out;
  out.reserve(seq.size());
  for (size_t t = 0; t < seq.size(); ++t) out.push_back(seq[(p + t) % seq.size()]);
  if (out.back() < out[1]) {
    std::reverse(out.begin() + 1, out.end());
  }
  return out;
}

// any simple cycle of the component found by depth-first search
std::vector<int> some_cycle(const Graph& comp) {
  auto adj = comp.adjacency();
  int start = comp.edges.front().first;
  for (const auto& e : comp.edges) start = std::min({start, e.first, e.second});
  std::vector<int> path;
  std::vector<char> onpath(static_cast<size_t>(comp.n) + 1, 0);
  std::vector<char> seen(static_cast<size_t>(comp.n) + 1, 0);
  std::vector<int> found;
  std::function<bool(int, int)> dfs = [&](int u, int parent) {
    seen[static_cast<size_t>(u)] = 1;
    onpath[static_cast<size_t>(u)] = 1;
    path.push_back(u);
    for (int w : adj[static_cast<size_t>(u)]) {
      if (w == parent) continue;
      if (onpath[static_cast<size_t>(w)]) {
        auto it = std::find(path.begin(), path.end(), w);
        found.assign(it, path.end());
        return true;
      }
      if (!seen[static_cast<size_t>(w)] && dfs(w, u)) return true;
    }
    onpath[static_cast<size_t>(u)] = 0;
    path.pop_back();
    return false;
  };
  if (!dfs(start, 0)) throw std::logic_error("some_cycle: component has no cycle");
  return found;
}

// An ear of cycle seq inside comp: a path x, i_1, ..., i_t, y with x != y on
// the cycle, interior vertices off it, and no edge of the cycle used. Found
// either as a chord or by a breadth-first search from the cycle's vertices.
std::vector<int> find_ear(const Graph& comp, const std::vector<int>& seq) {
  std::set<int> on_cycle(seq.begin(), seq.end());
  std::set<Edge> ce;
  for (const auto& e : cycle_edges(seq)) ce.insert(e);
  for (const auto& e : comp.edges) {  // chord
    if (ce.count(e)) continue;
    if (on_cycle.count(e.first) && on_cycle.count(e.second)) return {e.first, e.second};
  }
  auto adj = comp.adjacency();
  std::vector<int> src(static_cast<size_t>(comp.n) + 1, 0);
  std::vector<int> parent(static_cast<size_t>(comp.n) + 1, 0);
  std::deque<int> queue;
  std::vector<int> sorted_cycle(seq.begin(), seq.end());
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  for (int v : sorted_cycle) {
    src[static_cast<size_t>(v)] = v;
    queue.push_back(v);
  }
  auto walk_up = [&](int u) {
    std::vector<int> out{u};
    while (!on_cycle.count(out.back())) out.push_back(parent[static_cast<size_t>(out.back())]);
    return out;  // u, ..., source (source on the cycle)
  };
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<size_t>(u)]) {
      if (on_cycle.count(w)) {
        if (!on_cycle.count(u) && w != src[static_cast<size_t>(u)]) {
          std::vector<int> left = walk_up(u);  // u ... x
          std::reverse(left.begin(), left.end());
          left.push_back(w);
          return left;  // x ... u, w
        }
        continue;
      }
      if (src[static_cast<size_t>(w)] == 0) {
        src[static_cast<size_t>(w)] = on_cycle.count(u) ? u : src[static_cast<size_t>(u)];
        parent[static_cast<size_t>(w)] = u;
        queue.push_back(w);
      } else if (!on_cycle.count(u) &&
                 src[static_cast<size_t>(w)] != src[static_cast<size_t>(u)]) {
        std::vector<int> left = walk_up(u);  // u ... x
        std::reverse(left.begin(), left.end());
        std::vector<int> right = walk_up(w);  // w ... y
        left.insert(left.end(), right.begin(), right.end());
        return left;  // x ... u, w ... y
      }
    }
  }
  throw std::logic_error("find_ear: no ear found in a two-connected component");
}

// combine an ear x..y with the forward arc of the cycle from y back to x
std::vector<int> splice(const std::vector<int>& ear, const std::vector<int>& seq) {
  size_t ix = 0, iy = 0;
  for (size_t t = 0; t < seq.size(); ++t) {
    if (seq[t] == ear.front()) ix = t;
    if (seq[t] == ear.back()) iy = t;
  }
  std::vector<int> out = ear;
  for (size_t t = (iy + 1) % seq.size(); t != ix; t = (t + 1) % seq.size())
    out.push_back(seq[t]);
  return out;
}

// an even cycle of h, if any: single-cycle components are checked by parity;
// a denser component always contains one, obtained by splitting an odd cycle
// with an ear (the two splice cycles have different parities)
std::optional<std::vector<int>> find_even_cycle(const Graph& h) {
  for (const auto& comp : two_connected_components(h)) {
    if (comp.edges.size() < 3) continue;
    if (is_single_cycle(comp)) {
      if (comp.edges.size() % 2 == 0) return cycle_sequence(comp);
      continue;
    }
    std::vector<int> seq = some_cycle(comp);
    if (seq.size() % 2 == 0) return seq;
    std::vector<int> ear = find_ear(comp, seq);
    std::vector<int> c1 = splice(ear, seq);
    if (c1.size() % 2 == 0) return c1;
    std::vector<int> rev(ear.rbegin(), ear.rend());
    std::vector<int> c2 = splice(rev, seq);
    if (c2.size() % 2 != 0) throw std::logic_error("find_even_cycle: both splices odd");
    return c2;
  }
  return std::nullopt;
}

// Two odd cycles of h through their unique common vertex, each returned as a
// vertex sequence starting at that vertex. pre: h has no even cycle and every
// vertex of h lies on >= 2 edges, so every two-connected component is an odd
// cycle and at least two of them exist.
std::pair<std::vector<int>, std::vector<int>> find_two_odd_cycles(const Graph& h) {
  std::vector<std::vector<int>> cycles;
  for (const auto& comp : two_connected_components(h)) {
    if (comp.edges.size() < 3 || !is_single_cycle(comp) || comp.edges.size() % 2 == 0)
      throw std::logic_error("find_two_odd_cycles: component is not an odd cycle");
    cycles.push_back(cycle_sequence(comp));
  }
  if (cycles.size() < 2) throw std::logic_error("find_two_odd_cycles: fewer than two odd cycles");
  std::sort(cycles.begin(), cycles.end());
  const std::vector<int>& a = cycles[0];
  const std::vector<int>& b = cycles[1];
  std::set<int> av(a.begin(), a.end());
  std::vector<int> shared;
  for (int v : b)
    if (av.count(v)) shared.push_back(v);
  if (shared.size() != 1)
    throw std::logic_error("find_two_odd_cycles: odd cycles without a unique common vertex");
  return {rotate_cycle(a, shared[0]), rotate_cycle(b, shared[0])};
}

}  // namespace

LatticePoint rho(const std::pair<int, int>& edge, int d) {
  auto [i, j] = norm_edge(edge.first, edge.second);
  if (i < 1 || j > d) throw std::invalid_argument("rho: endpoint out of range");
  LatticePoint v(static_cast<size_t>(d), BigInt(0));
  v[static_cast<size_t>(i) - 1] = 1;
  v[static_cast<size_t>(j) - 1] = 1;
  return v;
}

LatticePolytope edge_polytope(const Graph& g) {
  if (g.edges.empty()) throw std::invalid_argument("edge_polytope: graph has no edges");
  std::vector<LatticePoint> gens;
  gens.reserve(g.edges.size());
  for (const auto& e : g.edges) gens.push_back(rho(e, g.n));
  return LatticePolytope(g.n, std::move(gens));
}

int dim_formula(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("dim_formula: graph must be connected");
  return bipartition(g).has_value() ? g.n - 2 : g.n - 1;
}

int dim_formula_sum(const std::vector<Graph>& gs) {
  if (gs.empty()) throw std::invalid_argument("dim_formula_sum: no graphs");
  for (const auto& g : gs)
    if (!is_connected(g)) throw std::invalid_argument("dim_formula_sum: graphs must be connected");
  return bipartition(graph_sum(gs)).has_value() ? gs.front().n - 2 : gs.front().n - 1;
}

RewriteResult lemma35_rewrite(const EdgeWeighting& weighting,
                              const std::vector<std::pair<int, int>>& tracked_edges) {
  const Graph& g = weighting.graph;
  if (!is_connected(g)) throw std::invalid_argument("lemma35_rewrite: graph must be connected");
  if (!common_vertex_condition(g))
    throw std::invalid_argument("lemma35_rewrite: odd cycles of the graph must share vertices");

  std::map<Edge, BigRational> input;
  for (const auto& [e, w] : weighting.weights) {
    Edge ne = norm_edge(e.first, e.second);
    if (!g.has_edge(ne.first, ne.second))
      throw std::invalid_argument("lemma35_rewrite: weight on a non-edge");
    if (w < 0) throw std::invalid_argument("lemma35_rewrite: negative weight");
    if (!input.emplace(ne, w).second)
      throw std::invalid_argument("lemma35_rewrite: duplicate weighted edge");
  }
  std::set<Edge> tracked;
  for (const auto& e : tracked_edges) {
    Edge ne = norm_edge(e.first, e.second);
    if (!input.count(ne))
      throw std::invalid_argument("lemma35_rewrite: tracked edge outside the support");
    tracked.insert(ne);
  }

  // the weighted sum must be an integer point
  RationalVector target(static_cast<size_t>(g.n), BigRational(0));
  for (const auto& [e, w] : input) {
    target[static_cast<size_t>(e.first) - 1] += w;
    target[static_cast<size_t>(e.second) - 1] += w;
  }
  for (const auto& c : target)
    if (!is_integral(c))
      throw std::invalid_argument("lemma35_rewrite: weighted sum is not an integer point");

  // split integer parts off up front
  std::map<Edge, BigInt> acc;
  std::map<Edge, BigRational> frac;
  for (const auto& [e, w] : input) {
    BigInt fl = rational_floor(w);
    acc[e] = fl;
    BigRational rest = w - BigRational(fl);
    if (rest != 0) frac.emplace(e, rest);
  }

  size_t guard = frac.size() + 1;
  while (!frac.empty()) {
    if (guard-- == 0) throw std::logic_error("lemma35_rewrite: cancellation failed to terminate");
    std::vector<Edge> support;
    support.reserve(frac.size());
    for (const auto& [e, w] : frac) support.push_back(e);
    Graph h(g.n, support);
    {  // integrality forces every supported vertex onto >= 2 fractional edges
      std::vector<int> deg(static_cast<size_t>(g.n) + 1, 0);
      for (const auto& e : h.edges) {
        ++deg[static_cast<size_t>(e.first)];
        ++deg[static_cast<size_t>(e.second)];
      }
      for (int dgr : deg)
        if (dgr == 1) throw std::logic_error("lemma35_rewrite: dangling fractional edge");
    }

    // alternating classes of one cancellation move: either the two parity
    // classes of an even cycle, or — with no even cycle left — odd positions
    // of one odd cycle joined with even positions of another, both walked
    // from their common vertex; then both classes carry the same vertex sum
    std::vector<Edge> class_one, class_two;
    if (auto even = find_even_cycle(h)) {
      std::vector<Edge> ce = cycle_edges(*even);
      for (size_t t = 0; t < ce.size(); ++t) (t % 2 == 0 ? class_one : class_two).push_back(ce[t]);
    } else {
      auto [c1, c2] = find_two_odd_cycles(h);
      std::vector<Edge> e1 = cycle_edges(c1), e2 = cycle_edges(c2);
      for (size_t t = 0; t < e1.size(); ++t) (t % 2 == 0 ? class_one : class_two).push_back(e1[t]);
      for (size_t t = 0; t < e2.size(); ++t) (t % 2 == 0 ? class_two : class_one).push_back(e2[t]);
    }

    // raise the class holding more tracked edges, ties favoring class one
    size_t m1 = 0, m2 = 0;
    for (const auto& e : class_one) m1 += tracked.count(e);
    for (const auto& e : class_two) m2 += tracked.count(e);
    if (m1 < m2) std::swap(class_one, class_two);

    BigRational eps = frac.at(class_two.front());
    for (const auto& e : class_two) eps = std::min(eps, frac.at(e));

    size_t before = frac.size();
    auto settle = [&](const Edge& e) {
      BigRational& w = frac.at(e);
      if (w >= 1) {
        w -= 1;
        acc[e] += 1;
      }
      if (w < 0 || w >= 1) throw std::logic_error("lemma35_rewrite: weight out of range");
      if (w == 0) frac.erase(e);
    };
    for (const auto& e : class_one) {
      frac.at(e) += eps;
      settle(e);
    }
    for (const auto& e : class_two) {
      frac.at(e) -= eps;
      settle(e);
    }
    if (frac.size() >= before)
      throw std::logic_error("lemma35_rewrite: fractional support did not shrink");
  }

  // exactness: the integer weights reproduce the weighted sum
  RationalVector redone(static_cast<size_t>(g.n), BigRational(0));
  RewriteResult result;
  result.tracked_sum = 0;
  for (const auto& [e, a] : acc) {
    if (a < 0) throw std::logic_error("lemma35_rewrite: negative integer weight");
    redone[static_cast<size_t>(e.first) - 1] += BigRational(a);
    redone[static_cast<size_t>(e.second) - 1] += BigRational(a);
    result.integer_weights.emplace_back(e, a);
    if (tracked.count(e)) result.tracked_sum += a;
  }
  if (redone != target) throw std::logic_error("lemma35_rewrite: weighted sum changed");
  return result;
}

std::optional<std::vector<LatticePoint>> theorem34_decompose(const Graph& g1, const Graph& g2,
                                                             const LatticePoint& alpha, int k) {
  if (g1.n != g2.n) throw std::invalid_argument("theorem34_decompose: vertex count mismatch");
  if (g1.edges.empty() || g2.edges.empty())
    throw std::invalid_argument("theorem34_decompose: graphs need at least one edge");
  if (!is_connected(g1)) throw std::invalid_argument("theorem34_decompose: g1 must be connected");
  if (!common_vertex_condition(g1))
    throw std::invalid_argument("theorem34_decompose: odd cycles of g1 must share vertices");
  if (!is_subgraph(g2, g1)) throw std::invalid_argument("theorem34_decompose: g2 not in g1");
  if (k < 1) throw std::invalid_argument("theorem34_decompose: k must be >= 1");
  if (static_cast<int>(alpha.size()) != g1.n)
    throw std::invalid_argument("theorem34_decompose: alpha dimension mismatch");

  // alpha = sum r_e rho(e) + sum r'_e rho(e'), both coefficient blocks
  // summing to k, with every coefficient nonnegative
  const size_t m1 = g1.edges.size(), m2 = g2.edges.size();
  RationalMatrix a(static_cast<size_t>(g1.n) + 2,
                   RationalVector(m1 + m2, BigRational(0)));
  RationalVector b(static_cast<size_t>(g1.n) + 2, BigRational(0));
  for (size_t j = 0; j < m1 + m2; ++j) {
    const Edge& e = j < m1 ? g1.edges[j] : g2.edges[j - m1];
    a[static_cast<size_t>(e.first) - 1][j] = 1;
    a[static_cast<size_t>(e.second) - 1][j] = 1;
    a[static_cast<size_t>(g1.n) + (j < m1 ? 0 : 1)][j] = 1;
  }
  for (int v = 0; v < g1.n; ++v) b[static_cast<size_t>(v)] = BigRational(alpha[static_cast<size_t>(v)]);
  b[static_cast<size_t>(g1.n)] = k;
  b[static_cast<size_t>(g1.n) + 1] = k;
  auto x = rational_feasible(a, b);
  if (!x) return std::nullopt;

  std::map<Edge, BigRational> r1, r2;
  for (size_t j = 0; j < m1; ++j) r1[g1.edges[j]] = (*x)[j];
  for (size_t j = 0; j < m2; ++j) r2[g2.edges[j]] = (*x)[m1 + j];

  // shared fractional edges: push the fractional part onto the g2 side, so
  // the fractional supports become disjoint and the g2 total can only grow
  for (auto& [e, w2] : r2) {
    BigRational& w1 = r1.at(e);
    BigRational f1 = w1 - BigRational(rational_floor(w1));
    BigRational f2 = w2 - BigRational(rational_floor(w2));
    if (f1 != 0 && f2 != 0) {
      w1 -= f1;
      w2 += f1;
    }
  }

  std::map<Edge, BigInt> units1, units2;
  std::vector<std::pair<Edge, BigRational>> support;
  std::vector<Edge> tracked;
  BigRational tracked_input(0);
  for (const auto& [e, w] : r1) {
    units1[e] = rational_floor(w);
    BigRational f = w - BigRational(units1[e]);
    if (f != 0) support.emplace_back(e, f);
  }
  for (const auto& [e, w] : r2) {
    units2[e] = rational_floor(w);
    BigRational f = w - BigRational(units2[e]);
    if (f != 0) {
      support.emplace_back(e, f);
      tracked.push_back(e);
      tracked_input += f;
    }
  }

  if (!support.empty()) {
    RewriteResult rw = lemma35_rewrite(EdgeWeighting{g1, support}, tracked);
    if (BigRational(rw.tracked_sum) < tracked_input)
      throw std::logic_error("theorem34_decompose: tracked weight dropped");
    std::set<Edge> tracked_set(tracked.begin(), tracked.end());
    for (const auto& [e, w] : rw.integer_weights)
      (tracked_set.count(e) ? units2[e] : units1[e]) += w;
  }

  BigInt total1 = 0, total2 = 0;
  for (const auto& [e, u] : units1) total1 += u;
  for (const auto& [e, u] : units2) total2 += u;
  if (total1 + total2 != 2 * k || total1 > k)
    throw std::logic_error("theorem34_decompose: unit totals out of balance");

  // move the g2 surplus onto the g1 side (every g2 edge is a g1 edge)
  BigInt surplus = total2 - k;
  for (auto& [e, u] : units2) {
    if (surplus == 0) break;
    BigInt move = std::min(u, surplus);
    u -= move;
    units1[e] += move;
    surplus -= move;
  }

  std::vector<LatticePoint> half1, half2;
  for (const auto& [e, u] : units1)
    for (BigInt t = 0; t < u; ++t) half1.push_back(rho(e, g1.n));
  for (const auto& [e, u] : units2)
    for (BigInt t = 0; t < u; ++t) half2.push_back(rho(e, g1.n));
  if (half1.size() != static_cast<size_t>(k) || half2.size() != static_cast<size_t>(k))
    throw std::logic_error("theorem34_decompose: summand counts are not k");

  std::vector<LatticePoint> parts;
  parts.reserve(half1.size());
  LatticePoint sum(alpha.size(), BigInt(0));
  for (size_t i = 0; i < half1.size(); ++i) {
    parts.push_back(add(half1[i], half2[i]));
    for (size_t t = 0; t < sum.size(); ++t) sum[t] += parts.back()[t];
  }
  if (sum != alpha) throw std::logic_error("theorem34_decompose: parts do not sum to alpha");
  return parts;
}

}  // namespace mink
