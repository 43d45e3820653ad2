#pragma once
// Seeded instance generators shared by the unit tests and the acceptance
// gate: fractional edge weightings with integral weighted sums (built from
// integer kernel vectors of the edge-indicator matrix), and small random
// dilation-sum instances.

#include <mink/edge_polytope.hpp>
#include <mink/harness.hpp>
#include <mink/linalg.hpp>
#include <mink/polytope.hpp>

#include <utility>
#include <vector>

namespace sampling {

// integer kernel basis of the edge-indicator matrix, via the Hermite transform
inline std::vector<std::vector<mink::BigInt>> rho_kernel(const mink::Graph& g) {
  std::vector<mink::LatticePoint> cols;
  for (const auto& e : g.edges) cols.push_back(mink::rho(e, g.n));
  mink::IntMatrix m = mink::IntMatrix::from_columns(cols, g.n);
  mink::HnfResult res = mink::hnf(m);
  std::vector<std::vector<mink::BigInt>> kernel;
  for (int c = res.rank(); c < m.cols; ++c) kernel.push_back(res.u.column(c));
  return kernel;
}

// random nonnegative weighting of all edges of g with integral weighted sum:
// an integer part plus half-steps along integer kernel vectors. Fractional
// draws are preferred (they stress the cancellation loop); integral draws are
// accepted only once the fractional attempts are exhausted, and the all-ones
// fallback keeps runs deterministic when no valid draw appears at all.
inline mink::EdgeWeighting sample_weighting(mink::Rng& rng, const mink::Graph& g,
                                            bool* has_fraction) {
  const auto kernel = rho_kernel(g);
  const size_t m = g.edges.size();
  for (int attempt = 0; attempt < 120; ++attempt) {
    const bool demand_fraction = attempt < 60 && !kernel.empty();
    std::vector<mink::BigRational> w(m);
    for (auto& v : w) v = mink::BigRational(rng.uniform(0, 2));
    for (const auto& kv : kernel) {
      if (rng.uniform(0, 1) == 0) continue;
      const mink::BigRational step(2 * rng.uniform(0, 1) - 1, 2);
      for (size_t i = 0; i < m; ++i) w[i] += step * mink::BigRational(kv[i]);
    }
    bool ok = true;
    bool frac = false;
    for (const auto& v : w) {
      if (v < 0) ok = false;
      if (!mink::is_integral(v)) frac = true;
    }
    if (!ok || (demand_fraction && !frac)) continue;
    mink::EdgeWeighting out;
    out.graph = g;
    for (size_t i = 0; i < m; ++i) out.weights.push_back({g.edges[i], w[i]});
    *has_fraction = frac;
    return out;
  }
  mink::EdgeWeighting out;
  out.graph = g;
  for (size_t i = 0; i < m; ++i) out.weights.push_back({g.edges[i], mink::BigRational(1)});
  *has_fraction = false;
  return out;
}

// a list of small positive-dimensional polytopes (at most `max_parts`, ambient
// dimension at most 3, coordinates at most 3) for dilation-sum checks
inline std::vector<mink::LatticePolytope> sample_sum_parts(mink::Rng& rng, int t,
                                                           int max_parts) {
  const int parts = 1 + (t % max_parts);
  const int ambient = 1 + (t % 3);
  const int cap = ambient == 3 ? 2 : 3;
  std::vector<mink::LatticePolytope> ps;
  for (int i = 0; i < parts; ++i) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      mink::LatticePolytope p =
          mink::random_polytope(rng, ambient, cap, rng.uniform(2, ambient + 2));
      if (mink::dimension(p) >= 1) {
        ps.push_back(std::move(p));
        break;
      }
    }
    if (static_cast<int>(ps.size()) != i + 1) {
      mink::LatticePoint zero(static_cast<size_t>(ambient), mink::BigInt(0));
      mink::LatticePoint one = zero;
      one[0] = 1;
      ps.emplace_back(ambient, std::vector<mink::LatticePoint>{zero, one});
    }
  }
  return ps;
}

// the weighted sum n_1 P_1 + ... + n_m P_m
inline mink::LatticePolytope weighted_sum(const std::vector<mink::LatticePolytope>& ps,
                                          const std::vector<mink::BigInt>& ns) {
  std::vector<mink::LatticePolytope> dilated;
  for (size_t i = 0; i < ps.size(); ++i) dilated.push_back(mink::dilate(ps[i], ns[i]));
  return mink::minkowski_sum(dilated);
}

}  // namespace sampling
