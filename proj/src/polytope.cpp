#include <mink/polytope.hpp>

#include <algorithm>
#include <stdexcept>

namespace mink {

LatticePolytope::LatticePolytope(int dim, std::vector<LatticePoint> gens)
    : ambient_dim(dim), generators(std::move(gens)) {
  if (dim < 1) throw std::invalid_argument("LatticePolytope: ambient_dim must be >= 1");
  if (generators.empty()) throw std::invalid_argument("LatticePolytope: no generators");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("LatticePolytope: generator length mismatch");
  std::sort(generators.begin(), generators.end(), lex_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
}

bool AffineLattice::contains(const LatticePoint& x) const {
  if (x.size() != base.size())
    throw std::invalid_argument("AffineLattice::contains: dimension mismatch");
  LatticePoint d = sub(x, base);
  if (basis.empty()) return is_zero(d);
  IntMatrix B = IntMatrix::from_columns(basis, static_cast<int>(base.size()));
  return solve_integer_linear(B, d).has_value();
}

int dimension(const LatticePolytope& p) {
  if (p.generators.size() == 1) return 0;
  std::vector<LatticePoint> diffs;
  for (size_t i = 1; i < p.generators.size(); ++i)
    diffs.push_back(sub(p.generators[i], p.generators[0]));
  return rank_int(IntMatrix::from_columns(diffs, p.ambient_dim));
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
  std::vector<LatticePoint> sums;
  sums.reserve(a.generators.size() * b.generators.size());
  for (const auto& g : a.generators)
    for (const auto& h : b.generators) sums.push_back(add(g, h));
  return LatticePolytope(a.ambient_dim, std::move(sums));
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty list");
  LatticePolytope acc = ps[0];
  for (size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

LatticePolytope dilate(const LatticePolytope& p, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("dilate: factor must be >= 1");
  std::vector<LatticePoint> gens;
  gens.reserve(p.generators.size());
  for (const auto& g : p.generators) gens.push_back(scale(g, n));
  return LatticePolytope(p.ambient_dim, std::move(gens));
}

namespace {

RationalVector to_rational(const LatticePoint& x) {
  RationalVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = BigRational(x[i]);
  return out;
}

// membership LP: columns are generators, rows are the N coordinate equations
// plus the convex-combination row (sum of lambda = 1)
std::optional<RationalVector> membership_lp(const LatticePolytope& p,
                                            const RationalVector& x, bool strict) {
  if (static_cast<int>(x.size()) != p.ambient_dim)
    throw std::invalid_argument("contains: dimension mismatch");
  int m = static_cast<int>(p.generators.size());
  RationalMatrix a(p.ambient_dim + 1, RationalVector(m, BigRational(0)));
  RationalVector b(p.ambient_dim + 1, BigRational(0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < p.ambient_dim; ++i) a[i][j] = BigRational(p.generators[j][i]);
  for (int j = 0; j < m; ++j) a[p.ambient_dim][j] = 1;
  for (int i = 0; i < p.ambient_dim; ++i) b[i] = x[i];
  b[p.ambient_dim] = 1;
  return rational_feasible(a, b, strict);
}

// cheap exact reject: x must respect every generator-extreme functional bound
bool rational_prefilter(const LatticePolytope& p, const RationalVector& x) {
  int d = p.ambient_dim;
  for (int i = 0; i < d; ++i) {
    BigInt lo = p.generators[0][i], hi = p.generators[0][i];
    for (const auto& g : p.generators) {
      if (g[i] < lo) lo = g[i];
      if (g[i] > hi) hi = g[i];
    }
    if (x[i] < lo || x[i] > hi) return false;
  }
  BigRational sx(0);
  for (const auto& xi : x) sx += xi;
  BigInt slo, shi;
  bool first = true;
  for (const auto& g : p.generators) {
    BigInt s(0);
    for (const auto& gi : g) s += gi;
    if (first || s < slo) slo = s;
    if (first || s > shi) shi = s;
    first = false;
  }
  return sx >= slo && sx <= shi;
}

}  // namespace

bool contains(const LatticePolytope& p, const RationalVector& x) {
  if (!rational_prefilter(p, x)) return false;
  return membership_lp(p, x, false).has_value();
}

bool contains(const LatticePolytope& p, const LatticePoint& x) {
  return contains(p, to_rational(x));
}

bool relint_contains(const LatticePolytope& p, const RationalVector& x) {
  if (!rational_prefilter(p, x)) return false;
  return membership_lp(p, x, true).has_value();
}

bool relint_contains(const LatticePolytope& p, const LatticePoint& x) {
  return relint_contains(p, to_rational(x));
}

// ---- MembershipOracle -------------------------------------------------------

MembershipOracle::MembershipOracle(const LatticePolytope& p) : poly_(&p) {
  const int n = p.ambient_dim;
  if (n > 3 || dimension(p) != n) return;  // queries fall back to the LP
  const auto& gens = p.generators;

  // Both supporting half-spaces of a candidate normal. Every facet normal
  // arises from a generator pair (2D) or triple (3D) spanning it, and extra
  // valid supporting half-spaces leave the intersection equal to the hull.
  auto support = [&](std::vector<BigInt> normal) {
    bool zero = true;
    for (const BigInt& v : normal)
      if (v != 0) zero = false;
    if (zero) return;
    BigInt lo, hi;
    bool first = true;
    for (const auto& g : gens) {
      BigInt dot(0);
      for (int i = 0; i < n; ++i) dot += normal[i] * g[i];
      if (first || dot < lo) lo = dot;
      if (first || dot > hi) hi = dot;
      first = false;
    }
    std::vector<BigInt> neg(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
    auto reduced = [](std::vector<BigInt> nv, BigInt c) {
      BigInt g = abs(c);
      for (const BigInt& v : nv) g = boost::multiprecision::gcd(g, BigInt(abs(v)));
      if (g > 1) {
        for (BigInt& v : nv) v /= g;
        c /= g;
      }
      return HalfSpace{std::move(nv), std::move(c)};
    };
    facets_.push_back(reduced(std::move(normal), hi));
    facets_.push_back(reduced(std::move(neg), BigInt(-lo)));
  };

  const int m = static_cast<int>(gens.size());
  if (n == 1) {
    support({BigInt(1)});
  } else if (n == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        support({gens[j][1] - gens[i][1], gens[i][0] - gens[j][0]});
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          std::vector<BigInt> a(3), b(3);
          for (int c = 0; c < 3; ++c) {
            a[c] = gens[j][c] - gens[i][c];
            b[c] = gens[k][c] - gens[i][c];
          }
          support({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]});
        }
  }

  std::sort(facets_.begin(), facets_.end(), [](const HalfSpace& x, const HalfSpace& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });
  facets_.erase(std::unique(facets_.begin(), facets_.end(),
                            [](const HalfSpace& x, const HalfSpace& y) {
                              return x.normal == y.normal && x.offset == y.offset;
                            }),
                facets_.end());
  use_facets_ = true;
}

bool MembershipOracle::test(const LatticePoint& x, bool strict) const {
  if (!use_facets_) {
    return strict ? relint_contains(*poly_, x) : contains(*poly_, x);
  }
  for (const auto& hs : facets_) {
    BigInt dot(0);
    for (std::size_t i = 0; i < hs.normal.size(); ++i) dot += hs.normal[i] * x[i];
    if (strict ? dot >= hs.offset : dot > hs.offset) return false;
  }
  return true;
}

std::optional<WeightedCombination> convex_certificate(const LatticePolytope& p,
                                                      const RationalVector& x) {
  auto lambda = membership_lp(p, x, false);
  if (!lambda) return std::nullopt;
  WeightedCombination w;
  w.total = 0;
  for (size_t j = 0; j < lambda->size(); ++j) {
    if ((*lambda)[j] == 0) continue;
    w.terms.emplace_back((*lambda)[j], p.generators[j]);
    w.total += (*lambda)[j];
  }
  return w;
}

// ---- BoxScanner ------------------------------------------------------------

BoxScanner::BoxScanner(const LatticePolytope& p, bool strict) : dim_(p.ambient_dim) {
  const auto& gens = p.generators;
  lo_.resize(dim_);
  hi_.resize(dim_);
  for (int i = 0; i < dim_; ++i) {
    BigInt lo = gens[0][i], hi = gens[0][i];
    for (const auto& g : gens) {
      if (g[i] < lo) lo = g[i];
      if (g[i] > hi) hi = g[i];
    }
    if (strict && lo < hi) { ++lo; --hi; }  // non-constant axis functional
    lo_[i] = lo;
    hi_[i] = hi;
  }
  {
    BigInt slo, shi;
    bool first = true;
    for (const auto& g : gens) {
      BigInt s(0);
      for (const auto& gi : g) s += gi;
      if (first || s < slo) slo = s;
      if (first || s > shi) shi = s;
      first = false;
    }
    if (strict && slo < shi) { ++slo; --shi; }
    sum_lo_ = slo;
    sum_hi_ = shi;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (bool is_sum : {true, false}) {
        BigInt lo, hi;
        bool first = true;
        for (const auto& g : gens) {
          BigInt v = is_sum ? BigInt(g[i] + g[j]) : BigInt(g[i] - g[j]);
          if (first || v < lo) lo = v;
          if (first || v > hi) hi = v;
          first = false;
        }
        if (strict && lo < hi) { ++lo; --hi; }
        pairs_.push_back(PairBound{i, j, is_sum, lo, hi});
      }
  pairs_by_second_.resize(dim_);
  for (int idx = 0; idx < static_cast<int>(pairs_.size()); ++idx)
    pairs_by_second_[pairs_[idx].j].push_back(idx);
  suf_lo_.assign(dim_ + 1, BigInt(0));
  suf_hi_.assign(dim_ + 1, BigInt(0));
  for (int i = dim_ - 1; i >= 0; --i) {
    suf_lo_[i] = suf_lo_[i + 1] + lo_[i];
    suf_hi_[i] = suf_hi_[i + 1] + hi_[i];
  }
}

bool BoxScanner::admits(const LatticePoint& x) const {
  BigInt s(0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
    s += x[i];
  }
  if (s < sum_lo_ || s > sum_hi_) return false;
  for (const auto& pb : pairs_) {
    BigInt v = pb.is_sum ? BigInt(x[pb.i] + x[pb.j]) : BigInt(x[pb.i] - x[pb.j]);
    if (v < pb.lo || v > pb.hi) return false;
  }
  return true;
}

bool BoxScanner::scan_rec(int i, LatticePoint& x, BigInt partial,
                          const std::function<bool(const LatticePoint&)>& fn) const {
  if (i == dim_) {
    // sum and pair bounds were enforced incrementally along the prefix
    return fn(x);
  }
  for (BigInt v = lo_[i]; v <= hi_[i]; ++v) {
    BigInt np = partial + v;
    // remaining coordinates range over [suf_lo, suf_hi]
    if (np + suf_hi_[i + 1] < sum_lo_ || np + suf_lo_[i + 1] > sum_hi_) continue;
    x[i] = v;
    bool ok = true;
    for (int idx : pairs_by_second_[i]) {
      const PairBound& pb = pairs_[idx];
      BigInt w = pb.is_sum ? BigInt(x[pb.i] + v) : BigInt(x[pb.i] - v);
      if (w < pb.lo || w > pb.hi) { ok = false; break; }
    }
    if (!ok) continue;
    if (!scan_rec(i + 1, x, np, fn)) return false;
  }
  return true;
}

void BoxScanner::scan(const std::function<bool(const LatticePoint&)>& fn) const {
  for (int i = 0; i < dim_; ++i)
    if (lo_[i] > hi_[i]) return;  // strict adjustment emptied an axis
  LatticePoint x(dim_, BigInt(0));
  scan_rec(0, x, BigInt(0), fn);
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  BoxScanner scanner(p, false);
  MembershipOracle oracle(p);
  scanner.scan([&](const LatticePoint& x) {
    if (oracle.test(x, false)) out.push_back(x);
    return true;
  });
  return out;
}

std::vector<LatticePoint> relint_lattice_points(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  BoxScanner scanner(p, true);
  MembershipOracle oracle(p);
  scanner.scan([&](const LatticePoint& x) {
    if (oracle.test(x, true)) out.push_back(x);
    return true;
  });
  return out;
}

AffineLattice affine_lattice(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_lattice: no points");
  AffineLattice lat;
  lat.base = *std::min_element(pts.begin(), pts.end(), lex_less);
  std::vector<LatticePoint> diffs;
  for (const auto& q : pts) {
    LatticePoint d = sub(q, lat.base);
    if (!is_zero(d)) diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return lat;
  HnfResult hr = hnf(IntMatrix::from_columns(diffs, static_cast<int>(lat.base.size())));
  for (int c = 0; c < hr.rank(); ++c) lat.basis.push_back(hr.h.column(c));
  return lat;
}

bool same_polytope(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  for (const auto& g : a.generators)
    if (!contains(b, g)) return false;
  for (const auto& g : b.generators)
    if (!contains(a, g)) return false;
  return true;
}

}  // namespace mink
