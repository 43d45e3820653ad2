#pragma once
// Integral convex polytopes in V-representation (generator lists). Everything
// is decided exactly: membership via rational LP feasibility, lattice points
// via integer box scans whose prefilters are exact necessary conditions.

#include <mink/linalg.hpp>
#include <mink/lp.hpp>

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mink {

struct LatticePolytope {
  int ambient_dim = 0;
  std::vector<LatticePoint> generators;  // lex-sorted, deduped, nonempty

  LatticePolytope() = default;
  // throws std::invalid_argument on empty generators / length mismatches
  LatticePolytope(int dim, std::vector<LatticePoint> gens);
};

// affine lattice {base + sum z_i basis_i : z_i in Z}
struct AffineLattice {
  LatticePoint base;
  std::vector<LatticePoint> basis;  // Z-basis of the difference lattice, in HNF

  bool contains(const LatticePoint& x) const;
};

// positive convex combination certificate: x = sum coeff_j * point_j
struct WeightedCombination {
  std::vector<std::pair<BigRational, LatticePoint>> terms;  // coefficients > 0
  BigRational total;                                        // sum of coefficients
};

// affine dimension (rank over Q of generator differences); a point has dim 0
int dimension(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps);  // pre: nonempty

LatticePolytope dilate(const LatticePolytope& p, const BigInt& n);  // pre: n >= 1

bool contains(const LatticePolytope& p, const RationalVector& x);
bool contains(const LatticePolytope& p, const LatticePoint& x);

// relative interior test: x must be a strictly-positive convex combination of
// ALL generators
bool relint_contains(const LatticePolytope& p, const RationalVector& x);
bool relint_contains(const LatticePolytope& p, const LatticePoint& x);

// Batched exact membership tester. For full-dimensional polytopes in ambient
// dimension <= 3 the constructor enumerates the facet half-spaces once (every
// facet is spanned by generators, so candidate normals come from generator
// pairs/triples), making each query pure integer arithmetic; in every other
// case queries fall back to the feasibility LP. Strict queries test the
// (relative = topological, since full-dimensional) interior.
class MembershipOracle {
 public:
  explicit MembershipOracle(const LatticePolytope& p);
  bool test(const LatticePoint& x, bool strict) const;

 private:
  const LatticePolytope* poly_;
  bool use_facets_ = false;
  struct HalfSpace {
    std::vector<BigInt> normal;
    BigInt offset;  // normal . x <= offset on p
  };
  std::vector<HalfSpace> facets_;
};

// all integer points of p / of its relative interior, lex-sorted
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);
std::vector<LatticePoint> relint_lattice_points(const LatticePolytope& p);

// affine lattice generated by pts (anchored at the lex-least point); pre: nonempty
AffineLattice affine_lattice(const std::vector<LatticePoint>& pts);

// convex-combination witness for containment (absent iff x outside p)
std::optional<WeightedCombination> convex_certificate(const LatticePolytope& p,
                                                      const RationalVector& x);

bool same_polytope(const LatticePolytope& a, const LatticePolytope& b);

// Lex-ordered scan over the integer points of the generator bounding box,
// pruned by exact necessary conditions (per-axis bounds, total-sum bounds,
// pairwise sum/difference bounds — each the exact generator extreme of a
// linear functional, hence valid on all of p). In strict mode every bound
// whose functional is non-constant on p is tightened by one, which is valid
// for relative-interior points. Candidates passed to the callback still
// require an exact membership decision by the caller.
class BoxScanner {
 public:
  BoxScanner(const LatticePolytope& p, bool strict);

  // visits candidates in ascending lex order; return false to stop the scan
  void scan(const std::function<bool(const LatticePoint&)>& fn) const;

  // leaf prefilter for externally produced integer candidates
  bool admits(const LatticePoint& x) const;

 private:
  bool scan_rec(int i, LatticePoint& x, BigInt partial,
                const std::function<bool(const LatticePoint&)>& fn) const;

  int dim_;
  std::vector<BigInt> lo_, hi_;        // per-axis closed integer ranges (adjusted)
  std::vector<BigInt> suf_lo_, suf_hi_;  // suffix sums of lo_/hi_
  BigInt sum_lo_, sum_hi_;             // closed total-sum range (adjusted)
  // pairwise functionals x_i + x_j and x_i - x_j, closed adjusted ranges
  struct PairBound {
    int i, j;
    bool is_sum;
    BigInt lo, hi;
  };
  std::vector<PairBound> pairs_;
  // pairs_ indices keyed by their larger axis, so the scan can enforce each
  // pair bound as soon as both coordinates are fixed
  std::vector<std::vector<int>> pairs_by_second_;
};

}  // namespace mink
