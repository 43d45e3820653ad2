#pragma once
// Independent reference implementations used to cross-check the library.
// Deliberately different algorithms from the production code: fraction-free
// determinants, Fourier-Motzkin feasibility, brute-force decomposition, and
// whole-cycle graph condition checks.

#include <mink/graph.hpp>
#include <mink/polytope.hpp>
#include <mink/rational.hpp>

#include <optional>
#include <vector>

namespace oracles {

// exact determinant by fraction-free (Bareiss) elimination; pre: square
mink::BigInt bareiss_determinant(std::vector<std::vector<mink::BigInt>> m);

// One inequality sum(coef[i] * y_i) <= rhs (strict: "<"). Equalities are
// modeled as two opposite rows by the callers.
struct FmRow {
  std::vector<mink::BigRational> coef;
  mink::BigRational rhs;
  bool strict = false;
};

// Fourier-Motzkin elimination of all variables; returns whether the system is
// feasible over the rationals. Exponential, for small test systems only.
bool fm_feasible(std::vector<FmRow> rows, int nvars);

// membership of x in p (strict = relative interior: every generator weight
// strictly positive) decided via Fourier-Motzkin on the weight variables
bool fm_member(const mink::LatticePolytope& p, const mink::RationalVector& x, bool strict);

// brute-force k-part decomposition over the given point list; pre: k in 1..3
std::optional<std::vector<mink::LatticePoint>> naive_decompose(
    const mink::LatticePoint& alpha, int k, const std::vector<mink::LatticePoint>& points);

// every cycle of g (not only chordless ones) as canonical vertex sequences:
// minimal vertex first, then the smaller neighbor; sorted; pre: small graphs
std::vector<std::vector<int>> all_cycles(const mink::Graph& g);

// the two conditions evaluated literally on all odd cycles
bool occ_oracle(const mink::Graph& g);
bool cvc_oracle(const mink::Graph& g);

}  // namespace oracles
