#pragma once
// Exact integer linear algebra: dense matrices over BigInt, column-style
// Hermite normal form with a tracked unimodular transform, and integer linear
// solving (the lattice-membership workhorse).

#include <mink/rational.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace mink {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major, rows*cols entries

  IntMatrix() = default;
  IntMatrix(int r, int c);  // zero-filled; throws if r < 0 or c < 0

  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  // columns[j] becomes column j; all columns must share one length
  static IntMatrix from_columns(const std::vector<LatticePoint>& columns, int dim);

  LatticePoint column(int c) const;
  bool operator==(const IntMatrix& o) const = default;
};

// h = a * u with u unimodular (det ±1). Column-style HNF:
//   - pivots positive, one per nonzero column, strictly descending staircase
//     (each pivot is the topmost nonzero entry of its column),
//   - entries left of a pivot in its row reduced mod the pivot (in [0, pivot)),
//   - zero columns last.
// pivots lists (row, col) pairs in scan order; rank() == pivots.size().
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::pair<int, int>> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

HnfResult hnf(const IntMatrix& a);  // pre: a nonempty (rows, cols >= 1)

// Solves a·x = b over the integers; absent when no integral solution exists.
// Any one solution is returned (free coordinates are set to zero).
std::optional<std::vector<BigInt>> solve_integer_linear(const IntMatrix& a,
                                                        const std::vector<BigInt>& b);

// rank over Q (equals the HNF pivot count)
int rank_int(const IntMatrix& a);

// a * x for a column vector x
std::vector<BigInt> mat_vec(const IntMatrix& a, const std::vector<BigInt>& x);

}  // namespace mink
