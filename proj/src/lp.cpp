#include <mink/lp.hpp>

#include <stdexcept>

namespace mink {

namespace {

using Rat = BigRational;

// Dense exact-tableau simplex. Bland's rule (least-index entering column,
// least-basis-index tie break on the ratio test) guarantees termination.
struct Simplex {
  int m = 0;           // constraint rows
  int nstruct = 0;     // structural columns; artificials follow
  int ncols = 0;       // structural + artificial
  std::vector<std::vector<Rat>> row;  // m rows of ncols entries
  std::vector<Rat> rhs;               // length m, kept >= 0
  std::vector<int> basis;             // basis[r] = basic column of row r
  std::vector<char> alive;            // redundant rows get retired after phase 1

  // constraints a·x = b with x >= 0; rhs sign-normalized; one artificial per row
  Simplex(const RationalMatrix& a, const RationalVector& b, int structural_cols) {
    m = static_cast<int>(a.size());
    nstruct = structural_cols;
    ncols = nstruct + m;
    row.assign(m, std::vector<Rat>(ncols, Rat(0)));
    rhs.resize(m);
    basis.resize(m);
    alive.assign(m, 1);
    for (int r = 0; r < m; ++r) {
      bool flip = b[r] < 0;
      for (int j = 0; j < nstruct; ++j) row[r][j] = flip ? -a[r][j] : a[r][j];
      rhs[r] = flip ? -b[r] : b[r];
      row[r][nstruct + r] = 1;
      basis[r] = nstruct + r;
    }
  }

  bool is_artificial(int j) const { return j >= nstruct; }

  void pivot(int pr, int pc, std::vector<Rat>& obj, Rat& objval) {
    Rat inv = row[pr][pc];
    for (int j = 0; j < ncols; ++j)
      if (row[pr][j] != 0) row[pr][j] /= inv;
    rhs[pr] /= inv;
    for (int r = 0; r < m; ++r) {
      if (r == pr || row[r][pc] == 0) continue;
      Rat f = row[r][pc];
      for (int j = 0; j < ncols; ++j)
        if (row[pr][j] != 0) row[r][j] -= f * row[pr][j];
      rhs[r] -= f * rhs[pr];
    }
    if (obj[pc] != 0) {
      Rat f = obj[pc];
      for (int j = 0; j < ncols; ++j)
        if (row[pr][j] != 0) obj[j] -= f * row[pr][j];
      objval -= f * rhs[pr];
    }
    basis[pr] = pc;
  }

  // minimize c·x from the current feasible basis; returns the optimal value.
  // Columns with enter_ok[j] == 0 never enter the basis.
  Rat optimize(const std::vector<Rat>& c, const std::vector<char>& enter_ok) {
    std::vector<Rat> obj = c;
    Rat objval(0);
    for (int r = 0; r < m; ++r) {  // price out the starting basis
      if (!alive[r] || c[basis[r]] == 0) continue;
      Rat f = c[basis[r]];
      for (int j = 0; j < ncols; ++j)
        if (row[r][j] != 0) obj[j] -= f * row[r][j];
      objval -= f * rhs[r];
    }
    for (;;) {
      int pc = -1;
      for (int j = 0; j < ncols; ++j)
        if (enter_ok[j] && obj[j] < 0) { pc = j; break; }
      if (pc < 0) return -objval;  // objval tracks -(current objective)
      int pr = -1;
      for (int r = 0; r < m; ++r) {
        if (!alive[r] || row[r][pc] <= 0) continue;
        if (pr < 0) { pr = r; continue; }
        Rat lhs = rhs[r] * row[pr][pc];
        Rat rhsv = rhs[pr] * row[r][pc];
        if (lhs < rhsv || (lhs == rhsv && basis[r] < basis[pr])) pr = r;
      }
      if (pr < 0) throw std::logic_error("simplex: unbounded objective");
      pivot(pr, pc, obj, objval);
    }
  }

  // after a successful phase 1: force artificials out of the basis (degenerate
  // pivots), retiring redundant rows
  void expel_artificials() {
    std::vector<Rat> dummy(ncols, Rat(0));
    Rat dummyval(0);
    for (int r = 0; r < m; ++r) {
      if (!alive[r] || !is_artificial(basis[r])) continue;
      int pc = -1;
      for (int j = 0; j < nstruct; ++j)
        if (row[r][j] != 0) { pc = j; break; }
      if (pc < 0) {
        alive[r] = 0;  // 0 = 0 row
        continue;
      }
      pivot(r, pc, dummy, dummyval);
    }
  }

  RationalVector structural_solution() const {
    RationalVector x(nstruct, Rat(0));
    for (int r = 0; r < m; ++r)
      if (alive[r] && basis[r] < nstruct) x[basis[r]] = rhs[r];
    return x;
  }
};

void validate(const RationalMatrix& a, const RationalVector& b) {
  if (a.empty()) throw std::invalid_argument("rational_feasible: empty system");
  if (a.size() != b.size()) throw std::invalid_argument("rational_feasible: rhs length mismatch");
  size_t n = a[0].size();
  if (n == 0) throw std::invalid_argument("rational_feasible: zero columns");
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("rational_feasible: ragged matrix");
}

}  // namespace

std::optional<RationalVector> rational_feasible(const RationalMatrix& a,
                                                const RationalVector& b,
                                                bool strict_positive) {
  validate(a, b);
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());

  if (!strict_positive) {
    Simplex sx(a, b, n);
    std::vector<Rat> c(sx.ncols, Rat(0));
    for (int j = n; j < sx.ncols; ++j) c[j] = 1;
    std::vector<char> all(sx.ncols, 1);
    if (sx.optimize(c, all) != 0) return std::nullopt;
    sx.expel_artificials();
    RationalVector lambda = sx.structural_solution();
    // exactness guard
    for (int r = 0; r < m; ++r) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += a[r][j] * lambda[j];
      if (acc != b[r]) throw std::logic_error("rational_feasible: inexact solution");
    }
    return lambda;
  }

  // strict: lambda = mu + eps·1 with mu >= 0, 0 <= eps <= 1, maximize eps.
  // columns: mu (n) | eps | cap slack
  RationalMatrix ax(m + 1, RationalVector(n + 2, Rat(0)));
  RationalVector bx(m + 1, Rat(0));
  for (int r = 0; r < m; ++r) {
    Rat rowsum(0);
    for (int j = 0; j < n; ++j) {
      ax[r][j] = a[r][j];
      rowsum += a[r][j];
    }
    ax[r][n] = rowsum;
    bx[r] = b[r];
  }
  ax[m][n] = 1;
  ax[m][n + 1] = 1;
  bx[m] = 1;

  Simplex sx(ax, bx, n + 2);
  std::vector<Rat> c1(sx.ncols, Rat(0));
  for (int j = n + 2; j < sx.ncols; ++j) c1[j] = 1;
  std::vector<char> all(sx.ncols, 1);
  if (sx.optimize(c1, all) != 0) return std::nullopt;
  sx.expel_artificials();

  std::vector<Rat> c2(sx.ncols, Rat(0));
  c2[n] = -1;  // maximize eps
  std::vector<char> ok(sx.ncols, 1);
  for (int j = n + 2; j < sx.ncols; ++j) ok[j] = 0;
  Rat neg_eps = sx.optimize(c2, ok);
  if (-neg_eps <= 0) return std::nullopt;

  RationalVector sol = sx.structural_solution();
  Rat eps = sol[n];
  RationalVector lambda(n);
  for (int j = 0; j < n; ++j) lambda[j] = sol[j] + eps;
  for (int r = 0; r < m; ++r) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) acc += a[r][j] * lambda[j];
    if (acc != b[r]) throw std::logic_error("rational_feasible: inexact strict solution");
  }
  for (const auto& l : lambda)
    if (l <= 0) throw std::logic_error("rational_feasible: strict witness not positive");
  return lambda;
}

}  // namespace mink
