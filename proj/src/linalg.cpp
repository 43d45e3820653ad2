#include <mink/linalg.hpp>

#include <stdexcept>

namespace mink {

IntMatrix::IntMatrix(int r, int c) : rows(r), cols(c) {
  if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  a.assign(static_cast<size_t>(r) * static_cast<size_t>(c), BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticePoint>& columns, int dim) {
  IntMatrix m(dim, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(columns[j].size()) != dim)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (int i = 0; i < dim; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

LatticePoint IntMatrix::column(int c) const {
  LatticePoint out(rows);
  for (int i = 0; i < rows; ++i) out[i] = at(i, c);
  return out;
}

namespace {

// column operations applied to h and mirrored on u (keeps h = a·u)
void col_swap(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_axpy(IntMatrix& m, int dst, int src, const BigInt& q) {
  // column[dst] -= q * column[src]
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) -= q * m.at(r, src);
}

void col_negate(IntMatrix& m, int j) {
  for (int r = 0; r < m.rows; ++r) m.at(r, j) = -m.at(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) throw std::invalid_argument("hnf: empty matrix");
  HnfResult res;
  res.h = a;
  res.u = IntMatrix::identity(a.cols);
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;

  int c = 0;
  for (int r = 0; r < a.rows && c < a.cols; ++r) {
    // gcd sweep: gather the gcd of row r over columns [c, cols) into column c
    bool any = false;
    for (int j = c; j < a.cols; ++j)
      if (h.at(r, j) != 0) { any = true; break; }
    if (!any) continue;  // no pivot in this row

    for (;;) {
      int jmin = -1;
      for (int j = c; j < a.cols; ++j) {
        if (h.at(r, j) == 0) continue;
        if (jmin < 0 || abs(h.at(r, j)) < abs(h.at(r, jmin))) jmin = j;
      }
      col_swap(h, c, jmin);
      col_swap(u, c, jmin);
      bool clean = true;
      for (int j = c + 1; j < a.cols; ++j) {
        if (h.at(r, j) == 0) continue;
        BigInt q = h.at(r, j) / h.at(r, c);  // truncated quotient
        col_axpy(h, j, c, q);
        col_axpy(u, j, c, q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) < 0) {
      col_negate(h, c);
      col_negate(u, c);
    }
    // reduce entries left of the pivot into [0, pivot)
    for (int j = 0; j < c; ++j) {
      if (h.at(r, j) == 0) continue;
      BigInt q = h.at(r, j) / h.at(r, c);
      if (h.at(r, j) - q * h.at(r, c) < 0) --q;  // floor division
      col_axpy(h, j, c, q);
      col_axpy(u, j, c, q);
    }
    res.pivots.emplace_back(r, c);
    ++c;
  }
  return res;
}

std::optional<std::vector<BigInt>> solve_integer_linear(const IntMatrix& a,
                                                        const std::vector<BigInt>& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("solve_integer_linear: rhs length mismatch");
  if (a.rows == 0 || a.cols == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return std::vector<BigInt>(a.cols, BigInt(0));
  }

  HnfResult hr = hnf(a);
  const IntMatrix& h = hr.h;
  // forward-substitute h·y = b: pivot rows determine y, other rows are checks
  std::vector<BigInt> y(a.cols, BigInt(0));
  size_t next_pivot = 0;
  for (int r = 0; r < a.rows; ++r) {
    BigInt acc = 0;
    for (int j = 0; j < a.cols; ++j)
      if (y[j] != 0 && h.at(r, j) != 0) acc += h.at(r, j) * y[j];
    if (next_pivot < hr.pivots.size() && hr.pivots[next_pivot].first == r) {
      int pc = hr.pivots[next_pivot].second;
      BigInt rem = b[r] - acc;
      if (rem % h.at(r, pc) != 0) return std::nullopt;  // not an integral system
      y[pc] = rem / h.at(r, pc);
      ++next_pivot;
    } else {
      if (acc != b[r]) return std::nullopt;  // inconsistent row
    }
  }
  // x = u·y
  std::vector<BigInt> x(a.cols, BigInt(0));
  for (int i = 0; i < a.cols; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < a.cols; ++j)
      if (y[j] != 0 && hr.u.at(i, j) != 0) acc += hr.u.at(i, j) * y[j];
    x[i] = acc;
  }
  return x;
}

int rank_int(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  return hnf(a).rank();
}

std::vector<BigInt> mat_vec(const IntMatrix& a, const std::vector<BigInt>& x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw std::invalid_argument("mat_vec: length mismatch");
  std::vector<BigInt> out(a.rows, BigInt(0));
  for (int r = 0; r < a.rows; ++r) {
    BigInt acc = 0;
    for (int j = 0; j < a.cols; ++j)
      if (a.at(r, j) != 0 && x[j] != 0) acc += a.at(r, j) * x[j];
    out[r] = acc;
  }
  return out;
}

}  // namespace mink
