#include "liecert/matrix.hpp"

#include <algorithm>

namespace liecert {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::row_submul(int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < cols; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::col_submul(int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows; ++r) at(r, i) -= q * at(r, j);
}

void IntMatrix::row_add(int i, int j) {
  for (int c = 0; c < cols; ++c) at(i, c) += at(j, c);
}

Int IntMatrix::det() const {
  if (rows != cols) throw Error(ErrorCode::Internal, "det of non-square matrix");
  int n = rows;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  Int d = m.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    // Euclidean elimination in this column among rows >= r.
    while (true) {
      int p = -1;
      for (int i = r; i < m.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (p < 0 || cmp(abs(h.at(i, col)), abs(h.at(p, col))) < 0) p = i;
      }
      if (p < 0) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool leftover = false;
      for (int i = r + 1; i < m.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = fdiv(h.at(i, col), h.at(r, col));
        h.row_submul(i, r, q);
        u.row_submul(i, r, q);
        if (h.at(i, col) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, col), h.at(r, col));
      h.row_submul(i, r, q);
      u.row_submul(i, r, q);
    }
    ++r;
  }
  return {h, u};
}

namespace {

bool snf_lone(const IntMatrix& s, int k) {
  for (int i = k + 1; i < s.rows; ++i)
    if (s.at(i, k) != 0) return false;
  for (int j = k + 1; j < s.cols; ++j)
    if (s.at(k, j) != 0) return false;
  return true;
}

// (row, col) of the minimum-absolute-value nonzero entry of s[k.., k..];
// (-1, -1) when the submatrix is zero.
std::pair<int, int> snf_pivot(const IntMatrix& s, int k) {
  int bi = -1, bj = -1;
  for (int i = k; i < s.rows; ++i)
    for (int j = k; j < s.cols; ++j) {
      if (s.at(i, j) == 0) continue;
      if (bi < 0 || cmp(abs(s.at(i, j)), abs(s.at(bi, bj))) < 0) {
        bi = i;
        bj = j;
      }
    }
  return {bi, bj};
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  IntMatrix v = IntMatrix::identity(m.cols);
  int n = std::min(m.rows, m.cols);
  for (int k = 0; k < n; ++k) {
    while (true) {
      auto [pi, pj] = snf_pivot(s, k);
      if (pi < 0) break;  // submatrix zero
      if (snf_lone(s, k) && pi == k && pj == k) {
        // Pivot isolated; pull in a row holding an entry it does not divide,
        // else done.
        int di = -1;
        for (int i = k + 1; i < s.rows && di < 0; ++i)
          for (int j = k + 1; j < s.cols; ++j)
            if (s.at(i, j) % s.at(k, k) != 0) { di = i; break; }
        if (di < 0) break;
        s.row_add(k, di);
        u.row_add(k, di);
      }
      auto [qi, qj] = snf_pivot(s, k);
      s.swap_rows(k, qi);
      u.swap_rows(k, qi);
      s.swap_cols(k, qj);
      v.swap_cols(k, qj);
      for (int i = k + 1; i < s.rows; ++i) {
        Int q = fdiv(s.at(i, k), s.at(k, k));
        s.row_submul(i, k, q);
        u.row_submul(i, k, q);
      }
      for (int j = k + 1; j < s.cols; ++j) {
        Int q = fdiv(s.at(k, j), s.at(k, k));
        s.col_submul(j, k, q);
        v.col_submul(j, k, q);
      }
      if (snf_lone(s, k)) {
        bool divides_all = true;
        for (int i = k + 1; i < s.rows && divides_all; ++i)
          for (int j = k + 1; j < s.cols; ++j)
            if (s.at(i, j) % s.at(k, k) != 0) { divides_all = false; break; }
        if (divides_all) break;
      }
    }
    if (s.at(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
  }
  return {s, u, v};
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

void RatMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

std::vector<Rat> RatMatrix::mul_vec(const std::vector<Rat>& v) const {
  std::vector<Rat> r(rows);
  for (int i = 0; i < rows; ++i) {
    Rat acc = 0;
    for (int j = 0; j < cols; ++j) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Rat RatMatrix::det() const {
  if (rows != cols) throw Error(ErrorCode::Internal, "det of non-square matrix");
  RatMatrix m = *this;
  Rat d = 1;
  for (int k = 0; k < rows; ++k) {
    int p = -1;
    for (int i = k; i < rows; ++i)
      if (m.at(i, k) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (int i = k + 1; i < rows; ++i) {
      Rat f = m.at(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < cols; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows != cols) throw Error(ErrorCode::Internal, "inverse of non-square matrix");
  RatMatrix m = *this;
  RatMatrix inv = RatMatrix::identity(rows);
  for (int k = 0; k < rows; ++k) {
    int p = -1;
    for (int i = k; i < rows; ++i)
      if (m.at(i, k) != 0) { p = i; break; }
    if (p < 0) return std::nullopt;
    if (p != k) {
      m.swap_rows(p, k);
      inv.swap_rows(p, k);
    }
    Rat f = 1 / m.at(k, k);
    for (int j = 0; j < cols; ++j) {
      m.at(k, j) *= f;
      inv.at(k, j) *= f;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == k || m.at(i, k) == 0) continue;
      Rat g = m.at(i, k);
      for (int j = 0; j < cols; ++j) {
        m.at(i, j) -= g * m.at(k, j);
        inv.at(i, j) -= g * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
  RatMatrix m = a;
  std::vector<Rat> rhs = b;
  std::vector<int> pivot_col_of_row(a.rows, -1);
  int r = 0;
  for (int col = 0; col < a.cols && r < a.rows; ++col) {
    int p = -1;
    for (int i = r; i < a.rows; ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) {
      m.swap_rows(p, r);
      std::swap(rhs[p], rhs[r]);
    }
    Rat f = 1 / m.at(r, col);
    for (int j = col; j < a.cols; ++j) m.at(r, j) *= f;
    rhs[r] *= f;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat g = m.at(i, col);
      for (int j = col; j < a.cols; ++j) m.at(i, j) -= g * m.at(r, j);
      rhs[i] -= g * rhs[r];
    }
    pivot_col_of_row[r] = col;
    ++r;
  }
  for (int i = r; i < a.rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rat> x(a.cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = rhs[i];
  return x;
}

}  // namespace liecert
