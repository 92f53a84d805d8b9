#pragma once

#include <optional>
#include <vector>

#include "liecert/rational.hpp"

namespace liecert {

/// Dense integer matrix with exact arithmetic.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(int n);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transposed() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  // row i -= q * row j
  void row_submul(int i, int j, const Int& q);
  // col i -= q * col j
  void col_submul(int i, int j, const Int& q);
  // row i += row j
  void row_add(int i, int j);

  // Exact determinant (Bareiss). Requires a square matrix.
  Int det() const;
};

/// H = U*M with U unimodular and H in row-style Hermite normal form:
/// row echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). H is the canonical representative of the row lattice of M.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

/// S = U*M*V diagonal with nonnegative entries, each dividing the next;
/// U and V unimodular.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;
  RatMatrix transposed() const;
  void swap_rows(int i, int j);

  std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;

  Rat det() const;
  // Gauss-Jordan; nullopt when singular.
  std::optional<RatMatrix> inverse() const;
};

/// Solves A x = b exactly. Returns nullopt when inconsistent; free variables,
/// if any, are set to zero (all our uses have unique solutions).
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace liecert
