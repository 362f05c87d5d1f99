#pragma once

#include "gkz/numeric.hpp"

namespace gkz {

// Dense matrix of arbitrary-precision integers.  Row-major, immutable in
// spirit: operations return new matrices.
struct IntMat {
  size_t rows = 0, cols = 0;
  IVec a;  // rows*cols entries

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  static IntMat from_rows(const std::vector<IVec>& rs) {
    IntMat m(rs.size(), rs.empty() ? 0 : rs[0].size());
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    return m;
  }
  static IntMat identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
  IVec row(size_t i) const { return IVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  IVec col(size_t j) const {
    IVec c(rows);
    for (size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }
  IntMat transpose() const {
    IntMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMat mul(const IntMat& A, const IntMat& B);
IVec mul_vec(const IntMat& A, const IVec& x);
Int det(const IntMat& A);  // square only (fraction-free Gaussian elimination)

// Row Hermite normal form: returns (H, U) with U unimodular, U*M = H,
// H in row echelon form with positive pivots and entries above each pivot
// reduced into [0, pivot).
struct HNFResult {
  IntMat H, U;
  std::vector<size_t> pivot_cols;  // one per nonzero row of H
};
HNFResult hermite_normal_form(const IntMat& M);

// Smith normal form: U*M*V = D diagonal with d_i | d_{i+1}, U, V unimodular.
struct SNFResult {
  IntMat U, D, V;
  std::vector<Int> invariants;  // nonzero diagonal entries
};
SNFResult smith_normal_form(const IntMat& M);

// Z-basis of the integer kernel {x : M x = 0}.
std::vector<IVec> kernel_lattice(const IntMat& M);

// One integer solution of M x = c, if any.
bool solve_integer(const IntMat& M, const IVec& c, IVec& out);

// Rank over Q.
size_t rank_q(const IntMat& M);

// Exact rational linear algebra on small dense systems -----------------------

struct QMat {
  size_t rows = 0, cols = 0;
  QVec a;
  QMat() = default;
  QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  Rat& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
  static QMat from_int(const IntMat& m) {
    QMat q(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
    return q;
  }
};

// Solve A x = b exactly; returns false if inconsistent.  When the system is
// underdetermined returns the solution with free variables set to zero
// (deterministic pivot order: first usable column).
bool solve_rational(const QMat& A, const QVec& b, QVec& out);

// Null space basis of A over Q (deterministic).
std::vector<QVec> nullspace_rational(const QMat& A);

}  // namespace gkz
