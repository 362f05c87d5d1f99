#include "gkz/matrix.hpp"

#include <algorithm>

namespace gkz {

IntMat mul(const IntMat& A, const IntMat& B) {
  IntMat C(A.rows, B.cols);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.cols; ++k) {
      if (A(i, k) == 0) continue;
      for (size_t j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

IVec mul_vec(const IntMat& A, const IVec& x) {
  IVec y(A.rows, Int(0));
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

Int det(const IntMat& A) {
  if (A.rows != A.cols) throw gkz_error("BadShape", "det needs a square matrix");
  size_t n = A.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMat m = A;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

HNFResult hermite_normal_form(const IntMat& M) {
  size_t r = M.rows, c = M.cols;
  IntMat H = M, U = IntMat::identity(r);
  auto row_op = [&](IntMat& X, size_t i, size_t j, const Int& q) {
    // row_i -= q * row_j
    for (size_t k = 0; k < X.cols; ++k) X(i, k) -= q * X(j, k);
  };
  size_t row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < c && row < r; ++col) {
    // clear the column below `row` by gcd steps
    while (true) {
      size_t nz = r;  // row > `row` with smallest nonzero |entry|
      for (size_t i = row + 1; i < r; ++i)
        if (H(i, col) != 0 && (nz == r || abs(H(i, col)) < abs(H(nz, col)))) nz = i;
      if (nz == r) break;
      if (H(row, col) == 0 || abs(H(nz, col)) < abs(H(row, col))) {
        for (size_t k = 0; k < c; ++k) std::swap(H(row, k), H(nz, k));
        for (size_t k = 0; k < r; ++k) std::swap(U(row, k), U(nz, k));
      }
      for (size_t i = row + 1; i < r; ++i) {
        if (H(i, col) == 0) continue;
        Int q = H(i, col) / H(row, col);
        row_op(H, i, row, q);
        row_op(U, i, row, q);
      }
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      for (size_t k = 0; k < c; ++k) H(row, k) = -H(row, k);
      for (size_t k = 0; k < r; ++k) U(row, k) = -U(row, k);
    }
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < row; ++i) {
      Int q = H(i, col) / H(row, col);
      if (H(i, col) - q * H(row, col) < 0) --q;
      if (q != 0) {
        row_op(H, i, row, q);
        row_op(U, i, row, q);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(H), std::move(U), std::move(pivots)};
}

SNFResult smith_normal_form(const IntMat& M) {
  size_t r = M.rows, c = M.cols;
  IntMat D = M, U = IntMat::identity(r), V = IntMat::identity(c);
  size_t t = 0;
  auto nonzero_exists = [&](size_t k) {
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < c; ++j)
        if (D(i, j) != 0) return true;
    return false;
  };
  while (t < r && t < c && nonzero_exists(t)) {
    // move a minimal nonzero entry to (t,t)
    size_t bi = t, bj = t;
    Int best = 0;
    for (size_t i = t; i < r; ++i)
      for (size_t j = t; j < c; ++j)
        if (D(i, j) != 0 && (best == 0 || abs(D(i, j)) < best)) {
          best = abs(D(i, j));
          bi = i;
          bj = j;
        }
    for (size_t k = 0; k < c; ++k) std::swap(D(t, k), D(bi, k));
    for (size_t k = 0; k < r; ++k) std::swap(U(t, k), U(bi, k));
    for (size_t k = 0; k < r; ++k) std::swap(D(k, t), D(k, bj));
    for (size_t k = 0; k < c; ++k) std::swap(V(k, t), V(k, bj));

    bool clean = true;
    for (size_t i = t + 1; i < r; ++i) {
      Int q = D(i, t) / D(t, t);
      if (q != 0) {
        for (size_t k = 0; k < c; ++k) D(i, k) -= q * D(t, k);
        for (size_t k = 0; k < r; ++k) U(i, k) -= q * U(t, k);
      }
      if (D(i, t) != 0) clean = false;
    }
    for (size_t j = t + 1; j < c; ++j) {
      Int q = D(t, j) / D(t, t);
      if (q != 0) {
        for (size_t k = 0; k < r; ++k) D(k, j) -= q * D(k, t);
        for (size_t k = 0; k < c; ++k) V(k, j) -= q * V(k, t);
      }
      if (D(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // repeat with smaller entries
    // divisibility condition d_t | D(i,j)
    bool divides = true;
    for (size_t i = t + 1; i < r && divides; ++i)
      for (size_t j = t + 1; j < c && divides; ++j)
        if (D(i, j) % D(t, t) != 0) {
          // add row i to row t, retry
          for (size_t k = 0; k < c; ++k) D(t, k) += D(i, k);
          for (size_t k = 0; k < r; ++k) U(t, k) += U(i, k);
          divides = false;
        }
    if (!divides) continue;
    if (D(t, t) < 0) {
      for (size_t k = 0; k < c; ++k) D(t, k) = -D(t, k);
      for (size_t k = 0; k < r; ++k) U(t, k) = -U(t, k);
    }
    ++t;
  }
  SNFResult res{std::move(U), std::move(D), std::move(V), {}};
  for (size_t i = 0; i < std::min(r, c); ++i)
    if (res.D(i, i) != 0) res.invariants.push_back(res.D(i, i));
  return res;
}

std::vector<IVec> kernel_lattice(const IntMat& M) {
  // Row-reduce M^T: U * M^T = H.  Rows of U matching zero rows of H form a
  // basis of the left kernel of M^T, i.e. of {x : M x = 0}, and the basis is
  // automatically saturated (U is unimodular).
  auto res = hermite_normal_form(M.transpose());
  std::vector<IVec> basis;
  size_t nzrows = res.pivot_cols.size();
  for (size_t i = nzrows; i < res.H.rows; ++i) basis.push_back(res.U.row(i));
  // deterministic orientation: first nonzero entry positive, lex sorted
  for (auto& b : basis) {
    for (auto& x : b) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : b) y = -y;
        break;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

bool solve_integer(const IntMat& M, const IVec& c, IVec& out) {
  // U M V = D  =>  x = V y with D y = U c
  auto s = smith_normal_form(M);
  IVec uc = mul_vec(s.U, c);
  size_t n = M.cols;
  IVec y(n, Int(0));
  size_t rk = s.invariants.size();
  for (size_t i = 0; i < M.rows; ++i) {
    if (i < rk) {
      if (uc[i] % s.D(i, i) != 0) return false;
      y[i] = uc[i] / s.D(i, i);
    } else if (uc[i] != 0) {
      return false;
    }
  }
  out = mul_vec(s.V, y);
  return true;
}

size_t rank_q(const IntMat& M) {
  return hermite_normal_form(M).pivot_cols.size();
}

bool solve_rational(const QMat& A, const QVec& b, QVec& out) {
  size_t r = A.rows, c = A.cols;
  QMat m(r, c + 1);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < c; ++j) m(i, j) = A(i, j);
    m(i, c) = b[i];
  }
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t p = row;
    while (p < r && m(p, col) == 0) ++p;
    if (p == r) continue;
    for (size_t k = 0; k <= c; ++k) std::swap(m(row, k), m(p, k));
    Rat inv = m(row, col);
    for (size_t k = col; k <= c; ++k) m(row, k) /= inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (size_t k = col; k <= c; ++k) m(i, k) -= f * m(row, k);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < r; ++i)
    if (m(i, c) != 0) return false;
  out.assign(c, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = m(i, c);
  return true;
}

std::vector<QVec> nullspace_rational(const QMat& A) {
  size_t r = A.rows, c = A.cols;
  QMat m = A;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t p = row;
    while (p < r && m(p, col) == 0) ++p;
    if (p == r) continue;
    for (size_t k = 0; k < c; ++k) std::swap(m(row, k), m(p, k));
    Rat inv = m(row, col);
    for (size_t k = col; k < c; ++k) m(row, k) /= inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (size_t k = col; k < c; ++k) m(i, k) -= f * m(row, k);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(c, false);
  for (auto p : pivot_col) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    QVec v(c, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gkz
