#pragma once

#include "gkz/numeric.hpp"

namespace gkz {

// Exact row echelon span with recorded pivot positions.  reduce() is the
// workhorse for "express this vector modulo the ideal in the chosen basis".
struct EchelonSpan {
  size_t dim;
  std::vector<QVec> rows;
  std::vector<size_t> pivots;

  explicit EchelonSpan(size_t d) : dim(d) {}

  QVec reduce(QVec v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (v[pivots[i]] != 0) {
        Rat f = v[pivots[i]];
        for (size_t k = 0; k < dim; ++k) v[k] -= f * rows[i][k];
      }
    }
    return v;
  }

  // pivot selection scans from the back so the surviving (non-pivot) basis
  // monomials are the earliest in the chosen monomial order
  bool add(QVec v) {
    v = reduce(std::move(v));
    size_t p = dim;
    for (size_t k = dim; k-- > 0;) {
      if (v[k] != 0) {
        p = k;
        break;
      }
    }
    if (p == dim) return false;
    Rat inv = v[p];
    for (auto& x : v) x /= inv;
    // back-substitute into existing rows to keep reduce() single-pass safe
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][p] != 0) {
        Rat f = rows[i][p];
        for (size_t k = 0; k < dim; ++k) rows[i][k] -= f * v[k];
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  bool is_pivot(size_t k) const {
    for (auto p : pivots)
      if (p == k) return true;
    return false;
  }
};

}  // namespace gkz
