#include "gkz/lattice.hpp"

namespace gkz {

Int lattice_index(const std::vector<IVec>& vectors) {
  IntMat m = IntMat::from_rows(vectors);
  if (m.rows != m.cols) throw gkz_error("BadShape", "lattice_index needs d vectors in Z^d");
  Int d = det(m);
  if (d == 0) throw gkz_error("DependentVectors", "lattice_index of a dependent set");
  return d < 0 ? -d : d;
}

namespace {

// per-column suffix ranges of the matrix entries, used to prune the search:
// spending `budget` units on columns >= j moves row i by budget * [lo, hi]
struct SuffixRange {
  std::vector<IVec> lo, hi;
  explicit SuffixRange(const IntMat& A) : lo(A.cols), hi(A.cols) {
    for (size_t j = A.cols; j-- > 0;) {
      IVec l = A.col(j), h = A.col(j);
      if (j + 1 < A.cols)
        for (size_t i = 0; i < A.rows; ++i) {
          l[i] = std::min(l[i], lo[j + 1][i]);
          h[i] = std::max(h[i], hi[j + 1][i]);
        }
      lo[j] = l;
      hi[j] = h;
    }
  }
};

bool search(const IntMat& A, const SuffixRange& S, const IVec& target, const Int& budget,
            size_t j, IVec& x) {
  if (j == A.cols) return budget == 0 && is_zero(target);
  for (size_t i = 0; i < A.rows; ++i)
    if (target[i] < budget * S.lo[j][i] || target[i] > budget * S.hi[j][i]) return false;
  for (Int v = budget; v >= 0; --v) {
    IVec t2 = target;
    for (size_t i = 0; i < A.rows; ++i) t2[i] -= v * A(i, j);
    x[j] = v;
    if (search(A, S, t2, budget - v, j + 1, x)) return true;
  }
  x[j] = 0;
  return false;
}

}  // namespace

std::optional<IVec> semigroup_member(const IntMat& A, const IVec& h, const IVec& target) {
  Int level = dot(h, target);
  if (level < 0) return std::nullopt;
  IVec x(A.cols, Int(0));
  SuffixRange S(A);
  if (search(A, S, target, level, 0, x)) return x;
  return std::nullopt;
}

}  // namespace gkz
