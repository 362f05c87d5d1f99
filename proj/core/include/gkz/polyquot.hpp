#pragma once

#include "gkz/echelon.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

// Finite-dimensional graded quotient of C[x_p : p ray of F] by the
// squarefree non-face monomials and the linear forms given by the ray
// vectors' coordinates.  This is the cohomology presentation attached to a
// (quotient) stacky fan; the total dimension over all Box sectors adds up to
// the normalized volume.
struct PolyQuotient {
  std::vector<int> vars;  // ray positions of the fan, sorted
  size_t dim = 0;
  // basis monomials as exponent vectors over `vars`, grouped by total degree
  std::vector<std::vector<int>> basis;
  std::vector<int> basis_degree;
  // multiplication-by-x_p matrices, indexed like `vars` (dim x dim, rational)
  std::vector<std::vector<QVec>> mult;  // mult[v][col] = image coords of basis[col]

  // coordinates of an arbitrary monomial (exponents over `vars`)
  QVec reduce_monomial(const std::vector<int>& expo) const;

  int var_position(int fan_position) const;  // -1 when not a variable

 private:
  friend PolyQuotient sector_algebra(const StackyFan& Q);
  // per-degree data kept for reduce_monomial
  struct DegreeData {
    std::vector<std::vector<int>> monomials;
    EchelonSpan ideal{0};
    std::vector<size_t> basis_slot;  // monomial index -> global basis index (or SIZE_MAX)
  };
  std::vector<DegreeData> degrees;
};

// Build the quotient algebra of a stacky fan (used per Box sector on the
// quotient fan).  Throws NonArtinian if the graded pieces fail to terminate.
PolyQuotient sector_algebra(const StackyFan& Q);

}  // namespace gkz
