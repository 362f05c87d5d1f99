#pragma once

#include <optional>

#include "gkz/matrix.hpp"

namespace gkz {

// |det| of d vectors in Z^d; error on linear dependence.
Int lattice_index(const std::vector<IVec>& vectors);

// Nonnegative integer solution x of A x = target with columns of A graded to
// h-degree 1 (so sum x_j = <h,target> is forced).  Exhaustive by grading level.
std::optional<IVec> semigroup_member(const IntMat& A, const IVec& h, const IVec& target);

}  // namespace gkz
