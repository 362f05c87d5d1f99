#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "gkz/jets.hpp"
#include "gkz/polyquot.hpp"
#include "gkz/sr_ring.hpp"

namespace gkz {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// e^{2 pi i q} for an exact rational angle
cplx unit_root(const Rat& q);

// One Box sector of the K-theory of the toric stack: the local Artinian
// algebra of the quotient fan together with the commuting operator family
// R_j = y_j exp(D_j) restricted to it.
struct KSector {
  BoxElement box;
  PolyQuotient algebra;   // A_v on the quotient fan Sigma / sigma(v)
  size_t offset = 0;      // start of this block in the total coordinate space
  size_t dim = 0;

  QVec q;                  // eigenangles, length n (q_j = 0 off sigma)
  std::vector<cplx> y;     // y_j = e^{2 pi i q_j}
  std::vector<CMat> D;     // nilpotent multiplication by x_j, zero when absent
  std::vector<int> nil;    // nilpotency order of D_j (D^nil = 0, nil >= 1)
  std::vector<CMat> R;     // y_j exp(D_j)
  std::vector<CMat> Rinv;  // y_j^{-1} exp(-D_j)
};

struct KRing {
  StackyFan F;
  size_t n = 0;          // number of configuration points
  size_t total_dim = 0;  // = normalized volume
  std::vector<KSector> sectors;
};

// Assemble the sector decomposition and verify the Laurent and squarefree
// presentation relations as matrix identities.  The fan overload also covers
// hat fans, whose extra generator is not a configuration point.
KRing build_kring(const StackyFan& F, double tol = 1e-10);
KRing build_kring(const Triangulation& T, double tol = 1e-10);

// exp of a nilpotent matrix by its (finite) Taylor series
CMat exp_nilpotent(const CMat& N, int nil);

// A scalar function of n commuting variables given with its Taylor jets.
// `jet` returns the Taylor coefficients at `base` truncated to `orders`;
// `eval` is the plain value, used for quadrature and for the finite
// difference consistency check; `analytic_at` may veto a base point.
struct JetFunction {
  std::string name;
  std::function<cplx(const std::vector<cplx>&)> eval;
  std::function<MJet(const std::vector<cplx>& base, const std::vector<int>& orders)> jet;
  std::function<bool(const std::vector<cplx>&)> analytic_at;  // empty = everywhere
};

// f(R_1..R_n) per sector by the truncated Taylor jet at the eigen-tuple.
std::vector<CMat> apply_function(const KRing& K, const JetFunction& f);

// The same operator by an iterated Cauchy integral over circles of radius
// delta around the eigenvalues, N trapezoid nodes per axis.
std::vector<CMat> cauchy_function(const KRing& K, const JetFunction& f, double delta, int N);

// Vector-space identification K_0 -> C[K,Sigma]/(Z) sending the sector basis
// monomial prod x_p^{a_p} to the class of x^{v + sum a_p v_p}; verified to
// intertwine R_j with y_j e^{D_j} on the target.
struct ChMap {
  std::vector<CMat> C;  // per sector: (SR dim) x (sector dim)
};
ChMap ch_isomorphism(const KRing& K, const SRQuotient& S, double tol = 1e-10);

// convenience: complex copy of a rational matrix given by columns
CMat cmat_of(const std::vector<QVec>& cols);

}  // namespace gkz
