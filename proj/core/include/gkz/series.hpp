#pragma once

#include <map>

#include "gkz/ktheory.hpp"
#include "gkz/secondary.hpp"

namespace gkz {

// Exponent vectors gamma^v, one per Box sector (in the order of box_elements):
// sum_j gamma_j v_j = beta, gamma_j congruent to the sector eigenangle mod Z,
// shifted into the position guaranteeing support inside the series cone.
struct ExponentChoice {
  IVec beta;
  std::vector<QVec> gamma;      // per sector, length n
  std::vector<IVec> shift_L;    // the applied shift b, L-coordinates
};

ExponentChoice choose_gamma(const Triangulation& T, const IVec& beta);

// Admissible lattice elements up to a 1-norm bound: the coordinates j with
// l_j + gamma_j outside Z>=0 must sit inside a single maximal cell (an
// essential one when the circuit is supplied).
struct SupportEnumerator {
  std::vector<IVec> elements;  // ambient coordinates, lex sorted
  std::vector<int> witness;    // index of the first admitting cell
  Int bound = 0;
};

SupportEnumerator enumerate_support(const Triangulation& T, const QVec& gamma,
                                    const Int& bound, bool essential_only = false,
                                    const Circuit* circuit = nullptr,
                                    bool plus_side = true);

// Product over j of the jet matrices of s -> z_j^{a_j+s}/Gamma(a_j+1+s)
// evaluated at s = D_j, on one sector.
CMat xi_term(const KSector& s, const std::vector<cplx>& logz, const std::vector<cplx>& a);

// One sector's series sum applied to the sector unit:
//   sum_{l in sup} prod_j M_j(l_j + gamma_j + h_j theta) (1),
// summed shell by shell in |l|_1; `tail` receives the geometric tail estimate.
CVec xi_series(const KSector& s, const SupportEnumerator& sup, const QVec& gamma,
               const std::vector<cplx>& logz, const IVec* h = nullptr,
               cplx theta = 0, double* tail = nullptr);

struct XiResult {
  std::vector<CVec> sector;
  CVec total;        // concatenation in sector order
  double tail = 0;   // max of the per-sector tail estimates
};

// The K-theory valued series at z (which must lie in U), truncated at |l|<=bound.
XiResult evaluate_Xi(const Triangulation& T, const KRing& K, const ExponentChoice& choice,
                     const ZPoint& z, const Int& bound, const DomainSpec* U = nullptr);

// The SR-valued series computed directly on the quotient algebra (independent
// cross-check of Ch applied to evaluate_Xi).
struct PsiResult {
  CVec value;  // coordinates in the SRQuotient basis
  double tail = 0;
};
PsiResult evaluate_Psi(const Triangulation& T, const SRQuotient& S, const KRing& K,
                       const ExponentChoice& choice, const ZPoint& z, const Int& bound);

// Scalar GKZ solution: functional applied to the Xi vector.
cplx ms_map(const XiResult& xi, const CVec& functional);

// A truncated scalar solution as explicit terms c * z^{o+gamma} * prod log^m z:
// the key is the integer offset o, the value maps log-exponent tuples to
// coefficients.
struct SeriesTerms {
  QVec gamma;
  std::map<IVec, std::map<std::vector<int>, cplx>> terms;
};

// Term list of the scalar solution f(Xi_v) for one sector.
SeriesTerms ms_terms(const KSector& s, const SupportEnumerator& sup, const QVec& gamma,
                     const CVec& functional);

struct ResidualReport {
  double euler_max = 0;   // largest Euler-operator residual modulus at z
  double box_max = 0;     // largest box-operator residual modulus at z
  double tail_bound = 0;  // truncation tail estimate with derivative slack
};

// Apply every box operator (one per relation-basis element) and every Euler
// operator to the term list exactly, then evaluate the surviving terms at z.
ResidualReport gkz_residual(const PointConfiguration& c, const IVec& beta,
                            const SeriesTerms& sol, const ZPoint& z);

}  // namespace gkz
