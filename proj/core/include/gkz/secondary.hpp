#pragma once

#include "gkz/cone.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

// All cone data lives in coordinates with respect to the relation-lattice
// basis of the configuration; `embed`/`project` move between those
// coordinates and the ambient exponent space R^n.

QVec project_to_L(const PointConfiguration& c, const QVec& u);   // u -> (<b_i, u>)_i
QVec embed_from_L(const PointConfiguration& c, const QVec& x);   // x -> sum x_i b_i
QVec lift_to_ambient(const PointConfiguration& c, const QVec& w);  // project(lift(w)) = w

struct SeriesConeFamily {
  size_t nL = 0;
  bool degenerate = false;  // relation lattice is zero
  std::vector<std::vector<QVec>> per_cell;  // generators of C_sigma per cell
  std::vector<QVec> total;                  // generators of C_Sigma
  RationalCone total_dual;                  // C_Sigma^dual
};

// C_sigma = {x in L tensor R : x_j >= 0 for j outside sigma}; the total cone
// is the Minkowski sum over the maximal cells.
SeriesConeFamily build_series_cones(const Triangulation& T);

// Smallest positive integer multiple c = t g0 of the interior direction g0 of
// `dual` with <c, g> >= (margin + log 4n) log max(1, |g|_1) for every primal
// generator; the inequality then persists on all of c + dual.
QVec choose_deep_point(const RationalCone& dual, const Rat& margin,
                       const std::vector<QVec>& primal_gens_L,
                       const PointConfiguration& c);

// Evaluation point with exact branch data: |z_j| = e^{-mlog_j} and
// arg z_j = pi * arg_pi_j, both rational.
struct ZPoint {
  QVec mlog;    // -log|z_j|
  QVec arg_pi;  // in (-1, 1]

  size_t n() const { return mlog.size(); }
  std::vector<cplx> values() const;
  std::vector<cplx> log_values() const;  // the fixed branch of log z_j
};

// nearest point with dyadic moduli/args (denominator 2^40)
ZPoint zpoint_of(const std::vector<cplx>& z);

// Convergence domain: -log|z| projects into offset + dual, args inside the
// open window (in units of pi).
struct DomainSpec {
  const PointConfiguration* config = nullptr;
  std::vector<QVec> primal_L;  // generators of the primal cone, L-coordinates
  QVec offset;                 // deep offset, L-dual coordinates
  Rat arg_lo_pi = -1, arg_hi_pi = 0;
};

DomainSpec build_domain(const PointConfiguration& c, const std::vector<QVec>& primal_L,
                        const Rat& margin);

// Exact membership; throws Inconclusive when -log|z| meets the cone boundary.
bool domain_contains(const DomainSpec& U, const ZPoint& z);
bool domain_contains(const DomainSpec& U, const std::vector<cplx>& z);  // dyadic + margin

// Log-linear path from z_plus to z_minus with constant arguments:
// -log|z(u)| = base + (a_minus + u (a_plus - a_minus)) h going from the minus
// regime (u=0) to the plus regime (u=1).
struct ContinuationPath {
  Circuit circuit;
  Rat A;                 // -log|z_plus| + log|z_minus| = A h
  QVec base_mlog;        // ambient base point
  Rat a_plus, a_minus;   // offsets along h
  QVec arg_pi;           // shared arguments, in (-pi, 0)
  Rat arg_y_pi;          // arg(y)/pi, constant along the path, in (-2, 0)
  ZPoint z_plus, z_minus;
};

ContinuationPath build_path(const Triangulation& T_plus, const Triangulation& T_minus,
                            const Circuit& c, const Rat& A = 1, const Rat& margin = 1);

}  // namespace gkz
