#pragma once

#include "gkz/cone.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

// Point configuration A = {v_1..v_n} in Z^d on the height-1 hyperplane,
// generating Z^d as a group.
struct PointConfiguration {
  std::vector<IVec> points;       // n vectors of length d
  IVec h;                         // height covector, <h, v_j> = 1
  std::vector<IVec> relation_basis;  // Z-basis of L = ker(Z^n -> Z^d)

  size_t n() const { return points.size(); }
  size_t d() const { return h.size(); }
  IntMat point_matrix() const;  // d x n, columns v_j
};

PointConfiguration validate_configuration(std::vector<IVec> points, IVec h);

// A simplicial fan with explicit (stacky) generator vectors.  For fans coming
// from triangulations the vectors are all n configuration points, whether or
// not they span rays; hat fans append the extra non-primitive vector.
struct StackyFan {
  size_t dim = 0;
  std::vector<IVec> vectors;
  std::vector<int> labels;               // original point index, or n for v-hat
  std::vector<std::vector<int>> cones;   // maximal cones as sorted positions into `vectors`

  bool position_is_ray(int p) const;
  // true iff the set of positions spans a cone (subset of some maximal cone)
  bool spans_cone(const std::vector<int>& positions) const;
};

struct Triangulation {
  const PointConfiguration* config = nullptr;
  std::vector<std::vector<int>> cells;  // sorted d-subsets of {0..n-1}
  QVec height;                          // regularity witness (leading term)

  StackyFan fan() const;
  bool is_ray(int j) const;
};

// Lower-hull cells of the height lift; heights are vectors of rational
// coefficients of 1, eps, eps^2, ... compared lexicographically, so the
// symbolic perturbation variant is the same code path.
Triangulation regular_triangulation(const PointConfiguration& c, const QVec& omega);
Triangulation regular_triangulation_lex(const PointConfiguration& c, const QVec& omega);

Int normalized_volume(const PointConfiguration& c);

struct BoxElement {
  IVec v;                  // lattice point
  QVec q;                  // v = sum q_p * vectors[p], 0 <= q_p < 1, indexed by fan position
  std::vector<int> sigma;  // minimal cone containing v (fan positions, sorted)
};

// All Box elements of the fan, sorted lexicographically by v.
std::vector<BoxElement> box_elements(const StackyFan& F);

struct Circuit {
  IVec h;                       // primitive relation, length n
  std::vector<int> I_plus, I_minus;  // {j : h_j > 0}, {j : h_j < 0}
};

// Circuit of an adjacent pair, signed so that the essential cones of T_plus
// are the cells containing I minus one element of I_plus.
Circuit find_circuit(const Triangulation& T_plus, const Triangulation& T_minus);

struct EssentialCones {
  std::vector<std::vector<int>> cones;       // essential maximal cells
  std::vector<std::vector<int>> separating;  // the F part of each cell
};

// Essential cells of T with respect to the circuit; `plus_side` selects which
// half of the circuit indexes the omitted vertex.
EssentialCones essential_cones(const Triangulation& T, const Circuit& c, bool plus_side);

// The common modification fan: v-hat plus the exchanged cones.
struct HatFan {
  StackyFan fan;
  IVec v_hat;
};
HatFan hat_fan(const Triangulation& T_plus, const Triangulation& T_minus, const Circuit& c);

// Fan in N / saturated span(sigma); ray labels point back to positions in F.
StackyFan quotient_fan(const StackyFan& F, const std::vector<int>& sigma);

}  // namespace gkz
