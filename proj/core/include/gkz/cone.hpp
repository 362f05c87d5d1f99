#pragma once

#include "gkz/matrix.hpp"

namespace gkz {

// Rational polyhedral cone given by a finite generator list (all nonnegative
// rational combinations).  Generators are kept as primitive integer vectors;
// a full-space lineality direction appears with both signs.
struct RationalCone {
  size_t dim = 0;
  std::vector<IVec> generators;

  static RationalCone from_generators(size_t dim, std::vector<QVec> gens);
  static RationalCone from_int_generators(size_t dim, std::vector<IVec> gens);
  static RationalCone zero(size_t dim) { return RationalCone{dim, {}}; }
  static RationalCone full_space(size_t dim);
};

// {u : <u,x> >= 0 for all x in C}, with an explicit generator list.
RationalCone dual_cone(const RationalCone& C);

// Exact membership x in C (decided through the dual description; equivalent
// to LP feasibility for closed rational cones).
bool cone_contains(const RationalCone& C, const QVec& x);

// Membership against a precomputed dual (hot path helper).
bool contains_via_dual(const RationalCone& dual, const QVec& x);

// Strict interior point of C when C is full-dimensional: sum of generators of
// the double dual; throws DegenerateCone otherwise.
QVec interior_point(const RationalCone& C);

bool cone_is_full_dimensional(const RationalCone& C);

}  // namespace gkz
