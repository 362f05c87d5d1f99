#pragma once

#include <optional>

#include "gkz/echelon.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

// Lattice points of K cap N of h-degree k, sorted lexicographically.
std::vector<IVec> graded_monomials(const PointConfiguration& c, int k);

// Partial-semigroup product: w1+w2 when both lie in a common maximal cone of
// the triangulation, nothing otherwise.
std::optional<IVec> multiply_monomials(const Triangulation& T, const IVec& w1, const IVec& w2);

// Z_i = sum_j <m_i, v_j> x^{v_j} over rays of the triangulation only.
struct RegularSequence {
  // element i: list of (point index j, coefficient)
  std::vector<std::vector<std::pair<int, Int>>> Z;
};
RegularSequence regular_sequence(const Triangulation& T, const std::vector<IVec>& dual_basis);

// C[K,Sigma]/(Z_1..Z_d), computed degree by degree.
struct SRQuotient {
  const Triangulation* T = nullptr;
  size_t dim = 0;
  std::vector<IVec> basis;  // monomial representatives
  std::vector<int> basis_degree;
  std::vector<std::vector<QVec>> D;  // n multiplication matrices by column; zero off rays

  QVec reduce_point(const IVec& w) const;  // class coordinates of x^w

  struct DegreeData {
    std::vector<IVec> monomials;
    EchelonSpan ideal{0};
    std::vector<size_t> basis_slot;
  };
  std::vector<DegreeData> degrees;
};

SRQuotient quotient_basis(const Triangulation& T,
                          const std::vector<IVec>& dual_basis = {});

// lcm of the lattice indices of all independent d-subsets of the points
Int simplex_index_lcm(const PointConfiguration& c);

struct MBetaTelemetry {
  Int first_success_k = -1;
  Int k_max_used = 0;
  bool boundary_flip = false;  // membership only found at the last k searched
};

// x^w in M(beta): exists k in 1..k_max with (beta - w) + k P w in the
// semigroup of A.  k_max defaults to the constructive bound from the
// membership argument; pass k_max_override to enlarge the search.
bool mbeta_member(const Triangulation& T, const IVec& beta, const IVec& w,
                  MBetaTelemetry* telemetry = nullptr, const Int& k_max_override = 0);

struct LeadingTermModule {
  std::vector<std::vector<IVec>> members_by_degree;
  std::vector<size_t> quotient_dims;  // dim of degree-k piece of M(beta)/Z M(beta)
  size_t total_dim = 0;
  bool truncated = false;  // degree cap hit before the dimensions settled
  bool any_boundary_flip = false;
};
LeadingTermModule mbeta_quotient(const Triangulation& T, const IVec& beta);

// strict interior of K = R>=0 Delta
bool interior_point_of_K(const PointConfiguration& c, const IVec& w);

}  // namespace gkz
