#include "gkz/sr_ring.hpp"

#include <algorithm>

namespace gkz {

namespace {

RationalCone cone_K(const PointConfiguration& c) {
  return RationalCone::from_int_generators(c.d(), c.points);
}

bool point_in_cell(const PointConfiguration& c, const std::vector<int>& cell, const IVec& w) {
  size_t d = c.d();
  QMat V(d, d);
  for (size_t col = 0; col < d; ++col)
    for (size_t row = 0; row < d; ++row) V(row, col) = Rat(c.points[cell[col]][row]);
  QVec lambda;
  if (!solve_rational(V, qvec_of(w), lambda)) return false;
  for (auto& l : lambda)
    if (l < 0) return false;
  return true;
}

}  // namespace

std::vector<IVec> graded_monomials(const PointConfiguration& c, int k) {
  std::vector<IVec> out;
  if (k < 0) return out;
  if (k == 0) {
    out.push_back(IVec(c.d(), Int(0)));
    return out;
  }
  size_t d = c.d();
  IVec lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    Int mn = c.points[0][i], mx = c.points[0][i];
    for (auto& p : c.points) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = Int(k) * mn;
    hi[i] = Int(k) * mx;
  }
  RationalCone Kd = dual_cone(cone_K(c));
  IVec w = lo;
  while (true) {
    if (dot(c.h, w) == k && contains_via_dual(Kd, qvec_of(w))) out.push_back(w);
    size_t i = 0;
    for (; i < d; ++i) {
      if (w[i] < hi[i]) {
        ++w[i];
        break;
      }
      w[i] = lo[i];
    }
    if (i == d) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<IVec> multiply_monomials(const Triangulation& T, const IVec& w1, const IVec& w2) {
  for (auto& cell : T.cells)
    if (point_in_cell(*T.config, cell, w1) && point_in_cell(*T.config, cell, w2))
      return add(w1, w2);
  return std::nullopt;
}

RegularSequence regular_sequence(const Triangulation& T, const std::vector<IVec>& dual_basis) {
  const auto& c = *T.config;
  std::vector<IVec> basis = dual_basis;
  if (basis.empty()) {
    for (size_t i = 0; i < c.d(); ++i) {
      IVec e(c.d(), Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
  }
  // must be a Z-basis of the dual lattice
  Int dt = det(IntMat::from_rows(basis));
  if (dt != 1 && dt != -1) throw gkz_error("BadBasis", "dual basis not unimodular");
  RegularSequence rs;
  for (auto& m : basis) {
    std::vector<std::pair<int, Int>> zi;
    for (size_t j = 0; j < c.n(); ++j) {
      if (!T.is_ray((int)j)) continue;
      Int coeff = dot(m, c.points[j]);
      if (coeff != 0) zi.emplace_back((int)j, coeff);
    }
    rs.Z.push_back(std::move(zi));
  }
  return rs;
}

QVec SRQuotient::reduce_point(const IVec& w) const {
  Int degi = dot(T->config->h, w);
  QVec out(dim, Rat(0));
  if (degi < 0) return out;
  size_t deg = (size_t)to_long(degi);
  if (deg >= degrees.size()) return out;
  const auto& dd = degrees[deg];
  auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), w, lex_less);
  if (it == dd.monomials.end() || *it != w) return out;  // not in K cap N
  size_t idx = it - dd.monomials.begin();
  QVec unit(dd.monomials.size(), Rat(0));
  unit[idx] = 1;
  QVec rem = dd.ideal.reduce(std::move(unit));
  for (size_t k = 0; k < rem.size(); ++k) {
    if (rem[k] == 0) continue;
    if (dd.basis_slot[k] == SIZE_MAX)
      throw gkz_error("InternalError", "nonzero remainder on a pivot monomial");
    out[dd.basis_slot[k]] += rem[k];
  }
  return out;
}

SRQuotient quotient_basis(const Triangulation& T, const std::vector<IVec>& dual_basis) {
  const auto& c = *T.config;
  RegularSequence rs = regular_sequence(T, dual_basis);
  SRQuotient Q;
  Q.T = &T;

  // the algebra is generated by monomials of h-degree up to the largest Box
  // element degree, so that many consecutive zero graded pieces end the run
  int gap = 1;
  for (auto& be : box_elements(T.fan()))
    gap = std::max(gap, (int)to_long(dot(c.h, be.v)));

  const int max_degree = 30;
  int zeros_in_a_row = 0;
  for (int k = 0; zeros_in_a_row < gap; ++k) {
    if (k > max_degree)
      throw gkz_error("NonArtinian", "graded quotient does not terminate");
    SRQuotient::DegreeData dd;
    dd.monomials = graded_monomials(c, k);
    size_t nm = dd.monomials.size();
    dd.ideal = EchelonSpan(nm);
    auto mono_index = [&](const IVec& w) -> size_t {
      auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), w, lex_less);
      if (it == dd.monomials.end() || *it != w)
        throw gkz_error("InternalError", "product monomial missing from graded space");
      return it - dd.monomials.begin();
    };
    if (k >= 1) {
      for (auto& w : graded_monomials(c, k - 1)) {
        for (auto& zi : rs.Z) {
          QVec v(nm, Rat(0));
          bool nonzero = false;
          for (auto& [j, coeff] : zi) {
            auto prod = multiply_monomials(T, c.points[j], w);
            if (!prod) continue;
            v[mono_index(*prod)] += Rat(coeff);
            nonzero = true;
          }
          if (nonzero) dd.ideal.add(std::move(v));
        }
      }
    }
    dd.basis_slot.assign(nm, SIZE_MAX);
    size_t added = 0;
    for (size_t i = 0; i < nm; ++i) {
      if (dd.ideal.is_pivot(i)) continue;
      dd.basis_slot[i] = Q.basis.size();
      Q.basis.push_back(dd.monomials[i]);
      Q.basis_degree.push_back(k);
      ++added;
    }
    Q.degrees.push_back(std::move(dd));
    zeros_in_a_row = added == 0 ? zeros_in_a_row + 1 : 0;
  }
  Q.dim = Q.basis.size();

  Q.D.assign(c.n(), {});
  for (size_t j = 0; j < c.n(); ++j) {
    Q.D[j].assign(Q.dim, QVec(Q.dim, Rat(0)));
    if (!T.is_ray((int)j)) continue;
    for (size_t col = 0; col < Q.dim; ++col) {
      auto prod = multiply_monomials(T, c.points[j], Q.basis[col]);
      if (prod) Q.D[j][col] = Q.reduce_point(*prod);
    }
  }
  return Q;
}

Int simplex_index_lcm(const PointConfiguration& c) {
  size_t n = c.n(), d = c.d();
  Int P = 1;
  std::vector<size_t> B(d);
  for (size_t i = 0; i < d; ++i) B[i] = i;
  while (true) {
    IntMat M(d, d);
    for (size_t row = 0; row < d; ++row)
      for (size_t col = 0; col < d; ++col) M(row, col) = c.points[B[row]][col];
    Int dt = det(M);
    if (dt != 0) P = boost::multiprecision::lcm(P, abs(dt));
    size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (B[i] != n - d + i) {
        ++B[i];
        for (size_t k = i + 1; k < d; ++k) B[k] = B[k - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return P;
}

bool mbeta_member(const Triangulation& T, const IVec& beta, const IVec& w,
                  MBetaTelemetry* telemetry, const Int& k_max_override) {
  const auto& c = *T.config;
  IntMat A = c.point_matrix();
  Int P = simplex_index_lcm(c);

  if (is_zero(w)) {
    bool ok = semigroup_member(A, c.h, beta).has_value();
    if (telemetry) {
      telemetry->k_max_used = 1;
      telemetry->first_success_k = ok ? 1 : -1;
    }
    return ok;
  }

  // constructive bound on k from an integer representation r of beta - w and
  // the rational coordinates of w inside each cell containing it
  IVec r;
  if (!solve_integer(A, sub(beta, w), r))
    throw gkz_error("InternalError", "beta - w has no integer representation");
  Int min_r = r[0];
  for (auto& x : r) min_r = std::min(min_r, x);
  Int k_max = 1;
  for (auto& cell : T.cells) {
    size_t d = c.d();
    QMat V(d, d);
    for (size_t col = 0; col < d; ++col)
      for (size_t row = 0; row < d; ++row) V(row, col) = Rat(c.points[cell[col]][row]);
    QVec lambda;
    if (!solve_rational(V, qvec_of(w), lambda)) continue;
    bool inside = true;
    for (auto& l : lambda)
      if (l < 0) inside = false;
    if (!inside) continue;
    // smallest k with r_j + k P lambda_j > 0 on the support and k P > 1 - min r
    Int k_cell = 1;
    for (size_t i = 0; i < d; ++i) {
      if (lambda[i] == 0) continue;
      // k > -r_j / (P lambda_j)
      Rat bound = Rat(-r[cell[i]]) / (Rat(P) * lambda[i]);
      Int k_need = floor_rat(bound) + 1;
      k_cell = std::max(k_cell, k_need);
    }
    Rat bound = Rat(1 - min_r) / Rat(P);
    k_cell = std::max(k_cell, floor_rat(bound) + 1);
    k_max = std::max(k_max, k_cell);
  }
  k_max += 2;  // slack; results that only appear at the edge are flagged
  if (k_max_override > 0) k_max = k_max_override;

  bool found = false;
  Int found_k = -1;
  for (Int k = 1; k <= k_max; ++k) {
    IVec target = sub(beta, w);
    target = add(target, scale(k * P, w));
    if (semigroup_member(A, c.h, target)) {
      found = true;
      found_k = k;
      break;
    }
  }
  if (telemetry) {
    telemetry->k_max_used = k_max;
    telemetry->first_success_k = found_k;
    telemetry->boundary_flip = found && found_k == k_max;
  }
  return found;
}

LeadingTermModule mbeta_quotient(const Triangulation& T, const IVec& beta) {
  const auto& c = *T.config;
  RegularSequence rs = regular_sequence(T, {});
  LeadingTermModule M;
  int gap = 1 + (int)c.d();
  for (auto& be : box_elements(T.fan()))
    gap = std::max(gap, (int)to_long(dot(c.h, be.v)));

  const int max_degree = 24;
  int zeros_in_a_row = 0;
  for (int k = 0; zeros_in_a_row < gap; ++k) {
    if (k > max_degree) {
      M.truncated = true;
      break;
    }
    auto all = graded_monomials(c, k);
    std::vector<IVec> members;
    for (auto& w : all) {
      MBetaTelemetry tel;
      if (mbeta_member(T, beta, w, &tel)) members.push_back(w);
      if (tel.boundary_flip) M.any_boundary_flip = true;
    }
    // degree-k piece of Z * M(beta), in full monomial coordinates
    size_t nm = all.size();
    EchelonSpan ideal(nm);
    auto mono_index = [&](const IVec& w) {
      auto it = std::lower_bound(all.begin(), all.end(), w, lex_less);
      return (size_t)(it - all.begin());
    };
    size_t rank = 0;
    if (k >= 1 && !M.members_by_degree.empty()) {
      for (auto& w : M.members_by_degree[k - 1]) {
        for (auto& zi : rs.Z) {
          QVec v(nm, Rat(0));
          bool nonzero = false;
          for (auto& [j, coeff] : zi) {
            auto prod = multiply_monomials(T, c.points[j], w);
            if (!prod) continue;
            v[mono_index(*prod)] += Rat(coeff);
            nonzero = true;
          }
          if (nonzero && ideal.add(std::move(v))) ++rank;
        }
      }
    }
    size_t dim_k = members.size() - rank;
    M.members_by_degree.push_back(std::move(members));
    M.quotient_dims.push_back(dim_k);
    M.total_dim += dim_k;
    zeros_in_a_row = dim_k == 0 ? zeros_in_a_row + 1 : 0;
  }
  return M;
}

bool interior_point_of_K(const PointConfiguration& c, const IVec& w) {
  RationalCone Kd = dual_cone(RationalCone::from_int_generators(c.d(), c.points));
  for (auto& u : Kd.generators) {
    if (is_zero(u)) continue;
    Rat s = 0;
    for (size_t k = 0; k < c.d(); ++k) s += Rat(u[k]) * Rat(w[k]);
    if (s <= 0) return false;
  }
  return true;
}

}  // namespace gkz
