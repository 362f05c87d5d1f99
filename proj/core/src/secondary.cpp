#include "gkz/secondary.hpp"

#include <algorithm>
#include <cmath>

namespace gkz {

namespace {

const double pi = 3.14159265358979323846264338327950288;

// rational upper bound with denominator 4096
Rat rat_upper(double x) { return rat(Int((long long)std::ceil(x * 4096.0)), 4096); }

Rat dotq_iv(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace

QVec project_to_L(const PointConfiguration& c, const QVec& u) {
  QVec w(c.relation_basis.size(), Rat(0));
  for (size_t i = 0; i < w.size(); ++i) w[i] = dotq_iv(c.relation_basis[i], u);
  return w;
}

QVec embed_from_L(const PointConfiguration& c, const QVec& x) {
  QVec u(c.n(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < c.n(); ++j) u[j] += x[i] * Rat(c.relation_basis[i][j]);
  return u;
}

QVec lift_to_ambient(const PointConfiguration& c, const QVec& w) {
  size_t nL = c.relation_basis.size();
  QMat G(nL, nL);  // Gram matrix of the relation basis
  for (size_t i = 0; i < nL; ++i)
    for (size_t j = 0; j < nL; ++j)
      G(i, j) = Rat(dot(c.relation_basis[i], c.relation_basis[j]));
  QVec a;
  if (!solve_rational(G, w, a))
    throw gkz_error("DegenerateCone", "relation basis Gram matrix singular");
  return embed_from_L(c, a);
}

SeriesConeFamily build_series_cones(const Triangulation& T) {
  const auto& c = *T.config;
  SeriesConeFamily S;
  S.nL = c.relation_basis.size();
  if (S.nL == 0) {
    S.degenerate = true;
    S.total_dual = RationalCone::zero(0);
    return S;
  }
  std::vector<QVec> all;
  for (auto& cell : T.cells) {
    // constraint rows: the coordinate functionals x -> x_j for j outside sigma
    std::vector<IVec> rows;
    for (size_t j = 0; j < c.n(); ++j) {
      if (std::find(cell.begin(), cell.end(), (int)j) != cell.end()) continue;
      IVec r(S.nL);
      for (size_t i = 0; i < S.nL; ++i) r[i] = c.relation_basis[i][j];
      rows.push_back(std::move(r));
    }
    auto gens = dual_cone(RationalCone::from_int_generators(S.nL, rows)).generators;
    std::vector<QVec> qg;
    for (auto& g : gens) {
      qg.push_back(qvec_of(g));
      all.push_back(qvec_of(g));
    }
    S.per_cell.push_back(std::move(qg));
  }
  S.total = all;
  S.total_dual = dual_cone(RationalCone::from_generators(S.nL, all));
  if (!cone_is_full_dimensional(S.total_dual))
    throw gkz_error("DegenerateCone", "series cone dual has empty interior");
  return S;
}

QVec choose_deep_point(const RationalCone& dual, const Rat& margin,
                       const std::vector<QVec>& primal_gens_L,
                       const PointConfiguration& c) {
  QVec g0 = interior_point(dual);  // throws DegenerateCone when not full-dim
  double log4n = std::log(4.0 * double(c.n()));
  Int t = 1;
  for (auto& g : primal_gens_L) {
    QVec amb = embed_from_L(c, g);
    Rat norm = 0;
    for (auto& x : amb) norm += abs(x);
    if (norm <= 1) continue;
    Rat rhs = rat_upper((to_double(margin) + log4n) * std::log(to_double(norm)));
    Rat pair = dotq(g0, g);
    if (pair <= 0)
      throw gkz_error("DegenerateCone", "interior point fails a primal generator");
    Int need = ceil_rat(rhs / pair);
    if (need > t) t = need;
  }
  QVec cpt(g0.size());
  for (size_t i = 0; i < g0.size(); ++i) cpt[i] = Rat(t) * g0[i];
  return cpt;
}

std::vector<cplx> ZPoint::values() const {
  std::vector<cplx> z(n());
  for (size_t j = 0; j < n(); ++j)
    z[j] = std::exp(-to_double(mlog[j])) *
           std::polar(1.0, pi * to_double(arg_pi[j]));
  return z;
}

std::vector<cplx> ZPoint::log_values() const {
  std::vector<cplx> lz(n());
  for (size_t j = 0; j < n(); ++j)
    lz[j] = cplx(-to_double(mlog[j]), pi * to_double(arg_pi[j]));
  return lz;
}

ZPoint zpoint_of(const std::vector<cplx>& z) {
  const Int denom = Int(1) << 40;
  ZPoint p;
  p.mlog.resize(z.size());
  p.arg_pi.resize(z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    double m = -std::log(std::abs(z[j]));
    double a = std::arg(z[j]) / pi;
    p.mlog[j] = rat(Int((long long)std::llround(m * 1099511627776.0)), denom);
    p.arg_pi[j] = rat(Int((long long)std::llround(a * 1099511627776.0)), denom);
  }
  return p;
}

DomainSpec build_domain(const PointConfiguration& c, const std::vector<QVec>& primal_L,
                        const Rat& margin) {
  DomainSpec U;
  U.config = &c;
  U.primal_L = primal_L;
  size_t nL = c.relation_basis.size();
  if (primal_L.empty()) {
    U.offset.assign(nL, Rat(0));  // trivial cone: every point qualifies
    return U;
  }
  auto dual = dual_cone(RationalCone::from_generators(nL, primal_L));
  U.offset = choose_deep_point(dual, margin, primal_L, c);
  return U;
}

bool domain_contains(const DomainSpec& U, const ZPoint& z) {
  for (size_t j = 0; j < z.n(); ++j) {
    if (!(z.arg_pi[j] > U.arg_lo_pi && z.arg_pi[j] < U.arg_hi_pi)) return false;
  }
  QVec w = project_to_L(*U.config, z.mlog);
  for (auto& g : U.primal_L) {
    Rat lhs = dotq(w, g) - dotq(U.offset, g);
    if (lhs == 0)
      throw gkz_error("Inconclusive", "evaluation point on the domain boundary");
    if (lhs < 0) return false;
  }
  return true;
}

bool domain_contains(const DomainSpec& U, const std::vector<cplx>& z) {
  ZPoint p = zpoint_of(z);
  // nudge strictly inside-ness decisions by a small margin: if any constraint
  // is within 1e-9 of zero, refuse to decide
  QVec w = project_to_L(*U.config, p.mlog);
  for (auto& g : U.primal_L) {
    double lhs = to_double(dotq(w, g) - dotq(U.offset, g));
    if (std::abs(lhs) < 1e-9)
      throw gkz_error("Inconclusive", "evaluation point too close to the domain boundary");
  }
  return domain_contains(U, p);
}

namespace {

struct Interval {
  bool has_lo = false, has_hi = false;
  Rat lo = 0, hi = 0;
};

// feasible offsets a for membership of base + a*h in offset + dual, expressed
// through the primal generators
Interval feasible_interval(const PointConfiguration& c, const QVec& w_base,
                           const QVec& w_h, const QVec& offset,
                           const std::vector<QVec>& primal_L) {
  Interval iv;
  for (auto& g : primal_L) {
    Rat alpha = dotq(w_base, g) - dotq(offset, g);
    Rat beta = dotq(w_h, g);
    if (beta == 0) {
      if (alpha < 0) throw gkz_error("PathInfeasible", "base point violates a wall constraint");
    } else if (beta > 0) {
      Rat bound = -alpha / beta;
      if (!iv.has_lo || bound > iv.lo) iv.lo = bound;
      iv.has_lo = true;
    } else {
      Rat bound = -alpha / beta;
      if (!iv.has_hi || bound < iv.hi) iv.hi = bound;
      iv.has_hi = true;
    }
  }
  return iv;
}

}  // namespace

ContinuationPath build_path(const Triangulation& T_plus, const Triangulation& T_minus,
                            const Circuit& c, const Rat& A, const Rat& margin) {
  if (A <= 0) throw gkz_error("PathInfeasible", "A1 requires A > 0");
  const auto& cfg = *T_plus.config;
  auto Sp = build_series_cones(T_plus);
  auto Sm = build_series_cones(T_minus);
  if (Sp.degenerate) throw gkz_error("PathInfeasible", "trivial relation lattice");

  QVec cp = choose_deep_point(Sp.total_dual, margin, Sp.total, cfg);
  QVec cm = choose_deep_point(Sm.total_dual, margin, Sm.total, cfg);

  // base point: lift of the sum of the two deep offsets
  QVec w_base(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) w_base[i] = cp[i] + cm[i];
  QVec u_base = lift_to_ambient(cfg, w_base);

  QVec h_amb = qvec_of(c.h);
  QVec w_h = project_to_L(cfg, h_amb);

  auto ivp = feasible_interval(cfg, w_base, w_h, cp, Sp.total);
  auto ivm = feasible_interval(cfg, w_base, w_h, cm, Sm.total);

  if ((ivp.has_lo && ivp.has_hi && ivp.lo > ivp.hi) ||
      (ivm.has_lo && ivm.has_hi && ivm.lo > ivm.hi))
    throw gkz_error("PathInfeasible", "a convergence region is empty along h");

  // A only needs to be positive; when the requested value cannot bridge the
  // two deep regions, raise it to the smallest value that can.
  ContinuationPath P;
  P.circuit = c;
  P.A = A;
  if (ivp.has_lo && ivm.has_hi && P.A < ivp.lo - ivm.hi + 2) P.A = ivp.lo - ivm.hi + 2;
  if (ivm.has_lo && ivp.has_hi && ivm.lo + P.A > ivp.hi)
    throw gkz_error("PathInfeasible", "A2 feasibility interval is empty");

  // a_plus in [max(lo+, lo- + A), min(hi+, hi- + A)], placed at the midpoint
  bool has_L = ivp.has_lo || ivm.has_lo;
  bool has_U = ivp.has_hi || ivm.has_hi;
  Rat L = 0, Ub = 0;
  if (has_L) {
    L = ivp.has_lo ? ivp.lo : ivm.lo + P.A;
    if (ivm.has_lo && ivm.lo + P.A > L) L = ivm.lo + P.A;
  }
  if (has_U) {
    Ub = ivp.has_hi ? ivp.hi : ivm.hi + P.A;
    if (ivm.has_hi && ivm.hi + P.A < Ub) Ub = ivm.hi + P.A;
  }
  if (has_L && has_U) {
    if (L > Ub) throw gkz_error("PathInfeasible", "A2 feasibility interval is empty");
    P.a_plus = (L + Ub) / 2;
    if (P.a_plus == L)  // zero-width interval: boundary contact
      throw gkz_error("PathInfeasible", "A2 interval has empty interior");
  } else if (has_L) {
    P.a_plus = L + 1;
  } else if (has_U) {
    P.a_plus = Ub - 1;
  } else {
    P.a_plus = 1;
  }
  P.a_minus = P.a_plus - P.A;
  P.base_mlog = u_base;

  // arguments: a_j = -1/2 + t sgn(h_j), exact search over t = k/64 so that
  // arg(y)/pi = sum_{I-} h_j + sum_j h_j a_j lands strictly inside (-2, 0)
  Rat Y0 = 0;
  for (int j : c.I_minus) Y0 += Rat(c.h[j]);
  Rat habs = 0;
  for (auto& x : c.h) habs += Rat(abs(x));
  bool found = false;
  for (int mag = 0; mag < 32 && !found; ++mag) {  // |t| < 1/2 keeps args in (-pi, 0)
    for (int sign : {1, -1}) {
      if (mag == 0 && sign < 0) continue;
      Rat t = rat(sign * mag, 64);
      Rat Y = Y0 + t * habs;
      if (Y > -2 && Y < 0) {
        P.arg_pi.assign(cfg.n(), Rat(0));
        for (size_t j = 0; j < cfg.n(); ++j) {
          int s = (c.h[j] > 0) ? 1 : (c.h[j] < 0 ? -1 : 0);
          P.arg_pi[j] = rat(-1, 2) + t * Rat(s);
        }
        P.arg_y_pi = Y;
        found = true;
        break;
      }
    }
  }
  if (!found) throw gkz_error("PathInfeasible", "A3 window admits no argument choice");

  auto endpoint = [&](const Rat& a) {
    ZPoint z;
    z.mlog.resize(cfg.n());
    for (size_t j = 0; j < cfg.n(); ++j)
      z.mlog[j] = u_base[j] + a * Rat(c.h[j]);
    z.arg_pi = P.arg_pi;
    return z;
  };
  P.z_plus = endpoint(P.a_plus);
  P.z_minus = endpoint(P.a_minus);

  // A2 along the path: membership in the common-cell domain at five stations
  std::vector<std::vector<int>> common;
  for (auto& cell : T_plus.cells)
    if (std::find(T_minus.cells.begin(), T_minus.cells.end(), cell) != T_minus.cells.end())
      common.push_back(cell);
  std::vector<QVec> gens_J;
  for (size_t i = 0; i < T_plus.cells.size(); ++i)
    if (std::find(common.begin(), common.end(), T_plus.cells[i]) != common.end())
      for (auto& g : Sp.per_cell[i]) gens_J.push_back(g);
  DomainSpec UJ = build_domain(cfg, gens_J, margin);
  for (int k = 0; k <= 4; ++k) {
    Rat a = P.a_minus + rat(k, 4) * (P.a_plus - P.a_minus);
    if (!domain_contains(UJ, endpoint(a)))
      throw gkz_error("PathInfeasible", "A2 fails along the path");
  }
  return P;
}

}  // namespace gkz
