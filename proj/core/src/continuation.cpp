#include "gkz/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace gkz {

namespace {

const double pi = 3.14159265358979323846264338327950288;

double max_abs(const CMat& M) { return M.cwiseAbs().maxCoeff(); }

cplx pow_int(cplx base, long e) {
  if (e < 0) return pow_int(1.0 / base, -e);
  cplx acc = 1.0;
  while (e-- > 0) acc *= base;
  return acc;
}

// sigma is given as point indices; essential cells are too
bool sigma_is_essential(const std::vector<int>& sigma, const EssentialCones& ess) {
  for (auto& cell : ess.cones)
    if (std::includes(cell.begin(), cell.end(), sigma.begin(), sigma.end())) return true;
  return false;
}

// the n-tuple of eigenangles of a sector shifted by the root angle c: the
// fractional parts of q_j + c h_j
QVec shifted_tuple(const QVec& q, const Rat& c, const IVec& h) {
  QVec out(q.size());
  for (size_t j = 0; j < q.size(); ++j) out[j] = frac_rat(q[j] + c * Rat(h[j]));
  return out;
}

int match_minus_sector(const std::vector<BoxElement>& boxes, const QVec& tuple) {
  for (size_t w = 0; w < boxes.size(); ++w) {
    QVec bq(tuple.size(), Rat(0));
    for (size_t p = 0; p < boxes[w].q.size() && p < tuple.size(); ++p) bq[p] = boxes[w].q[p];
    if (bq == tuple) return (int)w;
  }
  return -1;
}

}  // namespace

FlipContext build_flip_context(const Triangulation& T_plus, const Triangulation& T_minus) {
  FlipContext ctx;
  ctx.T_plus = &T_plus;
  ctx.T_minus = &T_minus;
  ctx.circuit = find_circuit(T_plus, T_minus);
  ctx.ess_plus = essential_cones(T_plus, ctx.circuit, true);
  ctx.ess_minus = essential_cones(T_minus, ctx.circuit, false);
  ctx.hat = hat_fan(T_plus, T_minus, ctx.circuit);
  ctx.box_plus = box_elements(T_plus.fan());
  ctx.box_minus = box_elements(T_minus.fan());

  const auto& h = ctx.circuit.h;
  size_t n = T_plus.config->n();

  for (auto& b : ctx.box_plus)
    ctx.essential_plus.push_back(sigma_is_essential(b.sigma, ctx.ess_plus));
  for (auto& b : ctx.box_minus)
    ctx.essential_minus.push_back(sigma_is_essential(b.sigma, ctx.ess_minus));

  // global root order: every root attached to some sector is an M-th root
  Int M = 1;
  for (auto& b : ctx.box_plus)
    for (int j : ctx.circuit.I_minus) {
      Rat q = (size_t)j < b.q.size() ? b.q[j] : Rat(0);
      M = boost::multiprecision::lcm(M, den(q) * (-h[j]));
    }
  ctx.order = M;
  for (Int k = 0; k < M; ++k) {
    RootPoint r;
    r.angle = Rat(k, M);
    r.t = unit_root(r.angle);
    ctx.roots.push_back(r);
  }
  // contour radius: clear of the other roots and of the origin
  double dmin = 1.0;  // distance to the origin
  for (size_t a = 0; a < ctx.roots.size(); ++a)
    for (size_t b = a + 1; b < ctx.roots.size(); ++b)
      dmin = std::min(dmin, std::abs(ctx.roots[a].t - ctx.roots[b].t));
  ctx.radius = 0.4 * dmin;

  // per-sector roots and the sector correspondence
  for (size_t v = 0; v < ctx.box_plus.size(); ++v) {
    const auto& b = ctx.box_plus[v];
    std::set<Rat> angles;
    for (int j : ctx.circuit.I_minus) {
      Rat q = (size_t)j < b.q.size() ? b.q[j] : Rat(0);
      Int a = -h[j];
      for (Int k = 0; k < a; ++k) angles.insert(frac_rat((q + Rat(k)) / Rat(a)));
    }
    ctx.root_angles.emplace_back(angles.begin(), angles.end());

    QVec qfull(n, Rat(0));
    for (size_t p = 0; p < b.q.size() && p < n; ++p) qfull[p] = b.q[p];
    std::vector<int> match;
    for (auto& r : ctx.roots)
      match.push_back(match_minus_sector(ctx.box_minus, shifted_tuple(qfull, r.angle, h)));
    ctx.sector_of_root.push_back(std::move(match));
  }

  // the unchanged sectors coincide on both sides, tuples and minimal cones
  std::multiset<std::pair<QVec, std::vector<int>>> up, um;
  for (size_t v = 0; v < ctx.box_plus.size(); ++v)
    if (!ctx.essential_plus[v]) up.insert({ctx.box_plus[v].q, ctx.box_plus[v].sigma});
  for (size_t w = 0; w < ctx.box_minus.size(); ++w)
    if (!ctx.essential_minus[w]) um.insert({ctx.box_minus[w].q, ctx.box_minus[w].sigma});
  if (up != um)
    throw gkz_error("NotAdjacent", "unchanged twisted sectors do not correspond");

  // the root-shift correspondence covers the changed sectors of the minus fan
  std::set<int> covered;
  for (size_t v = 0; v < ctx.box_plus.size(); ++v) {
    if (!ctx.essential_plus[v]) continue;
    for (size_t ri = 0; ri < ctx.roots.size(); ++ri) {
      bool attached = std::binary_search(ctx.root_angles[v].begin(), ctx.root_angles[v].end(),
                                         ctx.roots[ri].angle);
      int w = ctx.sector_of_root[v][ri];
      if (attached) {
        if (w < 0 || !ctx.essential_minus[w])
          throw gkz_error("NotAdjacent", "root shift misses a changed sector");
        covered.insert(w);
      }
    }
  }
  for (size_t w = 0; w < ctx.box_minus.size(); ++w)
    if (ctx.essential_minus[w] && !covered.count((int)w))
      throw gkz_error("NotAdjacent", "a changed minus sector is not reached by any root shift");
  return ctx;
}

Int m_plus(const FlipContext& ctx, const IVec& l, const QVec& gamma_v) {
  bool found = false;
  Int best = 0;
  for (int j : ctx.circuit.I_plus) {
    Rat a = Rat(l[j]) + gamma_v[j];
    if (!is_integer(a)) continue;
    Int cand = ceil_rat(-a / Rat(ctx.circuit.h[j]));
    if (!found || cand < best) best = cand;
    found = true;
  }
  if (!found) throw gkz_error("BadArgument", "no integral coordinate on the positive half");
  return best;
}

Int m_minus(const FlipContext& ctx, const IVec& l, const QVec& gamma_v, const Rat& t_angle) {
  bool found = false;
  Int best = 0;
  for (int j : ctx.circuit.I_minus) {
    Rat a = Rat(l[j]) + gamma_v[j] + t_angle * Rat(ctx.circuit.h[j]);
    if (!is_integer(a)) continue;
    Int cand = floor_rat(a / Rat(-ctx.circuit.h[j]));
    if (!found || cand > best) best = cand;
    found = true;
  }
  if (!found) throw gkz_error("BadArgument", "no integral coordinate on the negative half");
  return best;
}

cplx kernel_T(const FlipContext& ctx, const std::vector<cplx>& r, cplx t_hat) {
  cplx acc = 1.0 / (cplx(0.0, 2.0 * pi) * (t_hat - 1.0));
  for (int j : ctx.circuit.I_minus) {
    cplx denomin = 1.0 - pow_int(t_hat, -to_long(ctx.circuit.h[j])) / r[j];
    if (std::abs(denomin) < 1e-14) throw gkz_error("PoleHit", "kernel evaluated at a pole");
    acc *= (1.0 - 1.0 / r[j]) / denomin;
  }
  return acc;
}

CMat kernel_T(const FlipContext& ctx, const KSector& s, cplx t_hat, bool flip_sign) {
  CMat I = CMat::Identity(s.dim, s.dim);
  CMat acc = I / (cplx(0.0, 2.0 * pi) * (t_hat - 1.0));
  for (int j : ctx.circuit.I_minus) {
    CMat A = I - pow_int(t_hat, -to_long(ctx.circuit.h[j])) * s.Rinv[j];
    if (std::abs(A.determinant()) < 1e-12)
      throw gkz_error("PoleHit", "operator kernel factor is singular");
    acc = acc * (I - s.Rinv[j]) * A.partialPivLu().solve(I);
  }
  if (flip_sign) acc = -acc;
  return acc;
}

void check_circuit_annihilation(const FlipContext& ctx, const KRing& K_plus,
                                const KRing& K_minus, double tol) {
  for (auto& s : K_plus.sectors) {
    CMat P = CMat::Identity(s.dim, s.dim), Pi = P;
    for (int j : ctx.circuit.I_plus) {
      P = P * (CMat::Identity(s.dim, s.dim) - s.R[j]);
      Pi = Pi * (CMat::Identity(s.dim, s.dim) - s.Rinv[j]);
    }
    if (max_abs(P) > tol || max_abs(Pi) > tol)
      throw gkz_error("PhiTermNotAnnihilated", "positive circuit half survives on the plus ring");
  }
  for (auto& s : K_minus.sectors) {
    CMat P = CMat::Identity(s.dim, s.dim);
    for (int j : ctx.circuit.I_minus)
      P = P * (CMat::Identity(s.dim, s.dim) - s.R[j]);
    if (max_abs(P) > tol)
      throw gkz_error("PhiTermNotAnnihilated", "negative circuit half survives on the minus ring");
  }
}

namespace {

// One contour integral by the trapezoid rule at 2*nodes points, with the
// half-resolution sum kept for the convergence check.  `f` maps a node to a
// vector contribution.
CVec contour_integral(cplx center, double radius, int nodes,
                      const std::function<CVec(cplx)>& f, double quad_tol,
                      double* defect_out) {
  int N2 = 2 * nodes;
  CVec fine, coarse;
  for (int m = 0; m < N2; ++m) {
    double phi = 2.0 * pi * m / N2;
    cplx dir(std::cos(phi), std::sin(phi));
    cplx t_hat = center + radius * dir;
    CVec val = f(t_hat);
    cplx w_fine = (2.0 * pi / N2) * cplx(0.0, 1.0) * radius * dir;
    if (fine.size() == 0) {
      fine = CVec::Zero(val.size());
      coarse = CVec::Zero(val.size());
    }
    fine += w_fine * val;
    if (m % 2 == 0) coarse += 2.0 * w_fine * val;
  }
  double defect = (fine - coarse).cwiseAbs().maxCoeff();
  if (defect_out) *defect_out = std::max(*defect_out, defect);
  if (defect > quad_tol)
    throw gkz_error("QuadratureNotConverged",
                    "node doubling still changes a contour integral");
  return fine;
}

}  // namespace

MBResult mb_continue(const FlipContext& ctx, const KRing& K_plus,
                     const ExponentChoice& choice_plus, const ZPoint& z,
                     const ContourPolicy& policy) {
  const auto& Tm = *ctx.T_minus;
  auto Sc = build_series_cones(Tm);
  auto U = build_domain(*Tm.config, Sc.total, 1);
  if (!domain_contains(U, z))
    throw gkz_error("OutsideDomain", "continuation endpoint outside the minus domain");

  // the phi-term of the closed form carries the positive-half product, which
  // must vanish identically before it can be dropped
  for (auto& s : K_plus.sectors) {
    CMat Pi = CMat::Identity(s.dim, s.dim);
    for (int j : ctx.circuit.I_plus)
      Pi = Pi * (CMat::Identity(s.dim, s.dim) - s.Rinv[j]);
    if (max_abs(Pi) > 1e-10)
      throw gkz_error("PhiTermNotAnnihilated", "positive circuit half survives");
  }

  auto logz = z.log_values();
  const auto& h = ctx.circuit.h;
  MBResult R;
  R.total = CVec::Zero(K_plus.total_dim);
  for (size_t v = 0; v < K_plus.sectors.size(); ++v) {
    const auto& s = K_plus.sectors[v];
    const QVec& gamma = choice_plus.gamma[v];
    CVec res = CVec::Zero(s.dim);

    // direct part: the full minus-side series in this sector's branch, present
    // exactly when the trivial root is attached to the sector
    bool has_one = std::binary_search(ctx.root_angles[v].begin(), ctx.root_angles[v].end(),
                                      Rat(0));
    if (has_one) {
      auto sup = enumerate_support(Tm, gamma, policy.bound);
      double tail = 0;
      res += xi_series(s, sup, gamma, logz, nullptr, 0.0, &tail);
      R.tail = std::max(R.tail, tail);
    }

    // contour part, one circle per attached root
    for (size_t ri = 0; ri < ctx.roots.size(); ++ri) {
      if (!std::binary_search(ctx.root_angles[v].begin(), ctx.root_angles[v].end(),
                              ctx.roots[ri].angle))
        continue;
      QVec gamma_t(gamma.size());
      for (size_t j = 0; j < gamma.size(); ++j)
        gamma_t[j] = gamma[j] + ctx.roots[ri].angle * Rat(h[j]);
      auto sup = enumerate_support(Tm, gamma_t, policy.bound, true, &ctx.circuit, false);
      if (sup.elements.empty()) continue;
      cplx center = ctx.roots[ri].t;
      CVec itg = contour_integral(
          center, ctx.radius, policy.nodes,
          [&](cplx t_hat) {
            cplx theta = std::log(t_hat / center) / cplx(0.0, 2.0 * pi);
            double tail = 0;
            CVec x = xi_series(s, sup, gamma_t, logz, &h, theta, &tail);
            R.tail = std::max(R.tail, tail);
            return CVec(kernel_T(ctx, s, t_hat, policy.negative_control) * x);
          },
          policy.quad_tol, &R.quad_defect);
      res -= itg;
    }
    R.total.segment(s.offset, s.dim) = res;
    R.sector.push_back(std::move(res));
  }
  return R;
}

namespace {

// sum over all contours of T(R, t_hat) t_hat^k applied to the sector unit
CVec kernel_transform_unit(const FlipContext& ctx, const KSector& s, long k,
                           const ContourPolicy& policy, double* defect) {
  CVec unit = CVec::Zero(s.dim);
  unit(0) = 1.0;
  CVec acc = CVec::Zero(s.dim);
  for (auto& r : ctx.roots)
    acc += contour_integral(
        r.t, ctx.radius, policy.nodes,
        [&](cplx t_hat) {
          return CVec(pow_int(t_hat, k) * (kernel_T(ctx, s, t_hat, false) * unit));
        },
        policy.quad_tol, defect);
  return acc;
}

CMat monomial_power(const KSector& s, const IVec& m) {
  CMat P = CMat::Identity(s.dim, s.dim);
  for (size_t j = 0; j < m.size() && j < s.R.size(); ++j) {
    if (m[j] < 0) throw gkz_error("BadArgument", "monomial exponents must be nonnegative");
    for (Int k = 0; k < m[j]; ++k) P = P * s.R[j];
  }
  return P;
}

CVec fm_monomial(const FlipContext& ctx, const KRing& K_plus, const IVec& m,
                 const ContourPolicy& policy, double* defect) {
  long k = 0;
  for (size_t j = 0; j < m.size(); ++j) k += to_long(ctx.circuit.h[j]) * to_long(m[j]);
  CVec out = CVec::Zero(K_plus.total_dim);
  for (auto& s : K_plus.sectors) {
    CVec unit = CVec::Zero(s.dim);
    unit(0) = 1.0;
    CVec corr = kernel_transform_unit(ctx, s, k, policy, defect);
    out.segment(s.offset, s.dim) = monomial_power(s, m) * (unit - corr);
  }
  return out;
}

}  // namespace

CVec fm_apply(const FlipContext& ctx, const KRing& K_plus, const IVec& m,
              const ContourPolicy& policy) {
  double defect = 0;
  return fm_monomial(ctx, K_plus, m, policy, &defect);
}

CVec fm_oracle(const FlipContext& ctx, const KRing& K_plus, const KRing& K_hat,
               const IVec& m, const ContourPolicy& policy) {
  long k = 0;
  for (size_t j = 0; j < m.size(); ++j) k += to_long(ctx.circuit.h[j]) * to_long(m[j]);

  // locate the extra generator in the refinement fan
  int hat_pos = -1;
  for (size_t p = 0; p < K_hat.F.labels.size(); ++p)
    if (K_hat.F.labels[p] == (int)ctx.T_plus->config->n()) hat_pos = (int)p;
  if (hat_pos < 0) throw gkz_error("BadArgument", "refinement ring lacks the extra generator");

  // the residue representation of the k-th power must hold on the refinement
  // ring itself: its spectrum consists of the contour centers
  double defect = 0;
  for (auto& s : K_hat.sectors) {
    Rat angle = frac_rat(s.q[hat_pos]);
    if (!is_integer(angle * Rat(ctx.order)))
      throw gkz_error("NotAdjacent", "refinement spectrum escapes the root set");
    CVec unit = CVec::Zero(s.dim);
    unit(0) = 1.0;
    CMat Rk = CMat::Identity(s.dim, s.dim);
    for (long i = 0; i < std::abs(k); ++i)
      Rk = Rk * (k >= 0 ? s.R[hat_pos] : s.Rinv[hat_pos]);
    CVec direct = Rk * unit;
    CVec res = CVec::Zero(s.dim);
    for (auto& r : ctx.roots)
      res += contour_integral(
          r.t, ctx.radius, policy.nodes,
          [&](cplx t_hat) {
            CMat A = CMat::Identity(s.dim, s.dim) - t_hat * s.Rinv[hat_pos];
            return CVec(-pow_int(t_hat, k - 1) / cplx(0.0, 2.0 * pi) *
                        A.partialPivLu().solve(unit));
          },
          policy.quad_tol, &defect);
    if ((direct - res).cwiseAbs().maxCoeff() > 1e-8)
      throw gkz_error("QuadratureNotConverged",
                      "residue representation fails on the refinement ring");
  }

  // push the power down by the power-series identity and multiply back
  CVec out = CVec::Zero(K_plus.total_dim);
  for (auto& s : K_plus.sectors) {
    CMat I = CMat::Identity(s.dim, s.dim);
    CVec unit = CVec::Zero(s.dim);
    unit(0) = 1.0;
    CVec pk = CVec::Zero(s.dim);
    for (auto& r : ctx.roots)
      pk += contour_integral(
          r.t, ctx.radius, policy.nodes,
          [&](cplx t_hat) {
            CVec push = unit / (1.0 - t_hat);
            CVec prod = unit;
            for (int j : ctx.circuit.I_minus) {
              CMat A = I - pow_int(t_hat, -to_long(ctx.circuit.h[j])) * s.Rinv[j];
              prod = A.partialPivLu().solve(CVec((I - s.Rinv[j]) * prod));
            }
            push -= (t_hat / (1.0 - t_hat)) * prod;
            return CVec(-pow_int(t_hat, k - 1) / cplx(0.0, 2.0 * pi) * push);
          },
          policy.quad_tol, &defect);
    out.segment(s.offset, s.dim) = monomial_power(s, m) * pk;
  }
  return out;
}

FMSeriesResult fm_on_series(const FlipContext& ctx, const KRing& K_plus,
                            const KRing& K_minus, const ExponentChoice& choice_minus,
                            const ZPoint& z, const ContourPolicy& policy) {
  const auto& Tm = *ctx.T_minus;
  auto Sc = build_series_cones(Tm);
  auto U = build_domain(*Tm.config, Sc.total, 1);
  auto xi = evaluate_Xi(Tm, K_minus, choice_minus, z, policy.bound, &U);

  // expand the series class in monomial classes of the minus ring
  size_t dim = K_minus.total_dim, n = K_minus.n;
  std::vector<IVec> basis;
  CMat B(dim, dim);
  size_t rank = 0;
  auto monomial_class = [&](const IVec& m) {
    CVec x = CVec::Zero(dim);
    for (auto& s : K_minus.sectors) {
      CVec unit = CVec::Zero(s.dim);
      unit(0) = 1.0;
      x.segment(s.offset, s.dim) = monomial_power(s, m) * unit;
    }
    return x;
  };
  for (long deg = 0; rank < dim && deg <= (long)(dim + n); ++deg) {
    // all exponent vectors of this total degree, lex order
    std::vector<IVec> level;
    IVec m(n, Int(0));
    std::function<void(size_t, long)> gen = [&](size_t j, long rest) {
      if (j + 1 == n) {
        m[j] = rest;
        level.push_back(m);
        return;
      }
      for (long a = rest; a >= 0; --a) {
        m[j] = a;
        gen(j + 1, rest - a);
      }
    };
    gen(0, deg);
    std::sort(level.begin(), level.end(), lex_less);
    for (auto& cand : level) {
      if (rank == dim) break;
      CVec x = monomial_class(cand);
      B.col(rank) = x;
      Eigen::ColPivHouseholderQR<CMat> qr(B.leftCols(rank + 1));
      qr.setThreshold(1e-9);
      if ((size_t)qr.rank() == rank + 1) {
        basis.push_back(cand);
        ++rank;
      }
    }
  }
  if (rank < dim)
    throw gkz_error("BadArgument", "monomial classes do not span the minus ring");

  CVec coeff = B.colPivHouseholderQr().solve(xi.total);

  FMSeriesResult R;
  R.tail = xi.tail;
  R.monomials = basis;
  R.total = CVec::Zero(K_plus.total_dim);
  for (size_t i = 0; i < basis.size(); ++i)
    if (std::abs(coeff(i)) > 0)
      R.total += coeff(i) * fm_monomial(ctx, K_plus, basis[i], policy, &R.quad_defect);
  return R;
}

DiagramReport verify_diagram(const FlipContext& ctx, const KRing& K_plus,
                             const KRing& K_minus, const IVec& beta,
                             const std::vector<ZPoint>& samples,
                             const ContourPolicy& policy) {
  check_circuit_annihilation(ctx, K_plus, K_minus);
  auto choice_plus = choose_gamma(*ctx.T_plus, beta);
  auto choice_minus = choose_gamma(*ctx.T_minus, beta);

  DiagramReport rep;
  rep.tolerance = policy.tolerance;
  rep.order = ctx.order;
  rep.pass = true;
  for (auto& z : samples) {
    auto mb = mb_continue(ctx, K_plus, choice_plus, z, policy);
    auto fm = fm_on_series(ctx, K_plus, K_minus, choice_minus, z, policy);
    SampleReport sr;
    sr.z = z;
    sr.delta = (mb.total - fm.total).cwiseAbs().maxCoeff();
    for (auto& s : K_plus.sectors)
      sr.sector_delta.push_back((mb.total.segment(s.offset, s.dim) -
                                 fm.total.segment(s.offset, s.dim))
                                    .cwiseAbs()
                                    .maxCoeff());
    sr.mb_tail = mb.tail;
    sr.fm_tail = fm.tail;
    sr.quad_defect = std::max(mb.quad_defect, fm.quad_defect);
    if (sr.delta > policy.tolerance) rep.pass = false;
    rep.samples.push_back(std::move(sr));
  }
  return rep;
}

namespace {

// membership of l in the support set of gamma over the given cells
bool support_member(const PointConfiguration& cfg, const std::vector<std::vector<int>>& cells,
                    const QVec& gamma, const IVec& l) {
  std::vector<int> supp;
  for (size_t j = 0; j < cfg.n(); ++j) {
    Rat a = Rat(l[j]) + gamma[j];
    if (!(is_integer(a) && a >= 0)) supp.push_back((int)j);
  }
  for (auto& cell : cells)
    if (std::includes(cell.begin(), cell.end(), supp.begin(), supp.end())) return true;
  return false;
}

IVec translate_h(const IVec& l, long m, const IVec& h) {
  IVec out = l;
  for (size_t j = 0; j < l.size(); ++j) out[j] += Int(m) * h[j];
  return out;
}

}  // namespace

LemmaReport check_flip_lemmas(const FlipContext& ctx, const IVec& beta, const Int& bound) {
  const auto& cfg = *ctx.T_plus->config;
  const auto& h = ctx.circuit.h;
  LemmaReport rep;
  rep.bound = bound;
  rep.exchange = rep.projection = rep.cutoff = true;

  auto choice = choose_gamma(*ctx.T_plus, beta);

  // all lattice elements with |l| <= bound, via a coefficient box that covers
  // the whole ball (same slack as the series enumerator)
  std::vector<IVec> box;
  size_t nL = cfg.relation_basis.size();
  long R = 3 * bound.convert_to<long>();
  std::vector<long> c(nL, -R);
  while (true) {
    IVec l(cfg.n(), Int(0));
    for (size_t i = 0; i < nL; ++i)
      for (size_t j = 0; j < cfg.n(); ++j) l[j] += Int(c[i]) * cfg.relation_basis[i][j];
    if (norm_inf(l) <= bound) box.push_back(l);
    size_t i = nL;
    bool done = true;
    while (i > 0) {
      --i;
      if (++c[i] <= R) {
        done = false;
        break;
      }
      c[i] = -R;
    }
    if (done) break;
  }
  rep.lattice_points = (long)box.size();

  const long mscan = 4 * bound.convert_to<long>();
  const long mcut = 15;
  for (size_t v = 0; v < ctx.box_plus.size(); ++v) {
    const QVec& gamma = choice.gamma[v];
    bool has_one = !ctx.root_angles[v].empty() && ctx.root_angles[v][0] == 0;

    auto in_plus = [&](const IVec& l) { return support_member(cfg, ctx.T_plus->cells, gamma, l); };
    auto in_plus_es = [&](const IVec& l) {
      return support_member(cfg, ctx.ess_plus.cones, gamma, l);
    };
    auto in_minus = [&](const IVec& l) { return support_member(cfg, ctx.T_minus->cells, gamma, l); };
    auto in_minus_es = [&](const QVec& g, const IVec& l) {
      return support_member(cfg, ctx.ess_minus.cones, g, l);
    };

    for (auto& l : box) {
      if (!has_one) {
        if (in_plus(l) != in_plus_es(l)) rep.exchange = false;
      } else {
        bool dp = in_plus(l) && !in_plus_es(l);
        bool dm = in_minus(l) && !in_minus_es(gamma, l);
        if (dp != dm) rep.exchange = false;
      }
    }

    for (auto& t : ctx.root_angles[v]) {
      QVec gamma_t = gamma;
      for (size_t j = 0; j < gamma_t.size(); ++j) gamma_t[j] += t * Rat(h[j]);
      for (auto& l : box) {
        bool plus_any = false, minus_any = false;
        for (long m = -mscan; m <= mscan; ++m) {
          IVec lm = translate_h(l, m, h);
          plus_any = plus_any || in_plus_es(lm);
          minus_any = minus_any || in_minus_es(gamma_t, lm);
        }
        if (plus_any != minus_any) rep.projection = false;
        if (!plus_any) continue;
        Int mp = m_plus(ctx, l, gamma);
        Int mm = m_minus(ctx, l, gamma, t);
        for (long m = -mcut; m <= mcut; ++m) {
          IVec lm = translate_h(l, m, h);
          if (in_plus_es(lm) != (Int(m) >= mp)) rep.cutoff = false;
          if (in_minus_es(gamma_t, lm) != (Int(m) <= mm)) rep.cutoff = false;
        }
      }
    }
  }
  return rep;
}

}  // namespace gkz
