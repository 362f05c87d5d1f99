#include "gkz/series.hpp"

#include <algorithm>
#include <cmath>

namespace gkz {

namespace {

// gamma^sigma: the unique x in L tensor Q whose embedding matches -gamma on
// the coordinates outside the cell
QVec gamma_sigma(const PointConfiguration& cfg, const std::vector<int>& cell,
                 const QVec& gamma) {
  size_t nL = cfg.relation_basis.size();
  QMat A(cfg.n() - cell.size(), nL);
  QVec rhs(cfg.n() - cell.size());
  size_t row = 0;
  for (size_t j = 0; j < cfg.n(); ++j) {
    if (std::find(cell.begin(), cell.end(), (int)j) != cell.end()) continue;
    for (size_t i = 0; i < nL; ++i) A(row, i) = Rat(cfg.relation_basis[i][j]);
    rhs[row] = -gamma[j];
    ++row;
  }
  QVec x;
  if (!solve_rational(A, rhs, x))
    throw gkz_error("DegenerateCone", "cell complement does not coordinatize L");
  return x;
}

}  // namespace

ExponentChoice choose_gamma(const Triangulation& T, const IVec& beta) {
  const auto& cfg = *T.config;
  auto F = T.fan();
  auto boxes = box_elements(F);
  IntMat V = cfg.point_matrix();

  ExponentChoice out;
  out.beta = beta;

  bool degenerate = cfg.relation_basis.empty();
  RationalCone C_sigma_total = RationalCone::zero(cfg.relation_basis.size());
  IVec g_int;
  if (!degenerate) {
    auto S = build_series_cones(T);
    C_sigma_total = RationalCone::from_generators(S.nL, S.total);
    g_int = primitive_of(interior_point(C_sigma_total));
  }

  for (auto& b : boxes) {
    QVec q(cfg.n(), Rat(0));
    for (size_t p = 0; p < b.q.size(); ++p) q[p] = b.q[p];
    IVec m;
    if (!solve_integer(V, sub(beta, b.v), m))
      throw gkz_error("Unsolvable", "beta - v has no integer preimage");
    QVec gamma(cfg.n());
    for (size_t j = 0; j < cfg.n(); ++j) gamma[j] = q[j] + Rat(m[j]);

    IVec shift(cfg.relation_basis.size(), Int(0));
    if (!degenerate) {
      // smallest t >= 0 with gamma^sigma + t g inside C_Sigma for every cell
      Int t = 0;
      for (;; ++t) {
        if (t > 100000) throw gkz_error("Unsolvable", "no admissible shift found");
        bool ok = true;
        for (auto& cell : T.cells) {
          QVec gs = gamma_sigma(cfg, cell, gamma);
          for (size_t i = 0; i < gs.size(); ++i) gs[i] += Rat(t) * Rat(g_int[i]);
          if (!cone_contains(C_sigma_total, gs)) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      shift = scale(t, g_int);
      // gamma -> gamma - embed(shift)
      for (size_t i = 0; i < shift.size(); ++i)
        for (size_t j = 0; j < cfg.n(); ++j)
          gamma[j] -= Rat(shift[i]) * Rat(cfg.relation_basis[i][j]);
    }
    out.gamma.push_back(std::move(gamma));
    out.shift_L.push_back(std::move(shift));
  }
  return out;
}

SupportEnumerator enumerate_support(const Triangulation& T, const QVec& gamma,
                                    const Int& bound, bool essential_only,
                                    const Circuit* circuit, bool plus_side) {
  const auto& cfg = *T.config;
  size_t nL = cfg.relation_basis.size();

  std::vector<std::vector<int>> allowed = T.cells;
  if (essential_only) {
    if (!circuit) throw gkz_error("BadArgument", "essential enumeration needs a circuit");
    allowed = essential_cones(T, *circuit, plus_side).cones;
  }
  auto cell_index = [&](const std::vector<int>& cell) {
    for (size_t i = 0; i < T.cells.size(); ++i)
      if (T.cells[i] == cell) return (int)i;
    return -1;
  };

  std::vector<std::pair<IVec, int>> hits;
  auto consider = [&](const IVec& l) {
    if (norm_inf(l) > bound) return;
    std::vector<int> supp;
    for (size_t j = 0; j < cfg.n(); ++j) {
      Rat a = Rat(l[j]) + gamma[j];
      if (!(is_integer(a) && a >= 0)) supp.push_back((int)j);
    }
    for (auto& cell : allowed) {
      if (std::includes(cell.begin(), cell.end(), supp.begin(), supp.end())) {
        hits.push_back({l, cell_index(cell)});
        return;
      }
    }
  };

  if (nL == 0) {
    consider(IVec(cfg.n(), Int(0)));
  } else {
    long R = 3 * to_long(bound);
    std::vector<long> c(nL, -R);
    while (true) {
      IVec l(cfg.n(), Int(0));
      for (size_t i = 0; i < nL; ++i)
        for (size_t j = 0; j < cfg.n(); ++j) l[j] += Int(c[i]) * cfg.relation_basis[i][j];
      consider(l);
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
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  SupportEnumerator S;
  S.bound = bound;
  for (auto& [l, w] : hits) {
    S.elements.push_back(l);
    S.witness.push_back(w);
  }
  return S;
}

CMat xi_term(const KSector& s, const std::vector<cplx>& logz, const std::vector<cplx>& a) {
  // the series argument is (1/2 pi i) log R_j = gamma_j + D_j/(2 pi i), so the
  // jet in the nilpotent direction is taken at D_j/(2 pi i)
  const cplx inv2pii = 1.0 / cplx(0.0, 2.0 * 3.14159265358979323846264338327950288);
  CMat M = CMat::Identity(s.dim, s.dim);
  for (size_t j = 0; j < a.size(); ++j) {
    Jet coeffs = power_over_gamma_jet(logz[j], a[j], s.nil[j]);
    CMat F = CMat::Zero(s.dim, s.dim);
    CMat P = CMat::Identity(s.dim, s.dim);
    for (int k = 0; k < s.nil[j]; ++k) {
      F += coeffs[k] * P;
      if (k + 1 < s.nil[j]) P = P * (inv2pii * s.D[j]);
    }
    M = M * F;
  }
  return M;
}

namespace {

double geometric_tail(const std::vector<double>& shell) {
  // extrapolate the shell sums geometrically from the last ratios
  int last = (int)shell.size() - 1;
  while (last >= 0 && shell[last] == 0) --last;
  if (last <= 0) return 0.0;
  double rho = 0;
  for (int k = std::max(1, last - 2); k <= last; ++k)
    if (shell[k - 1] > 0) rho = std::max(rho, shell[k] / shell[k - 1]);
  if (rho >= 1.0) return HUGE_VAL;
  return shell[last] * rho / (1.0 - rho);
}

}  // namespace

CVec xi_series(const KSector& s, const SupportEnumerator& sup, const QVec& gamma,
               const std::vector<cplx>& logz, const IVec* h, cplx theta, double* tail) {
  size_t n = gamma.size();
  CVec unit = CVec::Zero(s.dim);
  unit(0) = 1.0;

  // order elements by increasing shell
  std::vector<size_t> order(sup.elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    Int na = norm_inf(sup.elements[a]), nb = norm_inf(sup.elements[b]);
    if (na != nb) return na < nb;
    return lex_less(sup.elements[a], sup.elements[b]);
  });

  CVec acc = CVec::Zero(s.dim);
  std::vector<double> shell(to_long(sup.bound) + 1, 0.0);
  std::vector<cplx> a(n);
  for (size_t i : order) {
    const IVec& l = sup.elements[i];
    for (size_t j = 0; j < n; ++j) {
      a[j] = to_double(Rat(l[j]) + gamma[j]);
      if (h) a[j] += double((*h)[j].convert_to<long>()) * theta;
    }
    CVec term = xi_term(s, logz, a) * unit;
    acc += term;
    shell[to_long(norm_inf(l))] += term.cwiseAbs().maxCoeff();
  }
  if (tail) *tail = geometric_tail(shell);
  return acc;
}

XiResult evaluate_Xi(const Triangulation& T, const KRing& K, const ExponentChoice& choice,
                     const ZPoint& z, const Int& bound, const DomainSpec* U) {
  if (U && !domain_contains(*U, z))
    throw gkz_error("OutsideDomain", "evaluation point outside the convergence domain");
  auto logz = z.log_values();
  XiResult R;
  R.total = CVec::Zero(K.total_dim);
  for (size_t v = 0; v < K.sectors.size(); ++v) {
    auto sup = enumerate_support(T, choice.gamma[v], bound);
    double tail = 0;
    CVec val = xi_series(K.sectors[v], sup, choice.gamma[v], logz, nullptr, 0.0, &tail);
    R.total.segment(K.sectors[v].offset, K.sectors[v].dim) = val;
    R.sector.push_back(std::move(val));
    R.tail = std::max(R.tail, tail);
  }
  return R;
}

PsiResult evaluate_Psi(const Triangulation& T, const SRQuotient& S, const KRing& K,
                       const ExponentChoice& choice, const ZPoint& z, const Int& bound) {
  auto logz = z.log_values();
  size_t n = T.config->n();

  // multiplication operators on the full quotient and their nilpotency
  std::vector<CMat> DQ(n);
  std::vector<int> nil(n, 1);
  for (size_t j = 0; j < n; ++j) {
    DQ[j] = cmat_of(S.D[j]);
    CMat P = CMat::Identity(S.dim, S.dim);
    int k = 1;
    while (P.cwiseAbs().maxCoeff() > 0 && k <= (int)S.dim) {
      P = P * DQ[j];
      if (P.cwiseAbs().maxCoeff() == 0) break;
      ++k;
    }
    nil[j] = k;
  }

  PsiResult R;
  R.value = CVec::Zero(S.dim);
  std::vector<double> shell(to_long(bound) + 1, 0.0);
  for (size_t v = 0; v < K.sectors.size(); ++v) {
    const auto& gamma = choice.gamma[v];
    QVec start_q = S.reduce_point(K.sectors[v].box.v);
    CVec start(S.dim);
    for (size_t i = 0; i < S.dim; ++i) start(i) = to_double(start_q[i]);
    auto sup = enumerate_support(T, gamma, bound);
    for (size_t i = 0; i < sup.elements.size(); ++i) {
      const IVec& l = sup.elements[i];
      CVec term = start;
      for (size_t j = 0; j < n; ++j) {
        cplx a = to_double(Rat(l[j]) + gamma[j]);
        Jet coeffs = power_over_gamma_jet(logz[j], a, nil[j]);
        const cplx inv2pii = 1.0 / cplx(0.0, 2.0 * 3.14159265358979323846264338327950288);
        CVec nt = CVec::Zero(S.dim);
        CVec p = term;
        for (int k = 0; k < nil[j]; ++k) {
          nt += coeffs[k] * p;
          if (k + 1 < nil[j]) p = inv2pii * (DQ[j] * p);
        }
        term = nt;
      }
      R.value += term;
      shell[to_long(norm_inf(l))] += term.cwiseAbs().maxCoeff();
    }
  }
  R.tail = geometric_tail(shell);
  return R;
}

cplx ms_map(const XiResult& xi, const CVec& functional) {
  cplx s = 0;  // plain bilinear pairing, no conjugation
  for (Eigen::Index i = 0; i < functional.size(); ++i) s += functional(i) * xi.total(i);
  return s;
}

SeriesTerms ms_terms(const KSector& s, const SupportEnumerator& sup, const QVec& gamma,
                     const CVec& functional) {
  size_t n = gamma.size();
  SeriesTerms out;
  out.gamma = gamma;
  for (const IVec& l : sup.elements) {
    // state: log-monomial exponent -> coordinate vector
    std::map<std::vector<int>, CVec> state;
    CVec unit = CVec::Zero(s.dim);
    unit(0) = 1.0;
    state[std::vector<int>(n, 0)] = unit;
    for (size_t j = 0; j < n; ++j) {
      cplx aj = to_double(Rat(l[j]) + gamma[j]);
      auto derivs = recip_gamma_jet(aj, s.nil[j]);
      std::vector<cplx> r(s.nil[j]);
      double fact = 1.0;
      for (int k = 0; k < s.nil[j]; ++k) {
        if (k > 0) fact *= k;
        r[k] = derivs[k] / fact;
      }
      const cplx inv2pii = 1.0 / cplx(0.0, 2.0 * 3.14159265358979323846264338327950288);
      std::vector<CMat> Dp(s.nil[j]);
      Dp[0] = CMat::Identity(s.dim, s.dim);
      for (int k = 1; k < s.nil[j]; ++k) Dp[k] = Dp[k - 1] * (inv2pii * s.D[j]);
      std::map<std::vector<int>, CVec> next;
      for (auto& [mv, vec] : state) {
        double mfact = 1.0;
        for (int m = 0; m < s.nil[j]; ++m) {
          if (m > 0) mfact *= m;
          for (int k = 0; k + m < s.nil[j]; ++k) {
            CVec contrib = (r[k] / mfact) * (Dp[k + m] * vec);
            if (contrib.cwiseAbs().maxCoeff() == 0) continue;
            auto key = mv;
            key[j] += m;
            auto it = next.find(key);
            if (it == next.end())
              next[key] = contrib;
            else
              it->second += contrib;
          }
        }
      }
      state = std::move(next);
    }
    std::map<std::vector<int>, cplx> poly;
    for (auto& [mv, vec] : state) {
      cplx c = 0;
      for (size_t i = 0; i < (size_t)vec.size(); ++i) c += functional(i) * vec(i);
      if (c != cplx(0)) poly[mv] = c;
    }
    if (!poly.empty()) out.terms[l] = std::move(poly);
  }
  return out;
}

namespace {

using Poly = std::map<std::vector<int>, cplx>;
using TermMap = std::map<IVec, Poly>;

void add_term(TermMap& t, const IVec& o, const std::vector<int>& m, cplx c) {
  if (c == cplx(0)) return;
  t[o][m] += c;
}

// z_j d/dz_j
TermMap theta_op(const TermMap& t, const QVec& gamma, size_t j) {
  TermMap out;
  for (auto& [o, poly] : t) {
    cplx aj = to_double(Rat(o[j]) + gamma[j]);
    for (auto& [m, c] : poly) {
      add_term(out, o, m, aj * c);
      if (m[j] > 0) {
        auto m2 = m;
        m2[j] -= 1;
        add_term(out, o, m2, double(m[j]) * c);
      }
    }
  }
  return out;
}

// d/dz_j = z_j^{-1} theta_j
TermMap partial_op(const TermMap& t, const QVec& gamma, size_t j) {
  TermMap shifted;
  for (auto& [o, poly] : theta_op(t, gamma, j)) {
    IVec o2 = o;
    o2[j] -= 1;
    for (auto& [m, c] : poly) add_term(shifted, o2, m, c);
  }
  return shifted;
}

cplx eval_terms(const TermMap& t, const QVec& gamma, const std::vector<cplx>& logz) {
  cplx total = 0;
  for (auto& [o, poly] : t) {
    cplx e = 0;
    for (size_t j = 0; j < logz.size(); ++j) e += (to_double(gamma[j]) + to_double(o[j])) * logz[j];
    cplx zpow = std::exp(e);
    for (auto& [m, c] : poly) {
      cplx lp = 1;
      for (size_t j = 0; j < logz.size(); ++j)
        for (int k = 0; k < m[j]; ++k) lp *= logz[j];
      total += c * zpow * lp;
    }
  }
  return total;
}

}  // namespace

ResidualReport gkz_residual(const PointConfiguration& cfg, const IVec& beta,
                            const SeriesTerms& sol, const ZPoint& z) {
  auto logz = z.log_values();
  ResidualReport rep;

  // Euler operators: the exponent part cancels exactly per term because the
  // offsets lie in the relation lattice; what remains is the log-lowering part
  for (size_t i = 0; i < cfg.d(); ++i) {
    TermMap resid;
    for (auto& [o, poly] : sol.terms) {
      Rat lin = -Rat(beta[i]);
      for (size_t j = 0; j < cfg.n(); ++j)
        lin += Rat(cfg.points[j][i]) * (Rat(o[j]) + sol.gamma[j]);
      if (lin != 0)
        throw gkz_error("BadArgument", "term exponent violates the degree constraint");
      for (auto& [m, c] : poly)
        for (size_t j = 0; j < cfg.n(); ++j)
          if (m[j] > 0) {
            auto m2 = m;
            m2[j] -= 1;
            add_term(resid, o, m2, to_double(Rat(cfg.points[j][i])) * double(m[j]) * c);
          }
    }
    rep.euler_max = std::max(rep.euler_max, std::abs(eval_terms(resid, sol.gamma, logz)));
  }

  // box operators, one per relation-basis element
  for (auto& b : cfg.relation_basis) {
    TermMap plus = sol.terms, minus = sol.terms;
    for (size_t j = 0; j < cfg.n(); ++j) {
      for (Int k = 0; k < b[j]; ++k) plus = partial_op(plus, sol.gamma, j);
      for (Int k = 0; k < -b[j]; ++k) minus = partial_op(minus, sol.gamma, j);
    }
    TermMap resid = plus;
    for (auto& [o, poly] : minus)
      for (auto& [m, c] : poly) add_term(resid, o, m, -c);
    rep.box_max = std::max(rep.box_max, std::abs(eval_terms(resid, sol.gamma, logz)));
  }

  // tail estimate: shell magnitudes of the solution itself with slack for the
  // polynomial growth of the differentiated coefficients
  Int bound = 0;
  for (auto& [o, poly] : sol.terms) bound = std::max(bound, norm_inf(o));
  std::vector<double> shell(to_long(bound) + 1, 0.0);
  for (auto& [o, poly] : sol.terms) {
    TermMap one;
    one[o] = poly;
    shell[to_long(norm_inf(o))] += std::abs(eval_terms(one, sol.gamma, logz));
  }
  double tail = geometric_tail(shell);
  Int maxb = 0;
  for (auto& b : cfg.relation_basis) maxb = std::max(maxb, norm1(b));
  double amp = std::pow(to_double(bound) + to_double(maxb) + 4.0, to_double(maxb));
  rep.tail_bound = tail * amp;
  return rep;
}

}  // namespace gkz
