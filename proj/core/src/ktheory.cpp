#include "gkz/ktheory.hpp"

#include <algorithm>
#include <cmath>

#include "gkz/matrix.hpp"

namespace gkz {

namespace {

const double pi = 3.14159265358979323846264338327950288;

double max_abs(const CMat& M) { return M.cwiseAbs().maxCoeff(); }

CMat mat_power(const CMat& M, const CMat& Minv, const Int& e) {
  size_t dim = M.rows();
  CMat acc = CMat::Identity(dim, dim);
  const CMat& base = (e >= 0) ? M : Minv;
  Int k = abs(e);
  for (Int i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

}  // namespace

cplx unit_root(const Rat& q) {
  double x = to_double(frac_rat(q));
  return cplx(std::cos(2.0 * pi * x), std::sin(2.0 * pi * x));
}

CMat cmat_of(const std::vector<QVec>& cols) {
  size_t rows = cols.empty() ? 0 : cols[0].size();
  CMat M(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t r = 0; r < rows; ++r) M(r, c) = to_double(cols[c][r]);
  return M;
}

CMat exp_nilpotent(const CMat& N, int nil) {
  size_t dim = N.rows();
  CMat acc = CMat::Identity(dim, dim);
  CMat term = CMat::Identity(dim, dim);
  for (int k = 1; k < nil; ++k) {
    term = term * N / double(k);
    acc += term;
  }
  return acc;
}

KRing build_kring(const Triangulation& T, double tol) { return build_kring(T.fan(), tol); }

KRing build_kring(const StackyFan& F, double tol) {
  KRing K;
  K.F = F;
  K.n = F.vectors.size();

  auto boxes = box_elements(K.F);
  for (auto& b : boxes) {
    KSector s;
    s.box = b;
    s.algebra = sector_algebra(quotient_fan(K.F, b.sigma));
    s.offset = K.total_dim;
    s.dim = s.algebra.dim;
    K.total_dim += s.dim;

    s.q.assign(K.n, Rat(0));
    for (size_t p = 0; p < b.q.size(); ++p) s.q[p] = b.q[p];
    s.y.resize(K.n);
    s.D.assign(K.n, CMat::Zero(s.dim, s.dim));
    s.nil.assign(K.n, 1);
    for (size_t j = 0; j < K.n; ++j) {
      s.y[j] = unit_root(s.q[j]);
      // find the quotient-fan ray labeled by point j
      int var = -1;
      if (b.sigma.empty()) {
        var = s.algebra.var_position((int)j);
      } else {
        auto Q = quotient_fan(K.F, b.sigma);
        for (size_t p = 0; p < Q.labels.size(); ++p)
          if (Q.labels[p] == (int)j) {
            var = s.algebra.var_position((int)p);
            break;
          }
      }
      if (var >= 0) {
        s.D[j] = cmat_of(s.algebra.mult[var]);
        CMat P = CMat::Identity(s.dim, s.dim);
        int nil = 1;
        while (max_abs(P * s.D[j]) > 0 && nil <= (int)s.dim) {
          P = P * s.D[j];
          ++nil;
        }
        s.nil[j] = nil;
      }
    }
    // the divisor class of a sigma-ray restricted to the sector substack:
    // choose m with <m, v_l> = delta_{jl} on sigma, then the restriction is
    // -sum_{k not in sigma} <m, v_k> D_k (independent of the choice of m
    // modulo the linear relations of the quotient)
    if (!b.sigma.empty()) {
      size_t d = K.F.dim;
      QMat A(b.sigma.size(), d);
      for (size_t r = 0; r < b.sigma.size(); ++r)
        for (size_t c = 0; c < d; ++c) A(r, c) = Rat(K.F.vectors[b.sigma[r]][c]);
      for (size_t r = 0; r < b.sigma.size(); ++r) {
        int j = b.sigma[r];
        QVec rhs(b.sigma.size(), Rat(0));
        rhs[r] = 1;
        QVec m;
        if (!solve_rational(A, rhs, m))
          throw gkz_error("DegenerateCone", "sector cone is not simplicial");
        CMat Dj = CMat::Zero(s.dim, s.dim);
        for (size_t k = 0; k < K.n; ++k) {
          if (std::find(b.sigma.begin(), b.sigma.end(), (int)k) != b.sigma.end()) continue;
          Rat coef = 0;
          for (size_t c = 0; c < d; ++c) coef += m[c] * Rat(K.F.vectors[k][c]);
          if (coef != 0) Dj -= to_double(coef) * s.D[k];
        }
        s.D[j] = Dj;
        CMat P = CMat::Identity(s.dim, s.dim);
        int nil = 1;
        while (max_abs(P * s.D[j]) > 0 && nil <= (int)s.dim) {
          P = P * s.D[j];
          ++nil;
        }
        s.nil[j] = nil;
      }
    }
    s.R.resize(K.n);
    s.Rinv.resize(K.n);
    for (size_t j = 0; j < K.n; ++j) {
      s.R[j] = s.y[j] * exp_nilpotent(s.D[j], s.nil[j]);
      CMat neg = -s.D[j];
      s.Rinv[j] = (1.0 / s.y[j]) * exp_nilpotent(neg, s.nil[j]);
    }
    K.sectors.push_back(std::move(s));
  }

  // presentation relations, verified blockwise
  size_t d = K.F.dim;
  for (auto& s : K.sectors) {
    CMat I = CMat::Identity(s.dim, s.dim);
    for (size_t j = 0; j < K.n; ++j) {
      if (max_abs(s.R[j] * s.Rinv[j] - I) > tol)
        throw gkz_error("PresentationViolation", "R inverse defect");
      for (size_t k = j + 1; k < K.n; ++k)
        if (max_abs(s.R[j] * s.R[k] - s.R[k] * s.R[j]) > tol)
          throw gkz_error("PresentationViolation", "R blocks do not commute");
    }
    // Laurent relations: prod_j R_j^{v_j[i]} = I for the standard dual basis
    for (size_t i = 0; i < d; ++i) {
      CMat P = I;
      for (size_t j = 0; j < K.n; ++j)
        P = P * mat_power(s.R[j], s.Rinv[j], K.F.vectors[j][i]);
      if (max_abs(P - I) > tol)
        throw gkz_error("PresentationViolation", "Laurent relation fails");
    }
    // squarefree relations: prod_{j in J}(I - R_j) = 0 for non-cone J
    std::vector<int> J;
    std::function<void(size_t)> walk = [&](size_t start) {
      if (!J.empty() && !K.F.spans_cone(J)) {
        CMat P = I;
        for (int j : J) P = P * (I - s.R[j]);
        if (max_abs(P) > tol)
          throw gkz_error("PresentationViolation", "squarefree relation fails");
        return;  // supersets fail or vanish automatically
      }
      if (J.size() == d) return;
      for (size_t j = start; j < K.n; ++j) {
        J.push_back((int)j);
        walk(j + 1);
        J.pop_back();
      }
    };
    walk(0);
    // spectrum of each block is the single eigenvalue y_j: R_j - y_j I is
    // nilpotent (checked by powering, which is stable for defective blocks)
    for (size_t j = 0; j < K.n; ++j) {
      CMat N = s.R[j] - s.y[j] * I;
      CMat P = I;
      for (size_t k = 0; k < s.dim; ++k) P = P * N;
      if (max_abs(P) > tol)
        throw gkz_error("PresentationViolation", "unexpected spectrum");
    }
  }
  return K;
}

std::vector<CMat> apply_function(const KRing& K, const JetFunction& f) {
  std::vector<CMat> out;
  for (auto& s : K.sectors) {
    if (f.analytic_at && !f.analytic_at(s.y))
      throw gkz_error("SingularPoint", "function not analytic at an eigen-tuple of " + f.name);
    std::vector<int> orders(K.n);
    for (size_t j = 0; j < K.n; ++j) orders[j] = s.nil[j];
    MJet m = f.jet(s.y, orders);

    // finite-difference consistency of the first derivatives
    if (f.eval) {
      double h = 1e-5;
      for (size_t j = 0; j < K.n; ++j) {
        if (orders[j] < 2) continue;
        std::vector<int> e(K.n, 0);
        e[j] = 1;
        cplx df = m.a[m.index(e)];
        std::vector<cplx> zp = s.y, zm = s.y;
        zp[j] += h;
        zm[j] -= h;
        cplx fd = (f.eval(zp) - f.eval(zm)) / (2.0 * h);
        double scale = std::max(1.0, std::abs(df));
        if (std::abs(fd - df) > 1e-6 * scale)
          throw gkz_error("SingularPoint",
                          "jet/value mismatch for " + f.name + " (finite difference check)");
      }
    }

    // powers of (R_j - y_j I) per axis
    std::vector<std::vector<CMat>> pw(K.n);
    for (size_t j = 0; j < K.n; ++j) {
      pw[j].push_back(CMat::Identity(s.dim, s.dim));
      CMat N = s.R[j] - s.y[j] * CMat::Identity(s.dim, s.dim);
      for (int k = 1; k < orders[j]; ++k) pw[j].push_back(pw[j].back() * N);
    }
    CMat acc = CMat::Zero(s.dim, s.dim);
    std::vector<int> e(K.n, 0);
    while (true) {
      cplx c = m.a[m.index(e)];
      if (c != cplx(0)) {
        CMat P = pw[0][e[0]];
        for (size_t j = 1; j < K.n; ++j) P = P * pw[j][e[j]];
        acc += c * P;
      }
      size_t j = K.n;
      bool done = true;
      while (j > 0) {
        --j;
        if (++e[j] < orders[j]) {
          done = false;
          break;
        }
        e[j] = 0;
      }
      if (done) break;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<CMat> cauchy_function(const KRing& K, const JetFunction& f, double delta, int N) {
  // the circles may not swallow eigenvalues of other sectors
  for (auto& s : K.sectors)
    for (auto& s2 : K.sectors)
      for (size_t j = 0; j < K.n; ++j)
        if (std::abs(s.y[j] - s2.y[j]) > 1e-12 && std::abs(s.y[j] - s2.y[j]) <= delta)
          throw gkz_error("ContourCollision", "contour radius reaches a foreign eigenvalue");

  std::vector<CMat> out;
  for (auto& s : K.sectors) {
    size_t n = K.n;
    // nodes, and resolvents with the quadrature weight folded in
    std::vector<std::vector<cplx>> node(n);
    std::vector<std::vector<CMat>> res(n);
    CMat I = CMat::Identity(s.dim, s.dim);
    for (size_t j = 0; j < n; ++j) {
      for (int k = 0; k < N; ++k) {
        double th = 2.0 * pi * k / N;
        cplx lam = s.y[j] + delta * cplx(std::cos(th), std::sin(th));
        node[j].push_back(lam);
        CMat A = lam * I - s.R[j];
        // weight (2 pi i / N)(lam - center), and the 1/(2 pi i) prefactor
        cplx w = (lam - s.y[j]) / double(N);
        res[j].push_back(w * A.partialPivLu().solve(I));
      }
    }
    CMat acc = CMat::Zero(s.dim, s.dim);
    std::vector<cplx> lambda(n);
    std::function<void(size_t, const CMat&)> rec = [&](size_t axis, const CMat& prefix) {
      if (axis + 1 == n) {
        CMat inner = CMat::Zero(s.dim, s.dim);
        for (int k = 0; k < N; ++k) {
          lambda[axis] = node[axis][k];
          inner += f.eval(lambda) * res[axis][k];
        }
        acc += prefix * inner;
        return;
      }
      for (int k = 0; k < N; ++k) {
        lambda[axis] = node[axis][k];
        rec(axis + 1, prefix * res[axis][k]);
      }
    };
    rec(0, I);
    out.push_back(acc);
  }
  return out;
}

ChMap ch_isomorphism(const KRing& K, const SRQuotient& S, double tol) {
  ChMap ch;
  for (auto& s : K.sectors) {
    CMat C(S.dim, s.dim);
    for (size_t col = 0; col < s.dim; ++col) {
      IVec w = s.box.v;
      const auto& expo = s.algebra.basis[col];
      for (size_t a = 0; a < expo.size(); ++a) {
        int fan_pos = -1;
        // the algebra variable indexes a ray of the quotient fan; recover the
        // original point through the labels
        if (s.box.sigma.empty()) {
          fan_pos = s.algebra.vars[a];
        } else {
          auto Q = quotient_fan(K.F, s.box.sigma);
          fan_pos = Q.labels[s.algebra.vars[a]];
        }
        for (int rep = 0; rep < expo[a]; ++rep) w = add(w, K.F.vectors[fan_pos]);
      }
      QVec coords = S.reduce_point(w);
      for (size_t r = 0; r < S.dim; ++r) C(r, col) = to_double(coords[r]);
    }
    // intertwining: C R_j = y_j exp(D_j on the SR side) C
    for (size_t j = 0; j < K.n; ++j) {
      CMat DQ = cmat_of(S.D[j]);
      CMat target = s.y[j] * exp_nilpotent(DQ, (int)S.dim + 1);
      if (((C * s.R[j]) - (target * C)).cwiseAbs().maxCoeff() > tol)
        throw gkz_error("PresentationViolation", "Ch does not intertwine R_j");
    }
    ch.C.push_back(std::move(C));
  }
  return ch;
}

}  // namespace gkz
