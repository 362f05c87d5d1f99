#include "gkz/cone.hpp"

#include <algorithm>

namespace gkz {

namespace {

// Row echelon basis over Q with recorded pivot columns; used to reduce
// vectors modulo a subspace deterministically.
struct Echelon {
  std::vector<QVec> rows;
  std::vector<size_t> pivots;
  size_t dim;

  explicit Echelon(size_t d) : dim(d) {}

  // reduce v against the rows; returns the remainder
  QVec reduce(QVec v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      if (v[pivots[i]] != 0) {
        Rat f = v[pivots[i]];
        for (size_t k = 0; k < dim; ++k) v[k] -= f * rows[i][k];
      }
    }
    return v;
  }
  // try to add v to the span; returns true if the span grew
  bool add(QVec v) {
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < dim && v[p] == 0) ++p;
    if (p == dim) return false;
    Rat inv = v[p];
    for (auto& x : v) x /= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  bool contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
  }
};

// generators of {u : <row_i, u> >= 0 for all i}
std::vector<IVec> cone_from_inequalities(size_t m, const std::vector<IVec>& rows) {
  std::vector<IVec> out;
  // lineality = null space of the constraint matrix
  QMat G(rows.size(), m);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < m; ++j) G(i, j) = Rat(rows[i][j]);
  auto lin = nullspace_rational(G);
  Echelon lin_span(m);
  for (auto& v : lin) lin_span.add(v);
  size_t dim_lin = lin_span.rows.size();
  for (auto& v : lin) {
    IVec p = primitive_of(v);
    out.push_back(p);
    IVec q(p.size());
    for (size_t k = 0; k < p.size(); ++k) q[k] = -p[k];
    out.push_back(std::move(q));
  }
  if (dim_lin == m) return out;  // the whole space
  size_t s = m - dim_lin - 1;  // active constraints cutting an extreme ray

  std::vector<IVec> rays;
  std::vector<size_t> subset(s);
  // enumerate all size-s subsets of the constraint rows
  std::vector<size_t> idx(s);
  auto consider = [&](const std::vector<size_t>& S) {
    QMat GS(S.size(), m);
    for (size_t i = 0; i < S.size(); ++i)
      for (size_t j = 0; j < m; ++j) GS(i, j) = Rat(rows[S[i]][j]);
    auto ns = nullspace_rational(GS);
    if (ns.size() != dim_lin + 1) return;  // rank-deficient subset
    // pick the null direction transverse to the lineality space
    QVec v;
    for (auto& cand : ns) {
      if (!lin_span.contains(cand)) {
        v = lin_span.reduce(cand);
        break;
      }
    }
    if (v.empty()) return;
    // feasibility of +/- v against all constraints
    bool pos = true, neg = true;
    for (auto& row : rows) {
      Rat d = 0;
      for (size_t k = 0; k < m; ++k) d += Rat(row[k]) * v[k];
      if (d < 0) pos = false;
      if (d > 0) neg = false;
      if (!pos && !neg) return;
    }
    if (neg && !pos)
      for (auto& x : v) x = -x;
    IVec p = primitive_of(v);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
    if (pos && neg) {  // transverse lineality direction (shouldn't happen)
      IVec q(p.size());
      for (size_t k = 0; k < p.size(); ++k) q[k] = -p[k];
      if (std::find(rays.begin(), rays.end(), q) == rays.end()) rays.push_back(q);
    }
  };
  if (s == 0) {
    consider({});
  } else {
    if (rows.size() >= s) {
      std::vector<size_t> S(s);
      // k-subset enumeration
      for (size_t i = 0; i < s; ++i) S[i] = i;
      while (true) {
        consider(S);
        size_t i = s;
        while (i > 0) {
          --i;
          if (S[i] != rows.size() - s + i) break;
          if (i == 0) {
            i = s;
            break;
          }
        }
        if (i == s) break;
        ++S[i];
        for (size_t k = i + 1; k < s; ++k) S[k] = S[k - 1] + 1;
      }
    }
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  for (auto& r : rays) out.push_back(std::move(r));
  return out;
}

}  // namespace

RationalCone RationalCone::from_generators(size_t dim, std::vector<QVec> gens) {
  RationalCone c{dim, {}};
  for (auto& g : gens) {
    IVec p = primitive_of(g);
    if (is_zero(p)) continue;
    if (std::find(c.generators.begin(), c.generators.end(), p) == c.generators.end())
      c.generators.push_back(std::move(p));
  }
  return c;
}

RationalCone RationalCone::from_int_generators(size_t dim, std::vector<IVec> gens) {
  RationalCone c{dim, {}};
  for (auto& g : gens) {
    IVec p = primitive(g);
    if (is_zero(p)) continue;
    if (std::find(c.generators.begin(), c.generators.end(), p) == c.generators.end())
      c.generators.push_back(std::move(p));
  }
  return c;
}

RationalCone RationalCone::full_space(size_t dim) {
  RationalCone c{dim, {}};
  for (size_t i = 0; i < dim; ++i) {
    IVec e(dim, Int(0)), f(dim, Int(0));
    e[i] = 1;
    f[i] = -1;
    c.generators.push_back(e);
    c.generators.push_back(f);
  }
  return c;
}

RationalCone dual_cone(const RationalCone& C) {
  if (C.generators.empty()) return RationalCone::full_space(C.dim);
  return RationalCone{C.dim, cone_from_inequalities(C.dim, C.generators)};
}

bool contains_via_dual(const RationalCone& dual, const QVec& x) {
  for (auto& u : dual.generators) {
    Rat d = 0;
    for (size_t k = 0; k < x.size(); ++k) d += Rat(u[k]) * x[k];
    if (d < 0) return false;
  }
  return true;
}

bool cone_contains(const RationalCone& C, const QVec& x) {
  if (x.size() != C.dim) throw gkz_error("BadShape", "cone_contains dimension mismatch");
  return contains_via_dual(dual_cone(C), x);
}

bool cone_is_full_dimensional(const RationalCone& C) {
  Echelon e(C.dim);
  size_t r = 0;
  for (auto& g : C.generators)
    if (e.add(qvec_of(g))) ++r;
  return r == C.dim;
}

QVec interior_point(const RationalCone& C) {
  if (!cone_is_full_dimensional(C))
    throw gkz_error("DegenerateCone", "interior_point needs a full-dimensional cone");
  RationalCone d = dual_cone(C);
  // try a few deterministic weightings of the generators until strictly
  // inside (for sane generator lists the plain sum already works)
  for (int attempt = 0; attempt < 4; ++attempt) {
    QVec x(C.dim, Rat(0));
    Int w = 1;
    for (auto& g : C.generators) {
      for (size_t k = 0; k < C.dim; ++k) x[k] += Rat(w * g[k]);
      if (attempt > 0) w += attempt;
    }
    bool ok = true;
    for (auto& u : d.generators) {
      if (is_zero(u)) continue;
      Rat s = 0;
      for (size_t k = 0; k < C.dim; ++k) s += Rat(u[k]) * x[k];
      if (s <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  throw gkz_error("DegenerateCone", "failed to find a strict interior point");
}

}  // namespace gkz
