#include "gkz/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gkz {

IntMat PointConfiguration::point_matrix() const {
  IntMat m(d(), n());
  for (size_t j = 0; j < n(); ++j)
    for (size_t i = 0; i < d(); ++i) m(i, j) = points[j][i];
  return m;
}

PointConfiguration validate_configuration(std::vector<IVec> points, IVec h) {
  if (points.empty()) throw gkz_error("EmptyConfiguration", "no points given");
  size_t d = h.size();
  for (auto& p : points) {
    if (p.size() != d) throw gkz_error("BadShape", "point dimension mismatch");
    if (dot(h, p) != 1) throw gkz_error("NotGraded", "point with height != 1");
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw gkz_error("DuplicatePoint", "repeated point");
  PointConfiguration c;
  c.points = std::move(points);
  c.h = std::move(h);
  auto snf = smith_normal_form(c.point_matrix());
  if (snf.invariants.size() != d)
    throw gkz_error("NotGenerating", "points do not span Q^d");
  for (auto& inv : snf.invariants)
    if (inv != 1) throw gkz_error("NotGenerating", "points generate a proper sublattice");
  c.relation_basis = kernel_lattice(c.point_matrix());
  return c;
}

bool StackyFan::position_is_ray(int p) const {
  for (auto& c : cones)
    if (std::find(c.begin(), c.end(), p) != c.end()) return true;
  return false;
}

bool StackyFan::spans_cone(const std::vector<int>& positions) const {
  for (auto& c : cones)
    if (std::includes(c.begin(), c.end(), positions.begin(), positions.end())) return true;
  return false;
}

StackyFan Triangulation::fan() const {
  StackyFan f;
  f.dim = config->d();
  f.vectors = config->points;
  for (size_t j = 0; j < config->n(); ++j) f.labels.push_back((int)j);
  f.cones = cells;
  return f;
}

bool Triangulation::is_ray(int j) const {
  for (auto& c : cells)
    if (std::find(c.begin(), c.end(), j) != c.end()) return true;
  return false;
}

namespace {

// heights with symbolic-perturbation layers, compared lexicographically
using LexVal = QVec;

int lex_cmp(const LexVal& a, const LexVal& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

RationalCone cone_of_points(const PointConfiguration& c, const std::vector<int>& idx) {
  std::vector<IVec> gens;
  for (int j : idx) gens.push_back(c.points[j]);
  return RationalCone::from_int_generators(c.d(), gens);
}

RationalCone intersect(const RationalCone& A, const RationalCone& B) {
  // A cap B = dual(dual A + dual B)
  RationalCone da = dual_cone(A), db = dual_cone(B);
  std::vector<IVec> gens = da.generators;
  for (auto& g : db.generators) gens.push_back(g);
  return dual_cone(RationalCone::from_int_generators(A.dim, gens));
}

Triangulation tri_impl(const PointConfiguration& c, const std::vector<LexVal>& omega,
                       bool verify) {
  size_t n = c.n(), d = c.d(), layers = omega[0].size();
  Triangulation T;
  T.config = &c;
  for (size_t j = 0; j < n; ++j) T.height.push_back(omega[j][0]);

  std::vector<int> B(d);
  std::vector<std::vector<int>> cells;
  // all d-subsets of {0..n-1}
  for (size_t i = 0; i < d; ++i) B[i] = (int)i;
  while (true) {
    // test B
    QMat V(d, d);
    for (size_t col = 0; col < d; ++col)
      for (size_t row = 0; row < d; ++row) V(row, col) = Rat(c.points[B[row]][col]);
    // psi_B: linear functional matching omega on B, solved per layer
    std::vector<QVec> m(layers);
    bool independent = true;
    for (size_t l = 0; l < layers && independent; ++l) {
      QVec rhs(d);
      for (size_t row = 0; row < d; ++row) rhs[row] = omega[B[row]][l];
      if (!solve_rational(V, rhs, m[l])) independent = false;
    }
    if (independent) {
      // V as rows of points is square; independence means solvable uniquely,
      // but solve_rational also succeeds on consistent singular systems, so
      // check the determinant
      IntMat P(d, d);
      for (size_t row = 0; row < d; ++row)
        for (size_t col = 0; col < d; ++col) P(row, col) = c.points[B[row]][col];
      if (det(P) == 0) independent = false;
    }
    if (independent) {
      bool is_cell = true;
      for (size_t k = 0; k < n && is_cell; ++k) {
        if (std::find(B.begin(), B.end(), (int)k) != B.end()) continue;
        LexVal psi(layers);
        for (size_t l = 0; l < layers; ++l) {
          Rat s = 0;
          for (size_t i = 0; i < d; ++i) s += m[l][i] * Rat(c.points[k][i]);
          psi[l] = s;
        }
        int cmp = lex_cmp(psi, omega[k]);
        if (cmp == 0)
          throw gkz_error("DegenerateHeight",
                          "height not generic: tie at point " + std::to_string(k));
        if (cmp > 0) is_cell = false;
      }
      if (is_cell) cells.push_back(B);
    }
    // next subset
    size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (B[i] != (int)(n - d + i)) {
        ++B[i];
        for (size_t k = i + 1; k < d; ++k) B[k] = B[k - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  if (cells.empty()) throw gkz_error("DegenerateHeight", "no lower-hull cells found");
  std::sort(cells.begin(), cells.end());
  T.cells = std::move(cells);

  if (verify) {
    // volume consistency against the canonical placing triangulation
    Int vol = 0;
    for (auto& cell : T.cells) {
      std::vector<IVec> vs;
      for (int j : cell) vs.push_back(c.points[j]);
      vol += lattice_index(vs);
    }
    if (vol != normalized_volume(c))
      throw gkz_error("BadTriangulation", "cells do not tile the cone over Delta");
    // pairwise intersections are common faces
    for (size_t a = 0; a < T.cells.size(); ++a)
      for (size_t b = a + 1; b < T.cells.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(T.cells[a].begin(), T.cells[a].end(), T.cells[b].begin(),
                              T.cells[b].end(), std::back_inserter(common));
        RationalCone meet =
            intersect(cone_of_points(c, T.cells[a]), cone_of_points(c, T.cells[b]));
        RationalCone face = cone_of_points(c, common);
        RationalCone face_dual = dual_cone(face);
        for (auto& g : meet.generators)
          if (!contains_via_dual(face_dual, qvec_of(g)))
            throw gkz_error("BadTriangulation", "cells meet outside a common face");
      }
  }
  return T;
}

}  // namespace

Triangulation regular_triangulation(const PointConfiguration& c, const QVec& omega) {
  if (omega.size() != c.n()) throw gkz_error("BadShape", "height length mismatch");
  std::vector<LexVal> w(c.n());
  for (size_t j = 0; j < c.n(); ++j) w[j] = {omega[j]};
  return tri_impl(c, w, true);
}

Triangulation regular_triangulation_lex(const PointConfiguration& c, const QVec& omega) {
  if (omega.size() != c.n()) throw gkz_error("BadShape", "height length mismatch");
  // omega_j + eps^{j+1} with eps infinitesimal breaks every tie deterministically
  std::vector<LexVal> w(c.n());
  for (size_t j = 0; j < c.n(); ++j) {
    w[j].assign(c.n() + 1, Rat(0));
    w[j][0] = omega[j];
    w[j][j + 1] = 1;
  }
  return tri_impl(c, w, true);
}

Int normalized_volume(const PointConfiguration& c) {
  std::vector<LexVal> w(c.n());
  for (size_t j = 0; j < c.n(); ++j) {
    w[j].assign(c.n() + 1, Rat(0));
    w[j][j + 1] = 1;
  }
  Triangulation T = tri_impl(c, w, false);
  Int vol = 0;
  for (auto& cell : T.cells) {
    std::vector<IVec> vs;
    for (int j : cell) vs.push_back(c.points[j]);
    vol += lattice_index(vs);
  }
  return vol;
}

std::vector<BoxElement> box_elements(const StackyFan& F) {
  std::map<IVec, BoxElement> found;
  size_t d = F.dim;
  for (auto& cone : F.cones) {
    if (cone.size() != d) throw gkz_error("BadFan", "non-simplicial maximal cone");
    QMat W(d, d);
    for (size_t col = 0; col < d; ++col)
      for (size_t row = 0; row < d; ++row) W(row, col) = Rat(F.vectors[cone[col]][row]);
    std::vector<IVec> vs;
    for (int p : cone) vs.push_back(F.vectors[p]);
    Int index = lattice_index(vs);
    // bounding box of the half-open parallelepiped: subset sums of the columns
    IVec lo(d, Int(0)), hi(d, Int(0));
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
      IVec s(d, Int(0));
      for (size_t b = 0; b < d; ++b)
        if (mask & (size_t(1) << b)) s = add(s, F.vectors[cone[b]]);
      for (size_t i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], s[i]);
        hi[i] = std::max(hi[i], s[i]);
      }
    }
    Int count = 0;
    IVec v = lo;
    while (true) {
      QVec q;
      if (solve_rational(W, qvec_of(v), q)) {
        bool in_box = true;
        for (auto& qi : q)
          if (qi < 0 || qi >= 1) in_box = false;
        if (in_box) {
          ++count;
          BoxElement be;
          be.v = v;
          be.q.assign(F.vectors.size(), Rat(0));
          for (size_t i = 0; i < d; ++i) be.q[cone[i]] = q[i];
          for (size_t i = 0; i < d; ++i)
            if (q[i] != 0) be.sigma.push_back(cone[i]);
          std::sort(be.sigma.begin(), be.sigma.end());
          auto it = found.find(v);
          if (it == found.end()) {
            found.emplace(v, std::move(be));
          } else if (it->second.sigma != be.sigma || it->second.q != be.q) {
            throw gkz_error("BadFan", "inconsistent minimal cone for a Box element");
          }
        }
      }
      // advance v through the box
      size_t i = 0;
      for (; i < d; ++i) {
        if (v[i] < hi[i]) {
          ++v[i];
          break;
        }
        v[i] = lo[i];
      }
      if (i == d) break;
    }
    if (count != index)
      throw gkz_error("BadFan", "parallelepiped point count does not match the index");
  }
  std::vector<BoxElement> out;
  for (auto& [v, be] : found) out.push_back(be);
  std::sort(out.begin(), out.end(),
            [](const BoxElement& a, const BoxElement& b) { return lex_less(a.v, b.v); });
  return out;
}

namespace {

// cells of T_minus predicted by modifying T_plus along the circuit
bool modification_matches(const Triangulation& Tp, const Triangulation& Tm, const Circuit& c) {
  std::vector<int> I;
  for (int j : c.I_plus) I.push_back(j);
  for (int j : c.I_minus) I.push_back(j);
  std::sort(I.begin(), I.end());
  std::set<std::vector<int>> expected;
  bool any_essential = false;
  for (auto& cell : Tp.cells) {
    bool essential = false;
    for (int v : c.I_plus) {
      std::vector<int> body;
      for (int j : I)
        if (j != v) body.push_back(j);
      if (std::includes(cell.begin(), cell.end(), body.begin(), body.end())) {
        essential = true;
        // F = cell minus (I \ v); replace by F u (I \ w) for each w in I_minus
        std::vector<int> F;
        std::set_difference(cell.begin(), cell.end(), body.begin(), body.end(),
                            std::back_inserter(F));
        for (int w : c.I_minus) {
          std::vector<int> nc = F;
          for (int j : I)
            if (j != w) nc.push_back(j);
          std::sort(nc.begin(), nc.end());
          expected.insert(nc);
        }
        break;
      }
    }
    if (essential)
      any_essential = true;
    else
      expected.insert(cell);
  }
  if (!any_essential) return false;
  std::set<std::vector<int>> actual(Tm.cells.begin(), Tm.cells.end());
  return expected == actual;
}

}  // namespace

Circuit find_circuit(const Triangulation& T_plus, const Triangulation& T_minus) {
  if (T_plus.config != T_minus.config)
    throw gkz_error("NotAdjacent", "triangulations of different configurations");
  std::set<std::vector<int>> cp(T_plus.cells.begin(), T_plus.cells.end());
  std::set<std::vector<int>> cm(T_minus.cells.begin(), T_minus.cells.end());
  if (cp == cm) throw gkz_error("NotAdjacent", "identical triangulations");
  std::set<int> touched;
  for (auto& cell : cp)
    if (!cm.count(cell)) touched.insert(cell.begin(), cell.end());
  for (auto& cell : cm)
    if (!cp.count(cell)) touched.insert(cell.begin(), cell.end());
  std::vector<int> W(touched.begin(), touched.end());
  const auto& cfg = *T_plus.config;
  IntMat M(cfg.d(), W.size());
  for (size_t col = 0; col < W.size(); ++col)
    for (size_t row = 0; row < cfg.d(); ++row) M(row, col) = cfg.points[W[col]][row];
  auto kern = kernel_lattice(M);
  if (kern.size() != 1)
    throw gkz_error("NotAdjacent", "symmetric difference is not a single circuit");
  for (int sign = 0; sign < 2; ++sign) {
    Circuit c;
    c.h.assign(cfg.n(), Int(0));
    for (size_t col = 0; col < W.size(); ++col)
      c.h[W[col]] = sign == 0 ? kern[0][col] : -kern[0][col];
    for (size_t j = 0; j < cfg.n(); ++j) {
      if (c.h[j] > 0) c.I_plus.push_back((int)j);
      if (c.h[j] < 0) c.I_minus.push_back((int)j);
    }
    if (modification_matches(T_plus, T_minus, c)) return c;
  }
  throw gkz_error("NotAdjacent", "symmetric difference is not of flip form");
}

EssentialCones essential_cones(const Triangulation& T, const Circuit& c, bool plus_side) {
  std::vector<int> I;
  for (int j : c.I_plus) I.push_back(j);
  for (int j : c.I_minus) I.push_back(j);
  std::sort(I.begin(), I.end());
  const auto& side = plus_side ? c.I_plus : c.I_minus;
  EssentialCones out;
  for (auto& cell : T.cells) {
    for (int v : side) {
      std::vector<int> body;
      for (int j : I)
        if (j != v) body.push_back(j);
      if (std::includes(cell.begin(), cell.end(), body.begin(), body.end())) {
        std::vector<int> F;
        std::set_difference(cell.begin(), cell.end(), body.begin(), body.end(),
                            std::back_inserter(F));
        out.cones.push_back(cell);
        out.separating.push_back(F);
        break;
      }
    }
  }
  return out;
}

HatFan hat_fan(const Triangulation& T_plus, const Triangulation& T_minus, const Circuit& c) {
  const auto& cfg = *T_plus.config;
  IVec v_hat(cfg.d(), Int(0));
  for (int j : c.I_plus) v_hat = add(v_hat, scale(c.h[j], cfg.points[j]));

  auto ess = essential_cones(T_plus, c, true);
  if (ess.cones.empty()) throw gkz_error("NotAdjacent", "no essential cones on the plus side");
  std::vector<int> I;
  for (int j : c.I_plus) I.push_back(j);
  for (int j : c.I_minus) I.push_back(j);
  std::sort(I.begin(), I.end());

  StackyFan F;
  F.dim = cfg.d();
  F.vectors = cfg.points;
  for (size_t j = 0; j < cfg.n(); ++j) F.labels.push_back((int)j);
  F.vectors.push_back(v_hat);
  F.labels.push_back((int)cfg.n());
  int hat_pos = (int)cfg.n();

  std::set<std::vector<int>> cones;
  std::set<std::vector<int>> ess_set(ess.cones.begin(), ess.cones.end());
  for (auto& cell : T_plus.cells)
    if (!ess_set.count(cell)) cones.insert(cell);
  std::set<std::vector<int>> seps(ess.separating.begin(), ess.separating.end());
  for (auto& Fsep : seps)
    for (int vp : c.I_plus)
      for (int vm : c.I_minus) {
        std::vector<int> cone = Fsep;
        cone.push_back(hat_pos);
        for (int j : I)
          if (j != vp && j != vm) cone.push_back(j);
        std::sort(cone.begin(), cone.end());
        cones.insert(cone);
      }
  F.cones.assign(cones.begin(), cones.end());
  return {std::move(F), std::move(v_hat)};
}

StackyFan quotient_fan(const StackyFan& F, const std::vector<int>& sigma) {
  if (!sigma.empty() && !F.spans_cone(sigma))
    throw gkz_error("NotACone", "sigma is not a cone of the fan");
  size_t d = F.dim, r = sigma.size();
  if (r == 0) return F;
  // SNF-based projection Z^d -> Z^{d-r} with kernel the saturated span of sigma
  IntMat C(d, r);
  for (size_t col = 0; col < r; ++col)
    for (size_t row = 0; row < d; ++row) C(row, col) = F.vectors[sigma[col]][row];
  auto snf = smith_normal_form(C);
  if (snf.invariants.size() != r) throw gkz_error("NotACone", "sigma vectors dependent");
  IntMat P(d - r, d);
  for (size_t i = 0; i < d - r; ++i)
    for (size_t j = 0; j < d; ++j) P(i, j) = snf.U(r + i, j);

  StackyFan Q;
  Q.dim = d - r;
  std::map<int, int> pos_map;  // original position -> quotient position
  for (int p = 0; p < (int)F.vectors.size(); ++p) {
    if (std::find(sigma.begin(), sigma.end(), p) != sigma.end()) continue;
    std::vector<int> ext = sigma;
    ext.push_back(p);
    std::sort(ext.begin(), ext.end());
    if (!F.spans_cone(ext)) continue;
    pos_map[p] = (int)Q.vectors.size();
    Q.vectors.push_back(mul_vec(P, F.vectors[p]));
    Q.labels.push_back(p);
  }
  std::set<std::vector<int>> qcones;
  for (auto& cone : F.cones) {
    if (!std::includes(cone.begin(), cone.end(), sigma.begin(), sigma.end())) continue;
    std::vector<int> img;
    for (int p : cone)
      if (pos_map.count(p)) img.push_back(pos_map[p]);
    std::sort(img.begin(), img.end());
    qcones.insert(img);
  }
  Q.cones.assign(qcones.begin(), qcones.end());
  return Q;
}

}  // namespace gkz
