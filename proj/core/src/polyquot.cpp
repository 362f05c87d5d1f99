#include "gkz/polyquot.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

// all exponent vectors of total degree k over m variables, lex increasing
void gen_monomials(size_t m, int k, std::vector<int>& cur, size_t pos,
                   std::vector<std::vector<int>>& out) {
  if (pos + 1 == m) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= k; ++e) {
    cur[pos] = e;
    gen_monomials(m, k - e, cur, pos + 1, out);
  }
}

std::vector<std::vector<int>> monomials_of_degree(size_t m, int k) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(m, 0);
  gen_monomials(m, k, cur, 0, out);
  return out;
}

}  // namespace

int PolyQuotient::var_position(int fan_position) const {
  auto it = std::find(vars.begin(), vars.end(), fan_position);
  return it == vars.end() ? -1 : (int)(it - vars.begin());
}

QVec PolyQuotient::reduce_monomial(const std::vector<int>& expo) const {
  int deg = 0;
  for (int e : expo) deg += e;
  QVec out(dim, Rat(0));
  if ((size_t)deg >= degrees.size()) return out;  // beyond the last nonzero piece
  const auto& dd = degrees[deg];
  auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), expo);
  if (it == dd.monomials.end() || *it != expo)
    throw gkz_error("BadMonomial", "exponent vector not found");
  size_t idx = it - dd.monomials.begin();
  QVec unit(dd.monomials.size(), Rat(0));
  unit[idx] = 1;
  QVec rem = dd.ideal.reduce(std::move(unit));
  for (size_t k = 0; k < rem.size(); ++k) {
    if (rem[k] == 0) continue;
    size_t slot = dd.basis_slot[k];
    if (slot == SIZE_MAX)
      throw gkz_error("InternalError", "nonzero remainder on a pivot monomial");
    out[slot] += rem[k];
  }
  return out;
}

PolyQuotient sector_algebra(const StackyFan& Q) {
  PolyQuotient A;
  for (int p = 0; p < (int)Q.vectors.size(); ++p)
    if (Q.position_is_ray(p)) A.vars.push_back(p);
  size_t m = A.vars.size();

  // squarefree non-face monomials (any non-face works; minimal ones generate)
  std::vector<std::vector<int>> nonfaces;  // as exponent vectors
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    std::vector<int> subset;
    for (size_t b = 0; b < m; ++b)
      if (mask & (size_t(1) << b)) subset.push_back(A.vars[b]);
    if (!Q.spans_cone(subset)) {
      std::vector<int> expo(m, 0);
      for (size_t b = 0; b < m; ++b)
        if (mask & (size_t(1) << b)) expo[b] = 1;
      nonfaces.push_back(expo);
    }
  }
  // linear forms sum_j <e_i, w_j> x_j
  std::vector<QVec> linear;
  for (size_t i = 0; i < Q.dim; ++i) {
    QVec form(m);
    for (size_t b = 0; b < m; ++b) form[b] = Rat(Q.vectors[A.vars[b]][i]);
    linear.push_back(form);
  }

  const int max_degree = 24;
  for (int k = 0;; ++k) {
    if (k > max_degree)
      throw gkz_error("NonArtinian", "sector algebra graded pieces do not terminate");
    PolyQuotient::DegreeData dd;
    dd.monomials = monomials_of_degree(m, k);
    std::sort(dd.monomials.begin(), dd.monomials.end());
    size_t nm = dd.monomials.size();
    dd.ideal = EchelonSpan(nm);
    auto mono_index = [&](const std::vector<int>& e) {
      auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), e);
      return (size_t)(it - dd.monomials.begin());
    };
    // non-face monomial multiples
    for (auto& nf : nonfaces) {
      int nfdeg = 0;
      for (int e : nf) nfdeg += e;
      if (nfdeg > k) continue;
      for (auto& rest : monomials_of_degree(m, k - nfdeg)) {
        std::vector<int> e(m);
        for (size_t b = 0; b < m; ++b) e[b] = nf[b] + rest[b];
        QVec v(nm, Rat(0));
        v[mono_index(e)] = 1;
        dd.ideal.add(std::move(v));
      }
    }
    // linear form multiples
    if (k >= 1) {
      for (auto& form : linear) {
        for (auto& rest : monomials_of_degree(m, k - 1)) {
          QVec v(nm, Rat(0));
          for (size_t b = 0; b < m; ++b) {
            if (form[b] == 0) continue;
            std::vector<int> e = rest;
            ++e[b];
            v[mono_index(e)] += form[b];
          }
          dd.ideal.add(std::move(v));
        }
      }
    }
    dd.basis_slot.assign(nm, SIZE_MAX);
    size_t added = 0;
    for (size_t i = 0; i < nm; ++i) {
      if (dd.ideal.is_pivot(i)) continue;
      dd.basis_slot[i] = A.basis.size();
      A.basis.push_back(dd.monomials[i]);
      A.basis_degree.push_back(k);
      ++added;
    }
    A.degrees.push_back(std::move(dd));
    if (added == 0 && k >= 1) break;  // ideal is everything from here on
  }
  A.dim = A.basis.size();

  // multiplication matrices
  A.mult.assign(m, std::vector<QVec>(A.dim));
  for (size_t v = 0; v < m; ++v)
    for (size_t col = 0; col < A.dim; ++col) {
      std::vector<int> e = A.basis[col];
      ++e[v];
      A.mult[v][col] = A.reduce_monomial(e);
    }
  return A;
}

}  // namespace gkz
