#include "gkz/jets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gkz {

Jet jet_const(cplx a, size_t order) {
  Jet j;
  j.c.assign(order, cplx(0));
  if (order > 0) j.c[0] = a;
  return j;
}

Jet jet_var(cplx base, size_t order) {
  Jet j = jet_const(base, order);
  if (order > 1) j.c[1] = 1.0;
  return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
  Jet r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a[k] + b[k];
  return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  size_t n = std::max(a.c.size(), b.c.size());
  Jet r;
  r.c.assign(n, cplx(0));
  for (size_t i = 0; i < a.c.size() && i < n; ++i)
    for (size_t j = 0; j < b.c.size() && i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

Jet jet_scale(cplx s, const Jet& a) {
  Jet r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

Jet jet_exp(const Jet& a) {
  size_t n = a.c.size();
  Jet r;
  r.c.assign(n, cplx(0));
  if (n == 0) return r;
  r.c[0] = std::exp(a.c[0]);
  for (size_t k = 1; k < n; ++k) {
    cplx s = 0;
    for (size_t j = 1; j <= k; ++j) s += double(j) * a[j] * r.c[k - j];
    r.c[k] = s / double(k);
  }
  return r;
}

Jet jet_recip(const Jet& a) {
  size_t n = a.c.size();
  Jet r;
  r.c.assign(n, cplx(0));
  if (n == 0) return r;
  if (a.c[0] == cplx(0)) throw std::domain_error("jet_recip: zero constant term");
  r.c[0] = 1.0 / a.c[0];
  for (size_t k = 1; k < n; ++k) {
    cplx s = 0;
    for (size_t j = 1; j <= k; ++j) s += a[j] * r.c[k - j];
    r.c[k] = -s / a.c[0];
  }
  return r;
}

Jet power_over_gamma_jet(cplx logz, cplx a, size_t order) {
  // z^{a+s} = z^a exp(s logz)
  Jet e;
  e.c.assign(order, cplx(0));
  cplx za = std::exp(a * logz);
  cplx p = 1.0;  // logz^k / k!
  for (size_t k = 0; k < order; ++k) {
    e.c[k] = za * p;
    p *= logz / double(k + 1);
  }
  auto d = recip_gamma_jet(a, (int)order);  // derivatives of 1/Gamma(.+1)
  Jet g;
  g.c.assign(order, cplx(0));
  double fact = 1.0;
  for (size_t k = 0; k < order; ++k) {
    if (k > 0) fact *= k;
    g.c[k] = d[k] / fact;
  }
  return jet_mul(e, g);
}

MJet::MJet(std::vector<int> orders) : ord(std::move(orders)) {
  size_t total = 1;
  for (int o : ord) total *= (size_t)o;
  a.assign(total, cplx(0));
}

size_t MJet::index(const std::vector<int>& expo) const {
  size_t idx = 0;
  for (size_t j = 0; j < ord.size(); ++j) idx = idx * ord[j] + expo[j];
  return idx;
}

MJet MJet::constant(cplx v, std::vector<int> orders) {
  MJet m(std::move(orders));
  if (!m.a.empty()) m.a[0] = v;
  return m;
}

MJet MJet::variable(cplx base, size_t j, std::vector<int> orders) {
  MJet m = constant(base, std::move(orders));
  if (m.ord[j] > 1) {
    std::vector<int> e(m.ord.size(), 0);
    e[j] = 1;
    m.a[m.index(e)] = 1.0;
  }
  return m;
}

MJet mjet_add(const MJet& x, const MJet& y) {
  MJet r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

MJet mjet_scale(cplx s, const MJet& x) {
  MJet r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

namespace {

void for_each_exponent(const std::vector<int>& ord,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> e(ord.size(), 0);
  while (true) {
    fn(e);
    size_t j = ord.size();
    while (j > 0) {
      --j;
      if (++e[j] < ord[j]) break;
      e[j] = 0;
      if (j == 0) return;
    }
    if (ord.empty()) return;
  }
}

}  // namespace

MJet mjet_mul(const MJet& x, const MJet& y) {
  MJet r(x.ord);
  std::vector<int> sum(x.ord.size());
  for_each_exponent(x.ord, [&](const std::vector<int>& e1) {
    cplx c1 = x.a[x.index(e1)];
    if (c1 == cplx(0)) return;
    for_each_exponent(y.ord, [&](const std::vector<int>& e2) {
      cplx c2 = y.a[y.index(e2)];
      if (c2 == cplx(0)) return;
      for (size_t j = 0; j < sum.size(); ++j) {
        sum[j] = e1[j] + e2[j];
        if (sum[j] >= x.ord[j]) return;  // truncated away
      }
      r.a[r.index(sum)] += c1 * c2;
    });
  });
  return r;
}

MJet mjet_compose(const std::vector<cplx>& f_coeffs, const MJet& g) {
  // Horner evaluation of f at g0 + (g - g0); the nilpotent part kills terms
  // beyond the total truncation order automatically.
  MJet dg = g;
  if (!dg.a.empty()) dg.a[0] = 0;
  size_t total = 1;
  for (int o : g.ord) total += (size_t)(o - 1);
  size_t terms = std::min(f_coeffs.size(), total);
  MJet r = MJet::constant(terms > 0 ? f_coeffs[terms - 1] : cplx(0), g.ord);
  for (size_t k = terms; k-- > 1;) {
    r = mjet_mul(r, dg);
    r.a[0] += f_coeffs[k - 1];
  }
  return r;
}

MJet mjet_recip(const MJet& g) {
  cplx g0 = g.a[0];
  if (g0 == cplx(0)) throw std::domain_error("mjet_recip: zero constant term");
  size_t total = 1;
  for (int o : g.ord) total += (size_t)(o - 1);
  std::vector<cplx> coeffs(total);
  cplx p = 1.0 / g0;
  for (size_t k = 0; k < total; ++k) {
    coeffs[k] = p;
    p *= -1.0 / g0;
  }
  return mjet_compose(coeffs, g);
}

}  // namespace gkz
