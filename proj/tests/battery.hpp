#pragma once

// A battery of scalar test functions of n commuting variables, each with a
// closed-form value and an exact Taylor-jet routine.  Shared between the unit
// tests and the acceptance run.

#include <cmath>
#include <vector>

#include "gkz/ktheory.hpp"

namespace gkz {

namespace battery_detail {

inline size_t total_order(const std::vector<int>& ords) {
  size_t t = 1;
  for (int o : ords) t += (size_t)(o - 1);
  return t;
}

inline std::vector<cplx> exp_coeffs(cplx at, size_t K) {
  std::vector<cplx> c(K);
  cplx e = std::exp(at);
  double fact = 1.0;
  for (size_t k = 0; k < K; ++k) {
    if (k > 0) fact *= k;
    c[k] = e / fact;
  }
  return c;
}

inline std::vector<cplx> log_coeffs(cplx at, size_t K) {
  // principal log, |arg at| < pi assumed by the callers
  std::vector<cplx> c(K);
  c[0] = std::log(at);
  cplx p = 1.0;
  for (size_t k = 1; k < K; ++k) {
    p /= at;
    c[k] = ((k % 2 == 1) ? 1.0 : -1.0) * p / double(k);
  }
  return c;
}

inline std::vector<cplx> recip_coeffs(cplx at, size_t K) {
  std::vector<cplx> c(K);
  cplx p = 1.0 / at;
  for (size_t k = 0; k < K; ++k) {
    c[k] = p;
    p *= -1.0 / at;
  }
  return c;
}

inline std::vector<cplx> rgamma_coeffs(cplx at, size_t K) {
  auto d = recip_gamma_jet(at - 1.0, (int)K);  // derivatives of 1/Gamma(.+1)
  double fact = 1.0;
  for (size_t k = 0; k < K; ++k) {
    if (k > 0) fact *= k;
    d[k] /= fact;
  }
  return d;
}

}  // namespace battery_detail

inline std::vector<JetFunction> function_battery(size_t n) {
  using namespace battery_detail;
  using V = const std::vector<cplx>&;
  using O = const std::vector<int>&;
  auto var = [](V base, size_t j, O ords) { return MJet::variable(base[j], j, ords); };

  std::vector<JetFunction> fs;

  fs.push_back({"one", [](V) { return cplx(1); },
                [](V, O ords) { return MJet::constant(cplx(1), ords); }, nullptr});

  fs.push_back({"r0", [](V r) { return r[0]; },
                [=](V b, O o) { return var(b, 0, o); }, nullptr});

  fs.push_back({"rlast", [n](V r) { return r[n - 1]; },
                [=](V b, O o) { return var(b, n - 1, o); }, nullptr});

  fs.push_back({"prod",
                [n](V r) {
                  cplx p = 1;
                  for (size_t j = 0; j < n; ++j) p *= r[j];
                  return p;
                },
                [=](V b, O o) {
                  MJet p = var(b, 0, o);
                  for (size_t j = 1; j < n; ++j) p = mjet_mul(p, var(b, j, o));
                  return p;
                },
                nullptr});

  fs.push_back({"linear",
                [n](V r) {
                  cplx s = 0;
                  for (size_t j = 0; j < n; ++j) s += double(j + 1) * r[j];
                  return s;
                },
                [=](V b, O o) {
                  MJet s = MJet::constant(0, o);
                  for (size_t j = 0; j < n; ++j)
                    s = mjet_add(s, mjet_scale(double(j + 1), var(b, j, o)));
                  return s;
                },
                nullptr});

  fs.push_back({"poly", [](V r) { return r[0] * r[0] * r[1] + 3.0; },
                [=](V b, O o) {
                  MJet x = var(b, 0, o);
                  MJet p = mjet_mul(mjet_mul(x, x), var(b, 1, o));
                  p.a[0] += 3.0;
                  return p;
                },
                nullptr});

  fs.push_back({"recip", [](V r) { return 1.0 / (3.0 - r[0] * r[1]); },
                [=](V b, O o) {
                  MJet g = mjet_scale(-1.0, mjet_mul(var(b, 0, o), var(b, 1, o)));
                  g.a[0] += 3.0;
                  return mjet_recip(g);
                },
                nullptr});

  fs.push_back({"rational", [](V r) { return (r[0] + r[1]) / (r[0] * r[1] + 5.0); },
                [=](V b, O o) {
                  MJet num = mjet_add(var(b, 0, o), var(b, 1, o));
                  MJet den = mjet_mul(var(b, 0, o), var(b, 1, o));
                  den.a[0] += 5.0;
                  return mjet_mul(num, mjet_recip(den));
                },
                nullptr});

  fs.push_back({"exp", [](V r) { return std::exp(0.5 * r[0]); },
                [=](V b, O o) {
                  MJet g = mjet_scale(0.5, var(b, 0, o));
                  return mjet_compose(exp_coeffs(g.a[0], total_order(o)), g);
                },
                nullptr});

  fs.push_back({"rgamma",
                [](V r) {
                  auto d = recip_gamma_jet(r[0] + r[1], 1);
                  return d[0];
                },
                [=](V b, O o) {
                  MJet g = mjet_add(var(b, 0, o), var(b, 1, o));
                  // 1/Gamma(1 + r0 + r1)
                  return mjet_compose(rgamma_coeffs(g.a[0] + 1.0, total_order(o)), g);
                },
                nullptr});

  fs.push_back({"pow", [](V r) { return std::exp(0.3 * std::log(2.0 + r[0])); },
                [=](V b, O o) {
                  MJet g = var(b, 0, o);
                  g.a[0] += 2.0;
                  size_t K = total_order(o);
                  auto lc = log_coeffs(g.a[0], K);
                  MJet lg = mjet_scale(0.3, mjet_compose(lc, g));
                  return mjet_compose(exp_coeffs(lg.a[0], K), lg);
                },
                nullptr});

  fs.push_back({"resolvent",
                [n](V r) {
                  cplx p = 1;
                  for (size_t j = 0; j < n; ++j) p *= 1.0 / (1.0 - r[j] / 3.0);
                  return p;
                },
                [=](V b, O o) {
                  MJet p = MJet::constant(1, o);
                  for (size_t j = 0; j < n; ++j) {
                    MJet g = mjet_scale(-1.0 / 3.0, var(b, j, o));
                    g.a[0] += 1.0;
                    p = mjet_mul(p, mjet_recip(g));
                  }
                  return p;
                },
                nullptr});

  return fs;
}

}  // namespace gkz
