#pragma once

#include <vector>

#include "gkz/specfun.hpp"

namespace gkz {

// Truncated univariate Taylor series (coefficients, not derivatives).
struct Jet {
  std::vector<cplx> c;

  size_t order() const { return c.size(); }
  cplx operator[](size_t k) const { return k < c.size() ? c[k] : cplx(0); }
};

Jet jet_const(cplx a, size_t order);
Jet jet_var(cplx base, size_t order);  // base + s
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_scale(cplx s, const Jet& a);
Jet jet_exp(const Jet& a);
Jet jet_recip(const Jet& a);  // requires a.c[0] != 0

// Taylor coefficients of s -> z^{a+s} / Gamma(a+1+s) at s=0, where
// z^w = exp(w * logz) for a fixed branch logz = log|z| + i arg z.
Jet power_over_gamma_jet(cplx logz, cplx a, size_t order);

// Dense multivariate truncated Taylor series; exponent of variable j runs
// through 0..ord[j]-1.  Used for the jet form of analytic functions of the
// commuting operator family.
struct MJet {
  std::vector<int> ord;
  std::vector<cplx> a;  // lex-flattened, last variable fastest

  explicit MJet(std::vector<int> orders);
  size_t index(const std::vector<int>& expo) const;
  static MJet constant(cplx v, std::vector<int> orders);
  // base + s_j as a jet
  static MJet variable(cplx base, size_t j, std::vector<int> orders);
};

MJet mjet_add(const MJet& x, const MJet& y);
MJet mjet_mul(const MJet& x, const MJet& y);
MJet mjet_scale(cplx s, const MJet& x);
// f(g(s)) where f is given by its univariate Taylor coefficients at g(0);
// the coefficient list must be long enough for the total truncation order.
MJet mjet_compose(const std::vector<cplx>& f_coeffs, const MJet& g);
MJet mjet_recip(const MJet& g);  // 1/g, g(0) != 0

}  // namespace gkz
