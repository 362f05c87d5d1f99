#include "gkz/specfun.hpp"

#include <cmath>

namespace gkz {

namespace {

const double pi = 3.14159265358979323846264338327950288;

// Lanczos coefficients, g = 7
const double lanczos_p[9] = {0.99999999999980993,    676.5203681218851,
                             -1259.1392167224028,    771.32342877765313,
                             -176.61502916214059,    12.507343278686905,
                             -0.13857109526572012,   9.9843695780195716e-6,
                             1.5056327351493116e-7};

cplx lgamma_main(cplx z) {
  // valid for Re(z) >= 0.5
  cplx x = lanczos_p[0];
  for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (z + cplx(i - 1, 0));
  cplx t = z + 6.5;
  return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx lgamma_c(cplx z) {
  if (z.real() >= 0.5) return lgamma_main(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_main(1.0 - z);
}

cplx polygamma_c(int m, cplx z) {
  // shift into the asymptotic regime, then use the Bernoulli expansion
  static const double bern[8] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,  -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  cplx shift = 0;
  // psi^(m)(z) = psi^(m)(z+1) + (-1)^{m+1} m! / z^{m+1}
  double sign = (m % 2 == 0) ? -1.0 : 1.0;
  double mfact = 1.0;
  for (int k = 1; k <= m; ++k) mfact *= k;
  while (z.real() < 18.0) {
    shift += sign * mfact / std::pow(z, m + 1);
    z += 1.0;
  }
  cplx res = 0;
  if (m == 0) {
    res = std::log(z) - 0.5 / z;
    cplx zi = 1.0 / (z * z);
    cplx p = zi;
    for (int k = 0; k < 8; ++k) {
      res -= bern[k] / (2.0 * (k + 1)) * p;
      p *= zi;
    }
  } else {
    // psi^(m)(z) ~ (-1)^{m-1} [ (m-1)!/z^m + m!/(2 z^{m+1})
    //              + sum_k B_{2k} (2k+m-1)!/(2k)! / z^{2k+m} ]
    double s = (m % 2 == 1) ? 1.0 : -1.0;
    double fm1 = mfact / m;  // (m-1)!
    res = s * (fm1 / std::pow(z, m) + mfact / (2.0 * std::pow(z, m + 1)));
    for (int k = 1; k <= 8; ++k) {
      double num = 1.0;  // (2k+m-1)! / (2k)!
      for (int j = 2 * k + 1; j <= 2 * k + m - 1; ++j) num *= j;
      res += s * bern[k - 1] * num / std::pow(z, 2 * k + m);
    }
  }
  return res + shift;
}

std::vector<cplx> recip_gamma_jet(cplx base, int nu) {
  if (nu <= 0) return {};
  cplx w = base + 1.0;  // jet of 1/Gamma(w + s) at s = 0
  std::vector<cplx> out(nu);

  auto exp_jet = [&](const std::vector<cplx>& a) {
    // Taylor coefficients of exp(a(s)) given coefficients of a(s)
    std::vector<cplx> e(nu);
    e[0] = std::exp(a[0]);
    for (int k = 1; k < nu; ++k) {
      cplx s = 0;
      for (int j = 1; j <= k; ++j) s += double(j) * a[j] * e[k - j];
      e[k] = s / double(k);
    }
    return e;
  };
  auto lgamma_coeffs = [&](cplx at, double dir) {
    // Taylor coefficients of lgamma(at + dir*s); requires Re(at) >= 0.5
    std::vector<cplx> L(nu);
    L[0] = lgamma_c(at);
    double fact = 1.0, d = dir;
    for (int k = 1; k < nu; ++k) {
      fact *= k;
      L[k] = d * polygamma_c(k - 1, at) / fact;
      d *= dir;
    }
    return L;
  };

  std::vector<cplx> coeffs(nu);
  if (w.real() >= 0.5) {
    auto L = lgamma_coeffs(w, 1.0);
    for (auto& x : L) x = -x;
    coeffs = exp_jet(L);
  } else {
    // 1/Gamma(w+s) = sin(pi (w+s))/pi * Gamma(1-w-s); 1-w has Re >= 0.5
    auto G = exp_jet(lgamma_coeffs(1.0 - w, -1.0));
    std::vector<cplx> S(nu);
    double p = 1.0, fact = 1.0;
    for (int k = 0; k < nu; ++k) {
      if (k > 0) fact *= k;
      // d^k/ds^k sin(pi(w+s)) = pi^k sin(pi w + k pi/2)
      S[k] = p * std::sin(pi * w + cplx(k * pi / 2.0)) / fact;
      p *= pi;
    }
    for (int k = 0; k < nu; ++k) {
      cplx s = 0;
      for (int j = 0; j <= k; ++j) s += S[j] * G[k - j];
      coeffs[k] = s / pi;
    }
  }
  double fact = 1.0;
  for (int k = 0; k < nu; ++k) {
    if (k > 0) fact *= k;
    out[k] = coeffs[k] * fact;
  }
  return out;
}

}  // namespace gkz
