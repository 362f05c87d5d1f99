#pragma once

#include <complex>
#include <vector>

namespace gkz {

using cplx = std::complex<double>;

// log Gamma(z), principal branch, Lanczos approximation with reflection
cplx lgamma_c(cplx z);

// psi^(m)(z) for m >= 0 (m = 0 is the digamma function)
cplx polygamma_c(int m, cplx z);

// Derivatives d^k/ds^k [ 1/Gamma(s+1) ] at s = base, k = 0..nu-1.
// 1/Gamma is entire, so this works at the poles of Gamma as well.
std::vector<cplx> recip_gamma_jet(cplx base, int nu);

}  // namespace gkz
