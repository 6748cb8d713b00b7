#pragma once

#include <complex>

namespace rankone {

using cplx = std::complex<double>;

namespace specfun {

/// log Gamma(z). For Re z >= 1/2 this is the branch continuous in the right
/// half plane (Lanczos, g = 7); for Re z < 1/2 the reflection formula is used,
/// so exp(log_gamma(z)) == Gamma(z) everywhere but the imaginary part is only
/// defined modulo 2 pi there. Throws PoleError at nonpositive integers.
cplx log_gamma(cplx z);

/// 1 / Gamma(z); exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

/// log sin(pi z), stable for large |Im z|. Throws PoleError at integers.
cplx log_sin_pi(cplx z);

/// Gauss hypergeometric 2F1(a, b; c; x) for real x <= 0.
///
/// -1 <= x <= 0: Pfaff transformation to z = x/(x-1) in [0, 1/2] and direct
///   summation.
/// x < -1: connection formula to w = 1/(1-x) in (0, 1/2) with regularized
///   series. When b - a lies near an integer n the two connection terms are
///   individually singular; the value is then taken as the mean of
///   F(a - u/2, b + u/2) over a circle |u| = r, which equals F(a, b) because F
///   is entire in (a, b). The radius r = min(0.4, 1/log(1-x)) keeps the circle
///   clear of n and bounds the growth of (1-x)^{-a} along it.
///
/// Throws PoleError when c is a nonpositive integer, DomainError for x > 0,
/// AccuracyError if a series fails to converge.
cplx gauss_2f1(cplx a, cplx b, cplx c, double x);

}  // namespace specfun
}  // namespace rankone
