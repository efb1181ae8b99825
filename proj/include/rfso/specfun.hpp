#pragma once

#include <complex>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso::specfun {

// ---- incomplete gamma family ------------------------------------------------

/// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s).
/// Series expansion for x < s+1, Lentz continued fraction otherwise.
double lower_reg(double s, double x);

/// Regularized upper incomplete gamma Q(s,x) = 1 - P(s,x).
double upper_reg(double s, double x);

/// Unregularized lower incomplete gamma  gamma(s,x) = int_0^x t^{s-1} e^{-t} dt.
double lower_inc_gamma(double s, double x);

/// Unregularized upper incomplete gamma  Gamma(s,x) = Gamma(s) - gamma(s,x).
double upper_inc_gamma(double s, double x);

/// log Gamma(s+l) - log Gamma(s) - log l!, the log of the binomial-type ratio
/// appearing in finite incomplete-gamma sums.
double log_gamma_ratio(double s, int l);

// ---- error function ---------------------------------------------------------

/// Error function. Thin wrapper over std::erf with the domain check the
/// library's error contract requires.
double erf(double x);

// ---- modified Bessel function of the second kind ----------------------------

/// K_v(x) for real order v (symmetric in v) and x > 0. Backed by
/// std::cyl_bessel_k; overflow near x -> 0 surfaces as std::range_error.
double bessel_k(double v, double x);

// ---- Meijer G ---------------------------------------------------------------

/// Parameter block of G^{m,n}_{p,q}(x | a_1..a_p ; b_1..b_q).
/// p and q are implied by the array sizes.
struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;
    std::vector<double> b;

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }
};

/// Numerical Meijer G for real parameters and x > 0, restricted to p < q
/// (every shape this library needs: G^{1,0}_{0,1}, G^{2,0}_{0,2},
/// G^{3,0}_{1,3}, G^{3,1}_{2,4}, G^{6,1}_{3,7}).
///
/// Evaluates the Mellin-Barnes integral directly on a vertical contour
/// placed inside the strip separating the two pole families, with the
/// abscissa chosen to minimize the integrand magnitude. Direct line
/// quadrature never enumerates residues, so coincident or
/// integer-separated lower parameters need no special casing.
///
/// Throws capability_error for unsupported shapes and numerical_error if
/// the contour quadrature cannot reach the requested tolerance.
double meijer_g(const MeijerGSpec& spec, double x, double rel_tol = 1e-9);

// ---- complex log-gamma (building block of the contour integrand) ------------

/// Principal-branch-free log Gamma(z): the result may differ from the
/// principal branch by multiples of 2*pi*i, which is immaterial when sums
/// of log-gammas are exponentiated.
std::complex<double> log_gamma(std::complex<double> z);

} // namespace rfso::specfun
