#pragma once

#include <functional>

namespace orbita {

using Integrand = std::function<double(double)>;

/// Adaptive Simpson quadrature; absolute tolerance.  Suitable for smooth
/// integrands; throws QuadratureFailure when the recursion bottoms out.
double adaptive_simpson(const Integrand& f, double a, double b, double abs_tol);

/// Double-exponential (tanh-sinh) quadrature on [a,b]; absolute tolerance.
/// Handles integrable endpoint singularities (logarithmic, inverse square
/// root).  The integrand is evaluated strictly inside (a,b); node offsets
/// from the endpoints are computed in a cancellation-free way.
double tanh_sinh(const Integrand& f, double a, double b, double abs_tol);

/// Fixed-order Gauss-Legendre rule on [a,b].
double gauss_legendre(const Integrand& f, double a, double b, int order);

} // namespace orbita
