#pragma once

#include <vector>

#include "orbita/bands.hpp"
#include "orbita/chart.hpp"
#include "orbita/wobble.hpp"

namespace orbita::aa {

using orbit::Band;
using orbit::ChartPoint;
using orbit::HamiltonianSpec;
using wobble::ActionKernel;

/// Wobbling action-angle coordinates: the pair of conserved momenta (L,Q)
/// and the angles (psi mod 2pi, theta mod 2 Delta).
struct ActionAnglePoint {
    double L;
    double Q;
    double psi;
    double theta;
};

/// theta normalized to (-Delta, Delta].
double normalize_theta(double theta, double delta);
/// Sign of sin(pi theta / Delta); 0 at the turning seams.
int eps_theta(double theta, double delta);

/// Forward map (L,p,phi,gamma) -> (L,Q,psi,theta).  Throws BoundaryState on
/// the separatrix (Q = p2) where the angle degenerates.
ActionAnglePoint kappa_forward(const WeightVector& w, const ChartPoint& c);

/// Same but with theta left unwrapped (no mod), for numerical Jacobians.
ActionAnglePoint kappa_forward_raw(const WeightVector& w, const ChartPoint& c);

/// Inverse map.  Throws OutsideProjection when (L,Q) leaves the classical
/// region.
ChartPoint kappa_inverse(const WeightVector& w, const ActionAnglePoint& a);

/// p as a function of theta on the (L,Q) level set; period 2 Delta.
double p_of_theta(const ActionKernel& k, double L, double theta);

/// Closed-form flow of H = E0 + omega(L) Q / 4 for time t.
ActionAnglePoint evolve(const WeightVector& w, const ActionAnglePoint& a0,
                        const HamiltonianSpec& h, double t);

/// Wobbling frequency at a general (L,Q) point:
/// Omega = pi sqrt(C) omega(L) / (2 L K(B)); zero on the separatrix.
double wobbling_frequency(const WeightVector& w, double L, double Q,
                          const HamiltonianSpec& h);

/// Frequency on a catalogued band (closed-form C, K(0) = pi/2), zero on the
/// vibrationally unstable segment.
double wobbling_frequency(const WeightVector& w, const Band& band, double L,
                          const HamiltonianSpec& h);

/// Squared body-frame angular momentum components at p = p_{L,Q}(theta);
/// their sum is L^2.  Components are returned as nonnegative magnitudes.
/// Closed form in the roots; falls back to the eigenvector route on the
/// degenerate boundaries Q = p_i where the closed form is 0/0.
/// Throws NegativeSquare if a square falls below -1e-10 * L^2.
std::array<double, 3> bodyframe_momenta(const WeightVector& w, double L, double Q,
                                        double theta);

/// The same quantities from the eigenvectors of the reconstructed
/// quadrupole tensor (independent route used by the verification suite).
std::array<double, 3> bodyframe_momenta_eigen(const WeightVector& w, double L,
                                              double Q, double theta);

/// Residual of the cubic relating the body-frame components to the third
/// Casimir, exponent r in {1,2}; vanishes on-shell.
double bodyframe_cubic_residual(const WeightVector& w, double L, double Q,
                                double theta, int r);

/// Generating potential S(L,Q,p) for the branch eps_gamma; its L- and
/// Q-derivatives reproduce (psi - phi) and theta.
double generating_potential(const WeightVector& w, double L, double Q, double p,
                            int eps_gamma, double quad_tol = 1e-11);

struct TrajectorySample {
    double t, p, gamma, phi;
};

/// Closed-form trajectory in chart variables, phi reconstructed continuously
/// across the turning seams.
std::vector<TrajectorySample> trajectory_closed(const WeightVector& w,
                                                const ActionAnglePoint& a0,
                                                const HamiltonianSpec& h,
                                                double t_end, int samples);

/// Independent fourth-order Runge-Kutta integration of the (p,gamma) flow
/// (the conserved-(L,Q) vector field in its polar form), with the phi
/// equation integrated alongside.
std::vector<TrajectorySample> trajectory_rk4(const WeightVector& w, double L,
                                             double Q, double p0, double gamma0,
                                             double phi0, const HamiltonianSpec& h,
                                             double t_end, int steps, int samples);

} // namespace orbita::aa
