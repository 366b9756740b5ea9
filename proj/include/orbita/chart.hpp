#pragma once

#include <random>
#include <string>

#include "orbita/reduced.hpp"
#include "orbita/weights.hpp"

namespace orbita::orbit {

using algebra::ReducedState;

/// Canonical chart point (L, p, phi, gamma) on the physical sheet (L > 0,
/// cos gamma > 0).  region is the index of the admissible p-window the point
/// sits in (2 for every valid physical point); sigma_q is the sign of
/// Q - p2 of the image state.
struct ChartPoint {
    double L;
    double p;
    double phi;
    double gamma;
    int region = 2;
    int sigma_q = 0;
};

/// Scalar kernels of one orbit.  All members are cheap closed forms.
class Kernels {
public:
    explicit Kernels(const WeightVector& w) : w_(w) {}
    const WeightVector& weights() const { return w_; }

    /// G_p(x) = (x - p1)(x - p2)(x - p3) and its derivative.
    double g(double x) const;
    double g_prime(double x) const;

    /// h_ij(b,c) = (b - p_i)(b - p_j) + c^2 and H = prod_{i<j} h_ij.
    double h_pair(int i, int j, double b, double c) const;
    double h_product(double b, double c) const;

    /// hhat_ij(L,p,gamma) = L^2 + 4 (p_i - p)(p_j - p) cos^2 gamma;
    /// f_i = hhat of the complementary pair; F = product of the three.
    double hhat_pair(int i, int j, double L, double p, double cosg) const;
    double f_region(int i, double L, double p, double cosg) const;
    double big_f(double L, double p, double gamma) const;

    /// V(L,Q,p) = -G_p(p) - (p - Q) L^2 / 4; the secular cubic in p.
    double v(double L, double Q, double p) const;

    /// Q and R of the (p,gamma) parametrization.
    double q_of(double L, double p, double gamma) const;
    double r_of(double L, double p, double gamma) const;

    /// what(L,Q,R) = R^4 L^2 / 4 + H(Q,R); -what is the squared odd kernel.
    double what(double L, double Q, double R) const;
    /// U(Q,R) = G_p(Q) + 3/2 (Q - <p>) R^2.
    double u_of(double Q, double R) const;

    /// cL(p) = 2 sqrt(-3p^2 + 2 p S1 - S11); cL(p_sigma(L)) = L.
    double cl(double p) const;

    /// Positive-branch angle gamma^+ with cos, sin >= 0 from (L,Q,p).
    double gamma_plus(double L, double Q, double p) const;

private:
    WeightVector w_;
};

/// Region window p^-_i(l) .. p^+_i(l); empty (returns false) when
/// l exceeds the gap of the complementary weight pair.
bool region_window(const WeightVector& w, int i, double l, double& lo, double& hi);

struct DomainCheck {
    bool ok = false;
    int region = 0;        // 1,2,3 of the window the point falls in, 0 = none
    std::string violated;  // human-readable inequality when not ok
};

/// Classify (L, p, gamma) against the physical domain: the wide window minus
/// the closures of the two narrow ones, cos gamma > 0, L > 0.
DomainCheck classify(const WeightVector& w, double L, double p, double gamma,
                     double boundary_tol = 1e-12);

/// Chart map onto the seven generators.  Throws OutOfDomain (message names
/// the violated inequality).
ReducedState chart_forward(const WeightVector& w, const ChartPoint& c);

/// Same map with no domain gate (used for boundary states such as the
/// equilibrium ellipsoids; the caller owns the interpretation).
ReducedState chart_forward_unchecked(const WeightVector& w, const ChartPoint& c);

/// Inverse chart.  Requires the state to satisfy the Casimir relations of w
/// (OffOrbit otherwise) and L3 > 0; R = 0 states are rejected with ZeroR
/// except for the maximal axially-symmetric corner which has the unique
/// preimage p = (p1 + p3)/2, gamma = 0.
ChartPoint chart_inverse(const WeightVector& w, const ReducedState& s);

/// Uniform random point of the physical domain, at relative distance at
/// least `margin` from every domain boundary.
ChartPoint sample_interior(const WeightVector& w, std::mt19937_64& rng,
                           double margin = 1e-3);

} // namespace orbita::orbit
