#pragma once

#include <array>
#include <functional>
#include <vector>

#include "orbita/weights.hpp"

namespace orbita::orbit {

/// Sorted eigenvalues of the quadrupole tensor at momenta (L,Q), with the
/// trigonometric shape parameters (beta, Gamma).
struct EigenTriple {
    double p1, p2, p3; // descending
    double beta;
    double gamma_shape; // in [0, pi/3]

    double value(int alpha) const { return alpha == 0 ? p1 : (alpha == 1 ? p2 : p3); }
};

/// Closed-form eigenvalues by the cosine formula.  Throws OutsideProjection
/// when (L,Q) lies outside the classical region.
EigenTriple eigenvalues(const WeightVector& w, double L, double Q);

/// Classical Q interval at angular momentum L; throws LOutOfRange.
struct QRange {
    double q_min, q_max;
};
QRange q_range(const WeightVector& w, double L);
bool in_projection(const WeightVector& w, double L, double Q, double tol = 0.0);

/// h(x,y) = x + y when x >= y, else 2 sqrt(x y).
double h_switch(double x, double y);

/// Stationary-family curves: p_sigma(L) = (S1 -/+ S_L)/3 and the band value
/// Qbar_sigma(L) = Q_L(p_sigma(L), gamma = 0).  sigma = +1 or -1.
double p_sigma(const WeightVector& w, int sigma, double L);
double q_bar(const WeightVector& w, int sigma, double L);

/// Shape-plane projection (x,y) = (beta cos Gamma, beta sin Gamma).
std::array<double, 2> shape_projection(const EigenTriple& e);

enum class BandKind { S1, S2, S3, Pplus, Pminus };
enum class Stability { Minimum, Maximum, Saddle };
const char* band_kind_name(BandKind k);
const char* stability_name(Stability s);

/// One equilibrium band: an L-interval together with the closed-form curves
/// p(L), Q(L), the eigenvalue triple and the energy factor det Q.
struct Band {
    BandKind kind;
    Stability stability;
    double l_min, l_max;

    std::function<double(double)> p_of_l;
    std::function<double(double)> q_of_l;
    std::function<EigenTriple(double)> eigen_of_l;
    std::function<double(double)> energy_factor; // det Q along the band

    /// Positive factor C entering the small-oscillation frequency; zero on
    /// the vibrationally unstable segment.
    std::function<double(double)> c_factor;
};

/// (L, Q) intersection points of the band curves.
struct BandIntersection {
    BandKind a, b;
    double l, q;
};

struct BandCatalog {
    std::vector<Band> bands;
    std::vector<BandIntersection> intersections;
};

/// The five equilibrium bands (plus the unstable low-L segment of the middle
/// one) for the det-power Hamiltonian family with exponents (r, s).
/// Requires r <= 2 and s >= 0.
BandCatalog band_catalog(const WeightVector& w, double r = 2.0, double s = 2.0);

/// Energy factor det Q at the axial states: p_i (p_{i+1} p_{i+2} + L^2/4),
/// i in {0,1,2}.
double energy_factor_axial(const WeightVector& w, int i, double L);

/// Energy factor det Q along the p_sigma band, closed form.
double energy_factor_sigma(const WeightVector& w, int sigma, double L);

/// Oscillation factor C along a band, closed forms; eigen_route = true
/// evaluates the same quantity from eigenvalue differences instead.
double band_c_factor(const WeightVector& w, BandKind kind, double L,
                     bool eigen_route = false);

/// Hamiltonian family H(det Q) = kappa(s)^-1 omega_r <p>g^(1-3 kappa) det^kappa,
/// with the quadratic rotational frequency model omega(L) = <p>g^-2 omega_r L^2.
struct HamiltonianSpec {
    double e0 = 0.0;
    double r = 2.0;
    double s = 2.0;
    double omega0 = 1.0;   // base frequency (e.g. 40 A^{-1/3} MeV over hbar)
    double p_pauli = 0.0;  // Pauli action scale; 0 means use <p>_g

    std::function<double(double)> omega_custom;       // optional omega(L)
    std::function<double(double)> omega_prime_custom; // optional omega'(L)
    std::function<double(double)> e0_of_l;            // optional E0(L)

    double kappa() const { return 6.0 * s / (s + 2.0); }
    double omega_r(const WeightVector& w) const;
    double omega_of_l(const WeightVector& w, double L) const;
    double omega_prime_of_l(const WeightVector& w, double L) const;
    double e0_prime_of_l(double L) const;
    /// H evaluated from the energy factor det Q.
    double value(const WeightVector& w, double detq) const;
    /// H = E0 + omega(L) Q / 4 for the linearized family.
    double linear_value(const WeightVector& w, double L, double Q) const;
};

/// Nuclear default: hbar omega = 40 A^(-1/3) (MeV).
double omega_nuclear(double a_mass);

} // namespace orbita::orbit
