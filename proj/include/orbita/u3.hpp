#pragma once

#include <array>
#include <vector>

#include "orbita/linalg.hpp"

namespace orbita::algebra {

/// A u(3) moment matrix: 3x3 complex Hermitian.
struct U3Element {
    CMat3 a;

    explicit U3Element(const CMat3& m);
    U3Element() = default;

    /// L_a = -i sum eps_{abc} A_{bc}; real for Hermitian A.
    Vec3 angular_momentum() const;
    /// Symmetric (quadrupole-monopole) part, real for Hermitian A.
    Mat3 quadrupole() const;
    /// (tr A, tr A^2, tr A^3).
    std::array<double, 3> casimirs() const;
};

/// Real basis [L_x, L_y, L_z, Q_xx, Q_yy, Q_zz, Q_xy, Q_yz, Q_zx].
constexpr int kBasisSize = 9;
const CMat3& basis_matrix(int mu);
bool basis_is_quadrupole(int mu);
const char* basis_name(int mu);

/// Metric g_{mu nu} = trace Z_mu Z_nu of the real basis.
double basis_metric(int mu, int nu);

/// Poisson bracket of two basis coordinate functions at the point A:
/// {Z_mu, Z_nu} = -i trace A . t[Z_mu, Z_nu].  The structure parameter G
/// scales the quadrupole-quadrupole sector; G = 1 is the canonical algebra,
/// G = 0 the semidirect limit in which the quadrupole components commute.
cplx full_bracket(const U3Element& A, int mu, int nu, double G = 1.0);

/// Moment matrix of an N-particle configuration in an isotropic oscillator
/// of frequency omega, with the center-of-mass contribution removed
/// (hbar = 1).  Positions, momenta and masses must have equal length >= 1.
U3Element u3_from_particles(const std::vector<Vec3>& positions,
                            const std::vector<Vec3>& momenta,
                            const std::vector<double>& masses, double omega);

} // namespace orbita::algebra
