#pragma once

#include "orbita/linalg.hpp"
#include "orbita/u3.hpp"

namespace orbita::cartan {

/// Rotation by alpha about e3 (counterclockwise in the xy plane).
Mat3 rot3(double alpha);

/// x* = (-x1, -x2, x3); [x*] inverts [x].
inline Vec3 star(const Vec3& v) { return {-v.x, -v.y, v.z}; }

/// The coset-section matrix of SO(3)/SO(2) for a direction x: the geodesic
/// rotation taking e3 to x/|x|.  Undefined when x is antiparallel to e3.
struct CartanMatrix {
    Mat3 m;
    Vec3 source;   // the vector the matrix was built from (sign included)
    double eps;    // chart sign applied to the caller's vector
};

/// Section matrix [x].  Throws DegenerateDirection when |x| = 0 or the
/// direction lies on the excluded antipode (|x| + x3 ~ 0).
CartanMatrix cartan_matrix(const Vec3& x);

/// Decomposition angle for property (7): [x] is the rotation by alpha about
/// the axis e3 x x, with cos(alpha) = x3/|x| and sin(alpha) = rho/|x|.
double section_angle(const Vec3& x);

/// psi(x, y) = sign(y) (x + e3 y) / (x3 + y); the T*SO(3) bracket kernel.
Vec3 psi_vec(const Vec3& x, double y);

/// Differential and bracket-correction coefficient tables for the section
/// matrix of the rotated angular-momentum frame.  Letter indices a,b,c run
/// over x,y,z (stored 0,1,2); numeric indices i,j,k,l over 1,2,3 (stored
/// 0,1,2).  All tables are evaluated at xv = sign(L3) * L and u = |L|.
struct AppendixCoeffs {
    Vec3 xv;                     // sign-adjusted angular momentum
    double u = 0;                // |L|
    double eps = 1;              // sign(L3)
    double gbar[3][3] = {};      // letter c, numeric j
    double gnum[3][3] = {};      // numeric i, numeric j
    double gabc[3][3][3] = {};   // letters a, b, c
    double gamma1[3][3][3][3] = {}; // letters ab,cd
    double gamma2[3][3][3][3] = {}; // letters ab,cd
    double pef[3][3] = {};       // letters e, f
    Vec3 psi;

    /// d[a i] = sum_{b,c} eps_{abc} [b i] gbar_{c j} dL_j  (first form)
    double d_section_first(const Mat3& sec, int a, int i, int j) const;
    /// d[a i] = sum_b gabc_{a b c} [b i] dL_c              (second form)
    double d_section_second(const Mat3& sec, int a, int i, int c) const;
};

/// Evaluate the tables at angular momentum L with reduced-frame value L3
/// (L3 = +-|L| selects the chart sign).  Throws DivergentKernel when u or
/// u + x_z vanishes.
AppendixCoeffs appendix_coeffs(const Vec3& L, double L3);

/// The closed-form structure kernel of the reduced bracket,
/// gamma^{kl}_{ij} with all indices in {0,1,2} (meaning 1,2,3).
double gamma_kl(int i, int j, int k, int l);

/// Reconstruction of gamma^{kl}_{ij} from the Gamma1/Gamma2 tables and the
/// section matrix; must agree with gamma_kl identically.
double gamma_kl_reconstructed(const AppendixCoeffs& ac, int i, int j, int k, int l);

/// Congruence of a moment matrix into the rotated frame in which the
/// angular momentum points along +-e3 (sign eps).  Trace and all Casimirs
/// are preserved; throws AntipodalAngularMomentum when the input sits on the
/// excluded ray of the chosen sign.
algebra::U3Element amf_reduce(const algebra::U3Element& a, int eps);

} // namespace orbita::cartan
