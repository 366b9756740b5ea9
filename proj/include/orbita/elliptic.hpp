#pragma once

namespace orbita::elliptic {

// All routines use the PARAMETER convention m = k^2, never the modulus k.

/// Carlson symmetric integral R_F(x,y,z), x,y,z >= 0, at most one zero.
double carlson_rf(double x, double y, double z);

/// Carlson degenerate integral R_C(x,y), y != 0.
double carlson_rc(double x, double y);

/// Carlson symmetric integral R_J(x,y,z,p), p > 0 here.
double carlson_rj(double x, double y, double z, double p);

/// Complete integral of the first kind K(m), m in [0,1).
double comp_first(double m);

/// K(1-mc) computed from the complement, accurate as mc -> 0 where the value
/// diverges like -log(mc)/2.  Switches to the logarithmic asymptote below
/// mc = 1e-12; callers that need to know can test saddle_period().
double comp_first_complement(double mc);

/// True when the complementary parameter is inside the asymptotic window
/// where the period is effectively divergent (infinite-period flag).
bool saddle_period(double mc);

/// Incomplete first kind F(phi|m), phi in [0, pi/2].
double inc_first(double phi, double m);

/// Incomplete third kind Pi(n; phi|m), phi in [0, pi/2], n < 1.
double inc_third(double n, double phi, double m);

/// Complete third kind Pi(n|m).
double comp_third(double n, double m);

/// K(m) via the arithmetic-geometric mean; independent check of carlson_rf.
double agm_comp_first(double m);

/// Jacobi amplitude am(u,m), valid for |u| <= K(m), m in [0,1].
double jacobi_am(double u, double m);

/// Jacobi sn(u,m) for arbitrary real u (argument reduced mod 4K).
double jacobi_sn(double u, double m);

enum class Kind { F, K, Pi };

struct EllipticValue {
    double value;
    double parameter;
};

/// Dispatcher used by the verification front end.  Unused arguments are
/// ignored per kind: K(m) takes only m, F(phi|m) takes (phi,m), and
/// Pi(n;phi|m) takes all three.
EllipticValue legendre(Kind kind, double phi, double m, double n = 0.0);

} // namespace orbita::elliptic
