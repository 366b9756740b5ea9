#include "orbita/cartan.hpp"

#include <cmath>

#include "orbita/errors.hpp"

namespace orbita::cartan {

namespace {

// Levi-Civita symbol on 0-based indices.
inline double eps3(int a, int b, int c) {
    return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
}

constexpr int kZ = 2; // index of the z letter

} // namespace

Mat3 rot3(double alpha) {
    Mat3 r = Mat3::identity();
    double c = std::cos(alpha), s = std::sin(alpha);
    r[0][0] = c;
    r[0][1] = -s;
    r[1][0] = s;
    r[1][1] = c;
    return r;
}

CartanMatrix cartan_matrix(const Vec3& x) {
    double r = norm(x);
    if (r <= 0.0)
        throw DegenerateDirection("cartan_matrix: zero vector has no section value");
    double d = r + x.z;
    if (d <= 1e-10 * r)
        throw DegenerateDirection("cartan_matrix: direction at the excluded antipode");
    double a = x.x / std::sqrt(r * d);
    double b = x.y / std::sqrt(r * d);
    double xb = x.x / r, yb = x.y / r, zb = x.z / r;
    CartanMatrix cm;
    cm.source = x;
    cm.eps = 1.0;
    cm.m[0][0] = 1.0 - a * a;
    cm.m[0][1] = -a * b;
    cm.m[0][2] = xb;
    cm.m[1][0] = -a * b;
    cm.m[1][1] = 1.0 - b * b;
    cm.m[1][2] = yb;
    cm.m[2][0] = -xb;
    cm.m[2][1] = -yb;
    cm.m[2][2] = zb;
    return cm;
}

double section_angle(const Vec3& x) {
    double rho = std::hypot(x.x, x.y);
    return std::atan2(rho, x.z);
}

Vec3 psi_vec(const Vec3& x, double y) {
    double den = x.z + y;
    if (std::abs(den) < 1e-14 * (std::abs(y) + norm(x)))
        throw DivergentKernel("psi_vec: x3 + y vanishes");
    double s = (y >= 0) ? 1.0 : -1.0;
    return Vec3{x.x, x.y, x.z + y} * (s / den);
}

double gamma_kl(int i, int j, int k, int l) {
    auto d = [](int p, int q) { return p == q ? 1.0 : 0.0; };
    return d(k, kZ) * (d(j, kZ) * eps3(i, l, kZ) - d(l, kZ) * eps3(i, j, kZ)) -
           d(i, kZ) * (d(l, kZ) * eps3(j, k, kZ) + d(j, kZ) * eps3(k, l, kZ));
}

AppendixCoeffs appendix_coeffs(const Vec3& L, double L3) {
    AppendixCoeffs ac;
    ac.eps = (L3 >= 0) ? 1.0 : -1.0;
    ac.xv = L * ac.eps;
    ac.u = norm(L);
    double u = ac.u;
    if (u <= 0.0) throw DivergentKernel("appendix_coeffs: |L| = 0");
    double den = u + ac.xv.z;
    if (std::abs(den) <= 1e-12 * u)
        throw DivergentKernel("appendix_coeffs: u + x_z vanishes (antipode)");
    double f1 = 1.0 / (u * den);
    double f2 = f1 / u;
    const Vec3& x = ac.xv;

    // Left-rotation generator coefficients of the section differential,
    // d[.] = sum eps_{abc} [b.] gbar_{cj} dx_j.  The x,y rows carry the
    // in-plane corrections proportional to f2; the z row is the f1 kernel.
    double u2 = u * u;
    ac.gbar[0][0] = -f2 * x.x * x.y;
    ac.gbar[0][1] = 1.0 / u - f2 * x.y * x.y;
    ac.gbar[0][2] = -x.y / u2;
    ac.gbar[1][0] = f2 * x.x * x.x - 1.0 / u;
    ac.gbar[1][1] = f2 * x.x * x.y;
    ac.gbar[1][2] = x.x / u2;
    ac.gbar[2][0] = f1 * x.y;
    ac.gbar[2][1] = -f1 * x.x;
    ac.gbar[2][2] = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 3; ++j)
            ac.gnum[c][j] = ac.gbar[c][j]; // numeric-index alias of the same table

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                double s = 0;
                for (int dd = 0; dd < 3; ++dd) s += eps3(a, b, dd) * ac.gbar[dd][c];
                ac.gabc[a][b][c] = s;
            }

    // epsw: +1 for x, -1 for y, 0 for z
    auto epsw = [](int f) { return f == 0 ? 1.0 : (f == 1 ? -1.0 : 0.0); };
    auto xcomp = [&](int g) { return g == 0 ? x.x : (g == 1 ? x.y : x.z); };

    for (int e = 0; e < 3; ++e)
        for (int f = 0; f < 3; ++f) {
            double s = 0;
            for (int g = 0; g < 3; ++g)
                s += eps3(e, f, g) * (u + (e == kZ ? xcomp(e) : 0.0)) *
                     (xcomp(g) + (g == kZ ? u : 0.0));
            ac.pef[e][f] = s;
        }

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int dd = 0; dd < 3; ++dd) {
                    double s1 = 0, s2 = 0;
                    for (int e = 0; e < 3; ++e)
                        for (int f = 0; f < 3; ++f) {
                            double ee = eps3(a, b, e) * eps3(c, dd, f);
                            if (ee == 0) continue;
                            double core = epsw(f) * (e == kZ ? 0.0 : 1.0) * xcomp(e) *
                                              (f == kZ ? 0.0 : xcomp(1 - f)) +
                                          ac.pef[e][f];
                            s1 += ee * core;
                            for (int g = 0; g < 3; ++g)
                                s2 += ee * eps3(e, f, g) *
                                      (xcomp(g) + (g == kZ ? u : 0.0));
                        }
                    ac.gamma1[a][b][c][dd] = -f2 * s1;
                    ac.gamma2[a][b][c][dd] = f1 * s2;
                }

    ac.psi = psi_vec(L, L3);
    return ac;
}

double AppendixCoeffs::d_section_first(const Mat3& sec, int a, int i, int j) const {
    double s = 0;
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) s += eps3(a, b, c) * sec[b][i] * gbar[c][j];
    return s;
}

double AppendixCoeffs::d_section_second(const Mat3& sec, int a, int i, int c) const {
    double s = 0;
    for (int b = 0; b < 3; ++b) s += gabc[a][b][c] * sec[b][i];
    return s;
}

algebra::U3Element amf_reduce(const algebra::U3Element& a, int eps) {
    Vec3 lv = a.angular_momentum();
    if (norm(lv) <= 0.0)
        throw AntipodalAngularMomentum("amf_reduce: zero angular momentum");
    try {
        Mat3 m = cartan_matrix(lv * static_cast<double>(eps)).m;
        return algebra::U3Element(congruence(m, a.a));
    } catch (const DegenerateDirection&) {
        throw AntipodalAngularMomentum(
            "amf_reduce: angular momentum on the excluded ray of this chart sign");
    }
}

double gamma_kl_reconstructed(const AppendixCoeffs& ac, int i, int j, int k, int l) {
    Mat3 sec = cartan_matrix(ac.xv).m;
    double l3 = ac.eps * ac.u;
    double s = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int dd = 0; dd < 3; ++dd) {
                    double g = ac.gamma1[a][b][c][dd] - ac.gamma1[c][dd][a][b] +
                               ac.gamma2[a][b][c][dd];
                    s += g * sec[a][i] * sec[b][k] * sec[c][j] * sec[dd][l];
                }
    return l3 * s;
}

} // namespace orbita::cartan
