#include "orbita/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orbita/errors.hpp"

namespace orbita::elliptic {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSaddleWindow = 1e-12;
} // namespace

double carlson_rf(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0 || x + y <= 0 || x + z <= 0 || y + z <= 0)
        throw ParameterOutOfRange("carlson_rf: arguments outside domain");
    double a = (x + y + z) / 3.0;
    double dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < 300; ++it) {
        dx = 1.0 - x / a;
        dy = 1.0 - y / a;
        dz = 1.0 - z / a;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-8) break;
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        double lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
    }
    double e2 = dx * dy + dy * dz + dz * dx;
    double e3 = dx * dy * dz;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
           std::sqrt(a);
}

double carlson_rc(double x, double y) {
    if (x < 0 || y == 0) throw ParameterOutOfRange("carlson_rc: arguments outside domain");
    if (y < 0) {
        double v = carlson_rc(x - y, -y);
        return std::sqrt(x / (x - y)) * v;
    }
    double a = (x + 2.0 * y) / 3.0;
    double s = 0;
    for (int it = 0; it < 300; ++it) {
        s = (y - x) / (3.0 * a);
        if (std::abs(s) < 1e-8) break;
        double lam = 2.0 * std::sqrt(x) * std::sqrt(y) + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        a = 0.25 * (a + lam);
    }
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) /
           std::sqrt(a);
}

double carlson_rj(double x, double y, double z, double p) {
    if (x < 0 || y < 0 || z < 0 || p <= 0 || x + y <= 0 || x + z <= 0 || y + z <= 0)
        throw ParameterOutOfRange("carlson_rj: arguments outside domain");
    double a = (x + y + z + 2.0 * p) / 5.0;
    double sum = 0.0, fac = 1.0;
    double dx = 0, dy = 0, dz = 0, dp = 0;
    for (int it = 0; it < 300; ++it) {
        dx = 1.0 - x / a;
        dy = 1.0 - y / a;
        dz = 1.0 - z / a;
        dp = 1.0 - p / a;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) < 1e-8)
            break;
        double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z), sp = std::sqrt(p);
        double lam = sx * (sy + sz) + sy * sz;
        double d = (sp + sx) * (sp + sy) * (sp + sz);
        double e = (p - x) * (p - y) * (p - z) / (d * d);
        sum += fac * 6.0 * carlson_rc(1.0, 1.0 + e) / d;
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        a = 0.25 * (a + lam);
    }
    double e2 = dx * dy + dy * dz + dz * dx - 3.0 * dp * dp;
    double e3 = dx * dy * dz + 2.0 * e2 * dp + 4.0 * dp * dp * dp;
    double e4 = (2.0 * dx * dy * dz + e2 * dp + 3.0 * dp * dp * dp) * dp;
    double e5 = dx * dy * dz * dp * dp;
    double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                    3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
    return sum + fac * series / (a * std::sqrt(a));
}

bool saddle_period(double mc) { return mc < kSaddleWindow; }

double comp_first_complement(double mc) {
    if (mc <= 0) throw ParameterOutOfRange("K(m): parameter m >= 1");
    if (mc > 1 + 1e-15) throw ParameterOutOfRange("K(m): parameter m < 0");
    if (saddle_period(mc)) {
        double l = std::log(4.0 / std::sqrt(mc));
        return l + 0.25 * mc * (l - 1.0);
    }
    return carlson_rf(0.0, mc, 1.0);
}

double comp_first(double m) { return comp_first_complement(1.0 - m); }

double inc_first(double phi, double m) {
    double s = std::sin(phi), c = std::cos(phi);
    double y = 1.0 - m * s * s;
    if (y <= 0) throw ParameterOutOfRange("F(phi|m): m sin^2 phi >= 1");
    return s * carlson_rf(c * c, y, 1.0);
}

double inc_third(double n, double phi, double m) {
    double s = std::sin(phi), c = std::cos(phi);
    double y = 1.0 - m * s * s;
    double q = 1.0 - n * s * s;
    if (y <= 0) throw ParameterOutOfRange("Pi(n;phi|m): m sin^2 phi >= 1");
    if (q <= 0) throw CharacteristicPole("Pi(n;phi|m): characteristic pole crossed");
    double r = s * carlson_rf(c * c, y, 1.0);
    if (n != 0.0) r += n / 3.0 * s * s * s * carlson_rj(c * c, y, 1.0, q);
    return r;
}

double comp_third(double n, double m) {
    if (n >= 1.0) throw CharacteristicPole("Pi(n|m): characteristic n >= 1");
    double mc = 1.0 - m;
    if (mc <= 0) throw ParameterOutOfRange("Pi(n|m): m >= 1");
    double r = carlson_rf(0.0, mc, 1.0);
    if (n != 0.0) r += n / 3.0 * carlson_rj(0.0, mc, 1.0, 1.0 - n);
    return r;
}

double agm_comp_first(double m) {
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int it = 0; it < 100 && std::abs(a - b) > 1e-17 * a; ++it) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

double jacobi_am(double u, double m) {
    if (m < 0.0 || m > 1.0) throw ParameterOutOfRange("am(u,m): m outside [0,1]");
    if (m < 1e-15) return u;
    if (1.0 - m < 1e-15) return std::asin(std::tanh(u)); // gudermannian limit
    if (u == 0.0) return 0.0;
    double k = comp_first(m);
    // Newton inversion of F(phi|m) = u, dphi/du = sqrt(1 - m sin^2 phi).
    double phi = std::clamp(0.5 * kPi * u / k, -0.5 * kPi, 0.5 * kPi);
    for (int it = 0; it < 60; ++it) {
        double s = std::sin(phi);
        double res = inc_first(phi, m) - u;
        double step = res * std::sqrt(std::max(1.0 - m * s * s, 1e-300));
        phi -= step;
        phi = std::clamp(phi, -0.5 * kPi, 0.5 * kPi);
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(phi))) break;
    }
    return phi;
}

double jacobi_sn(double u, double m) {
    if (m < 1e-15) return std::sin(u);
    if (1.0 - m < 1e-15) return std::tanh(u);
    double k4 = 4.0 * comp_first(m);
    double v = std::fmod(u, k4);
    if (v < 0) v += k4;
    // fold into [0, K]: sn(2K - u) = sn(u), sn(u + 2K) = -sn(u)
    double sign = 1.0;
    if (v > 0.5 * k4) {
        v -= 0.5 * k4;
        sign = -1.0;
    }
    if (v > 0.25 * k4) v = 0.5 * k4 - v;
    return sign * std::sin(jacobi_am(v, m));
}

EllipticValue legendre(Kind kind, double phi, double m, double n) {
    switch (kind) {
        case Kind::K: return {comp_first(m), m};
        case Kind::F: return {inc_first(phi, m), m};
        case Kind::Pi: return {inc_third(n, phi, m), m};
    }
    throw ParameterOutOfRange("legendre: unknown kind");
}

} // namespace orbita::elliptic
