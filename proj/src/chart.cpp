#include "orbita/chart.hpp"

#include <cmath>

#include "orbita/errors.hpp"

namespace orbita::orbit {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Kernels::g(double x) const {
    return (x - w_.p1) * (x - w_.p2) * (x - w_.p3);
}

double Kernels::g_prime(double x) const {
    return 3.0 * x * x - 2.0 * w_.s1() * x + w_.s11();
}

double Kernels::h_pair(int i, int j, double b, double c) const {
    return (b - w_.weight(i)) * (b - w_.weight(j)) + c * c;
}

double Kernels::h_product(double b, double c) const {
    return h_pair(0, 1, b, c) * h_pair(0, 2, b, c) * h_pair(1, 2, b, c);
}

double Kernels::hhat_pair(int i, int j, double L, double p, double cosg) const {
    return L * L + 4.0 * (w_.weight(i) - p) * (w_.weight(j) - p) * cosg * cosg;
}

double Kernels::f_region(int i, double L, double p, double cosg) const {
    int a = (i + 1) % 3, b = (i + 2) % 3;
    return hhat_pair(a, b, L, p, cosg);
}

double Kernels::big_f(double L, double p, double gamma) const {
    double c = std::cos(gamma);
    return f_region(0, L, p, c) * f_region(1, L, p, c) * f_region(2, L, p, c);
}

double Kernels::v(double L, double Q, double p) const {
    return -g(p) - 0.25 * (p - Q) * L * L;
}

double Kernels::q_of(double L, double p, double gamma) const {
    double c = std::cos(gamma);
    return p + 4.0 / (L * L) * g(p) * c * c;
}

double Kernels::r_of(double L, double p, double gamma) const {
    double f = big_f(L, p, gamma);
    double c = std::abs(std::cos(gamma));
    return std::sqrt(std::fmax(-f, 0.0)) / (2.0 * L * L * c);
}

double Kernels::what(double L, double Q, double R) const {
    return 0.25 * R * R * R * R * L * L + h_product(Q, R);
}

double Kernels::u_of(double Q, double R) const {
    return g(Q) + 1.5 * (Q - w_.p_mean()) * R * R;
}

double Kernels::cl(double p) const {
    double r = -3.0 * p * p + 2.0 * p * w_.s1() - w_.s11();
    return 2.0 * std::sqrt(std::fmax(r, 0.0));
}

double Kernels::gamma_plus(double L, double Q, double p) const {
    double gp = g(p);
    double c2 = 0.25 * L * L * (Q - p) / gp;
    double s2 = -v(L, Q, p) / gp;
    c2 = std::fmax(c2, 0.0);
    s2 = std::fmax(s2, 0.0);
    return std::atan2(std::sqrt(s2), std::sqrt(c2));
}

bool region_window(const WeightVector& w, int i, double l, double& lo, double& hi) {
    double a = w.weight((i + 1) % 3), b = w.weight((i + 2) % 3);
    double gap = std::abs(a - b);
    if (l > gap) return false;
    double mid = 0.5 * (a + b), half = 0.5 * std::sqrt(gap * gap - l * l);
    lo = mid - half;
    hi = mid + half;
    return true;
}

DomainCheck classify(const WeightVector& w, double L, double p, double gamma,
                     double boundary_tol) {
    DomainCheck r;
    double tol = boundary_tol * w.scale();
    if (!(L > tol)) {
        r.violated = "L > 0";
        return r;
    }
    double cg = std::cos(gamma);
    if (!(cg > boundary_tol)) {
        r.violated = "cos(gamma) > 0";
        return r;
    }
    double l = L / cg;
    double lo, hi;
    if (!region_window(w, 1, l, lo, hi) || !(p > lo + tol) || !(p < hi - tol)) {
        r.violated = "p inside the wide window p2-(L sec g) < p < p2+(L sec g)";
        for (int i = 0; i < 3; ++i) {
            double a, b;
            if (region_window(w, i, l, a, b) && p >= a && p <= b) r.region = i + 1;
        }
        return r;
    }
    r.region = 2;
    double a, b;
    if (region_window(w, 0, l, a, b) && p >= a - tol && p <= b + tol) {
        r.violated = "p outside the closed narrow window around (p2+p3)/2";
        r.region = 1;
        return r;
    }
    if (region_window(w, 2, l, a, b) && p >= a - tol && p <= b + tol) {
        r.violated = "p outside the closed narrow window around (p1+p2)/2";
        r.region = 3;
        return r;
    }
    r.ok = true;
    return r;
}

ReducedState chart_forward_unchecked(const WeightVector& w, const ChartPoint& c) {
    Kernels k(w);
    double cg = std::cos(c.gamma), sg = std::sin(c.gamma);
    double q3v = k.q_of(c.L, c.p, c.gamma);
    double qplus = 0.5 * (w.s1() - q3v);
    double r = k.r_of(c.L, c.p, c.gamma);
    cplx e_miphi(std::cos(c.phi), -std::sin(c.phi));
    cplx q12 = e_miphi * r;
    // w-kernel of the doubled angle: 3/2 (p - <p>) - i/2 L tan(gamma)
    //                                + 2 G(p) cos^2 gamma / L^2
    cplx wk(1.5 * (c.p - w.p_mean()) + 2.0 / (c.L * c.L) * k.g(c.p) * cg * cg,
            -0.5 * c.L * sg / cg);
    cplx e_2iphi(std::cos(2 * c.phi), std::sin(2 * c.phi));
    cplx qm3 = e_2iphi * wk;

    ReducedState s;
    s.L3 = c.L;
    s.Q3 = q3v;
    s.Q1 = qplus + qm3.real();
    s.Q2 = qplus - qm3.real();
    s.q3 = qm3.imag();
    s.q1 = q12.real();
    s.q2 = q12.imag();
    return s;
}

ReducedState chart_forward(const WeightVector& w, const ChartPoint& c) {
    DomainCheck dc = classify(w, c.L, c.p, c.gamma);
    if (!dc.ok) throw OutOfDomain("chart_forward: violated " + dc.violated);
    return chart_forward_unchecked(w, c);
}

ChartPoint chart_inverse(const WeightVector& w, const ReducedState& s) {
    double scale = w.scale();
    auto cas = s.casimirs();
    double c1 = w.s1(), c2 = w.s2(), c3 = w.s3();
    if (std::abs(cas[0] - c1) > 1e-8 * scale ||
        std::abs(cas[1] - c2) > 1e-8 * scale * scale ||
        std::abs(cas[2] - c3) > 1e-8 * scale * scale * scale)
        throw OffOrbit("chart_inverse: Casimir residuals exceed tolerance");
    if (!(s.L3 > 0)) throw OutOfDomain("chart_inverse: requires L3 > 0");

    Kernels k(w);
    double R2 = s.r_squared();
    double Q = s.Q3;
    if (R2 < 1e-12 * scale * scale) {
        // The maximal axially-symmetric corner is the one R = 0 state with a
        // unique preimage.
        if (std::abs(Q - w.p2) < 1e-6 * scale &&
            std::abs(s.L3 - w.l_max()) < 1e-6 * scale)
            return ChartPoint{s.L3, 0.5 * (w.p1 + w.p3), -std::atan2(s.q2, s.q1), 0.0,
                              2, 0};
        throw ZeroR("chart_inverse: R = 0 states carry no unique chart angle");
    }
    double p = Q + k.g(Q) / R2;
    // V_L and the gamma pair from the Casimir-residual linear system.
    double vl = (s.q1 * s.q1 - s.q2 * s.q2) * s.q3 + 2.0 * s.q1 * s.q2 * s.q_minus();
    double hp = k.h_product(Q, std::sqrt(R2));
    double root = std::sqrt(std::fmax(-hp, 0.0));
    if (root <= 0) throw OutOfDomain("chart_inverse: H(Q,R) >= 0");
    double cg = 0.5 * s.L3 * R2 / root;
    double sg = -vl / root;
    double gamma = std::atan2(sg, cg);
    double phi = -std::atan2(s.q2, s.q1);

    ChartPoint c{s.L3, p, phi, gamma, 2, (Q > w.p2) - (Q < w.p2)};
    return c;
}

ChartPoint sample_interior(const WeightVector& w, std::mt19937_64& rng, double margin) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        double L = w.l_max() * (margin + (1.0 - 2.0 * margin) * uni(rng));
        double gmax = std::acos(std::fmin(1.0, L / w.l_max() + margin));
        double gamma = (2.0 * uni(rng) - 1.0) * gmax;
        double l = L / std::cos(gamma);
        double lo, hi;
        if (!region_window(w, 1, l, lo, hi)) continue;
        double pad = margin * (hi - lo);
        double p = lo + pad + (hi - lo - 2 * pad) * uni(rng);
        double phi = 2.0 * kPi * uni(rng);
        if (!classify(w, L, p, gamma).ok) continue;
        // enforce the margin against the narrow windows as well
        double a, b;
        bool clash = false;
        for (int i : {0, 2})
            if (region_window(w, i, l, a, b) && p > a - pad && p < b + pad) clash = true;
        if (clash) continue;
        return ChartPoint{L, p, phi, gamma, 2, 0};
    }
    throw Error("sample_interior: rejection sampling failed");
}

} // namespace orbita::orbit
