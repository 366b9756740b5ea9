#include "orbita/bands.hpp"

#include <algorithm>
#include <cmath>

#include "orbita/chart.hpp"
#include "orbita/errors.hpp"

namespace orbita::orbit {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double h_switch(double x, double y) {
    return x >= y ? x + y : 2.0 * std::sqrt(x * y);
}

QRange q_range(const WeightVector& w, double L) {
    double lam = w.lambda(), mu = w.mu();
    double tol = 1e-12 * w.scale();
    if (L < -tol || L > lam + mu + tol)
        throw LOutOfRange("q_range: L outside [0, lambda+mu]");
    L = std::clamp(L, 0.0, lam + mu);
    QRange r{};
    if (L <= lam)
        r.q_min = w.p3;
    else if (L <= h_switch(lam, mu))
        r.q_min = q_bar(w, -1, L);
    else
        r.q_min = w.p2;
    if (L <= mu)
        r.q_max = w.p1;
    else if (L <= h_switch(mu, lam))
        r.q_max = q_bar(w, +1, L);
    else
        r.q_max = w.p2;
    return r;
}

bool in_projection(const WeightVector& w, double L, double Q, double tol) {
    if (L < -tol || L > w.l_max() + tol) return false;
    QRange r = q_range(w, std::clamp(L, 0.0, w.l_max()));
    return Q >= r.q_min - tol && Q <= r.q_max + tol;
}

double p_sigma(const WeightVector& w, int sigma, double L) {
    return (w.s1() - sigma * w.sl(L)) / 3.0;
}

double q_bar(const WeightVector& w, int sigma, double L) {
    Kernels k(w);
    double p = p_sigma(w, sigma, L);
    return p + 4.0 / (L * L) * k.g(p);
}

EigenTriple eigenvalues(const WeightVector& w, double L, double Q) {
    if (!in_projection(w, L, Q, 1e-9 * w.scale()))
        throw OutsideProjection("eigenvalues: (L,Q) outside the classical region");
    double sl = w.sl(L);
    EigenTriple e;
    e.beta = sl / w.s1(); // shape amplitude; infinite on traceless orbits
    double arg = -(4.0 * w.sa111() + 9.0 * L * L * (w.s1() - 3.0 * Q)) /
                 (8.0 * sl * sl * sl);
    arg = std::clamp(arg, -1.0, 1.0);
    e.gamma_shape = std::acos(arg) / 3.0;
    // division-free form of the cosine parametrization, valid at S1 = 0
    double base = w.s1() / 3.0, amp = 2.0 * sl / 3.0;
    e.p1 = base + amp * std::cos(e.gamma_shape);
    e.p2 = base + amp * std::cos(e.gamma_shape - 2.0 * kPi / 3.0);
    e.p3 = base + amp * std::cos(e.gamma_shape - 4.0 * kPi / 3.0);
    return e;
}

std::array<double, 2> shape_projection(const EigenTriple& e) {
    return {e.beta * std::cos(e.gamma_shape), e.beta * std::sin(e.gamma_shape)};
}

const char* band_kind_name(BandKind k) {
    switch (k) {
        case BandKind::S1: return "S1";
        case BandKind::S2: return "S2";
        case BandKind::S3: return "S3";
        case BandKind::Pplus: return "P+";
        case BandKind::Pminus: return "P-";
    }
    return "?";
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Minimum: return "min";
        case Stability::Maximum: return "max";
        case Stability::Saddle: return "unstable";
    }
    return "?";
}

double energy_factor_axial(const WeightVector& w, int i, double L) {
    double pi = w.weight(i);
    double pa = w.weight((i + 1) % 3), pb = w.weight((i + 2) % 3);
    return pi * (pa * pb + 0.25 * L * L);
}

double energy_factor_sigma(const WeightVector& w, int sigma, double L) {
    double d = p_sigma(w, sigma, L) - w.p_mean(); // = -sigma S_L / 3
    return w.s111() + w.sa111() / 27.0 + 0.25 * w.p_mean() * L * L - 2.0 * d * d * d;
}

double band_c_factor(const WeightVector& w, BandKind kind, double L, bool eigen_route) {
    double lam = w.lambda(), mu = w.mu();
    if (kind == BandKind::S1 || kind == BandKind::S2 || kind == BandKind::S3) {
        int i = kind == BandKind::S1 ? 0 : (kind == BandKind::S2 ? 1 : 2);
        if (kind == BandKind::S2 && L < 2.0 * std::sqrt(lam * mu))
            return 0.0; // hyperbolic segment, no oscillation
        if (eigen_route) {
            EigenTriple e = eigenvalues(w, L, w.weight(i));
            // locate the eigenvalue pinned at p_i and multiply the gaps
            int at = 0;
            double best = 1e300;
            for (int a = 0; a < 3; ++a) {
                double d = std::abs(e.value(a) - w.weight(i));
                if (d < best) {
                    best = d;
                    at = a;
                }
            }
            double prod = 1.0;
            for (int a = 0; a < 3; ++a)
                if (a != at) prod *= e.value(a) - e.value(at);
            return prod;
        }
        double pa = w.weight((i + 1) % 3), pb = w.weight((i + 2) % 3);
        return (pa - w.weight(i)) * (pb - w.weight(i)) + 0.25 * L * L;
    }
    int sigma = (kind == BandKind::Pplus) ? 1 : -1;
    if (eigen_route) {
        Kernels k(w);
        return sigma * 4.0 / (L * L) * w.sl(L) * k.g(p_sigma(w, sigma, L));
    }
    double sl = w.sl(L);
    return 4.0 / 27.0 / (L * L) *
           ((sigma * w.sa111() + 2.0 * sl * sl * sl) * sl +
            2.25 * L * L * sl * sl);
}

double HamiltonianSpec::omega_r(const WeightVector& w) const {
    double pv = p_pauli > 0 ? p_pauli : w.p_geo();
    return std::pow(pv / w.p_geo(), r - 1.0) * omega0;
}

double HamiltonianSpec::omega_of_l(const WeightVector& w, double L) const {
    if (omega_custom) return omega_custom(L);
    double pg = w.p_geo();
    if (!(pg > 0))
        throw ParameterOutOfRange(
            "HamiltonianSpec: the quadratic frequency model needs p_geo > 0; "
            "supply omega_custom for orbits touching zero weight");
    return omega_r(w) / (pg * pg) * L * L;
}

double HamiltonianSpec::omega_prime_of_l(const WeightVector& w, double L) const {
    if (omega_prime_custom) return omega_prime_custom(L);
    if (omega_custom) { // symmetric difference of the user model
        double h = 1e-6 * std::fmax(1.0, std::abs(L));
        return (omega_custom(L + h) - omega_custom(L - h)) / (2.0 * h);
    }
    double pg = w.p_geo();
    if (!(pg > 0))
        throw ParameterOutOfRange(
            "HamiltonianSpec: the quadratic frequency model needs p_geo > 0; "
            "supply omega_custom for orbits touching zero weight");
    return 2.0 * omega_r(w) / (pg * pg) * L;
}

double HamiltonianSpec::e0_prime_of_l(double L) const {
    if (!e0_of_l) return 0.0;
    double h = 1e-6 * std::fmax(1.0, std::abs(L));
    return (e0_of_l(L + h) - e0_of_l(L - h)) / (2.0 * h);
}

double HamiltonianSpec::value(const WeightVector& w, double detq) const {
    double kap = kappa();
    return std::pow(w.p_geo(), 1.0 - 3.0 * kap) * omega_r(w) / kap *
           std::pow(detq, kap);
}

double HamiltonianSpec::linear_value(const WeightVector& w, double L, double Q) const {
    double base = e0_of_l ? e0_of_l(L) : e0;
    return base + 0.25 * omega_of_l(w, L) * Q;
}

double omega_nuclear(double a_mass) { return 40.0 * std::pow(a_mass, -1.0 / 3.0); }

BandCatalog band_catalog(const WeightVector& w, double r, double s) {
    if (!(r <= 2.0) || !(s >= 0.0))
        throw ParameterOutOfRange("band_catalog: physical range is r <= 2, s >= 0");
    double lam = w.lambda(), mu = w.mu();
    double l_top = lam + mu, l_split = 2.0 * std::sqrt(lam * mu);
    BandCatalog cat;

    auto make_axial = [&w](BandKind kind, int i, Stability st, double l0, double l1) {
        Band b;
        b.kind = kind;
        b.stability = st;
        b.l_min = l0;
        b.l_max = l1;
        double pa = w.weight((i + 1) % 3), pb = w.weight((i + 2) % 3);
        double pm = 0.5 * (pa + pb);
        b.p_of_l = [pm](double) { return pm; };
        b.q_of_l = [&w, i](double) { return w.weight(i); };
        b.eigen_of_l = [&w, i](double L) { return eigenvalues(w, L, w.weight(i)); };
        b.energy_factor = [&w, i](double L) { return energy_factor_axial(w, i, L); };
        b.c_factor = [&w, kind](double L) { return band_c_factor(w, kind, L); };
        return b;
    };
    auto make_sigma = [&w](BandKind kind, int sigma, Stability st, double l0, double l1) {
        Band b;
        b.kind = kind;
        b.stability = st;
        b.l_min = l0;
        b.l_max = l1;
        b.p_of_l = [&w, sigma](double L) { return p_sigma(w, sigma, L); };
        b.q_of_l = [&w, sigma](double L) { return q_bar(w, sigma, L); };
        b.eigen_of_l = [&w, sigma](double L) {
            return eigenvalues(w, std::fmin(L, w.l_max()), q_bar(w, sigma, L));
        };
        b.energy_factor = [&w, sigma](double L) {
            return energy_factor_sigma(w, sigma, L);
        };
        b.c_factor = [&w, kind](double L) { return band_c_factor(w, kind, L); };
        return b;
    };

    // Minima and maxima split at 2 sqrt(lambda mu); the middle axial family
    // below that L is a saddle of the energy.
    cat.bands.push_back(make_axial(BandKind::S3, 2, Stability::Minimum, 0.0, lam));
    cat.bands.push_back(make_axial(BandKind::S1, 0, Stability::Maximum, 0.0, mu));
    if (mu < lam) {
        cat.bands.push_back(
            make_sigma(BandKind::Pminus, -1, Stability::Minimum, lam, l_top));
        cat.bands.push_back(
            make_sigma(BandKind::Pplus, +1, Stability::Maximum, mu, l_split));
        cat.bands.push_back(
            make_axial(BandKind::S2, 1, Stability::Maximum, l_split, l_top));
    } else {
        cat.bands.push_back(
            make_sigma(BandKind::Pminus, -1, Stability::Minimum, lam, l_split));
        cat.bands.push_back(
            make_axial(BandKind::S2, 1, Stability::Minimum, l_split, l_top));
        cat.bands.push_back(
            make_sigma(BandKind::Pplus, +1, Stability::Maximum, mu, l_top));
    }
    cat.bands.push_back(make_axial(BandKind::S2, 1, Stability::Saddle, 0.0, l_split));

    cat.intersections.push_back({BandKind::Pminus, BandKind::S3, lam, w.p3});
    cat.intersections.push_back({BandKind::Pplus, BandKind::S1, mu, w.p1});
    if (mu < lam) {
        cat.intersections.push_back({BandKind::Pminus, BandKind::S2, l_top, w.p2});
        cat.intersections.push_back({BandKind::Pplus, BandKind::S2, l_split, w.p2});
    } else {
        cat.intersections.push_back({BandKind::Pplus, BandKind::S2, l_top, w.p2});
        cat.intersections.push_back({BandKind::Pminus, BandKind::S2, l_split, w.p2});
    }
    return cat;
}

} // namespace orbita::orbit
