#include "orbita/linalg.hpp"

#include <algorithm>
#include <limits>

namespace orbita {

void jacobi_eigensystem_sym3(const Mat3& a0, std::array<double, 3>& values,
                             Mat3& vectors) {
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = 0.5 * (a0[i][j] + a0[j][i]);
    Mat3 v = Mat3::identity();

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        double diag = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]);
        if (off <= 1e-16 * std::max(1.0, diag)) break;
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                double app = a[p][p], aqq = a[q][q], apq = a[p][q];
                a[p][p] = c * c * app - 2 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2 * s * c * apq + c * c * aqq;
                a[p][q] = a[q][p] = 0.0;
                int r = 3 - p - q;
                double arp = a[r][p], arq = a[r][q];
                a[r][p] = a[p][r] = c * arp - s * arq;
                a[r][q] = a[q][r] = s * arp + c * arq;
                for (int i = 0; i < 3; ++i) {
                    double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
    }
    int order[3] = {0, 1, 2};
    double d[3] = {a[0][0], a[1][1], a[2][2]};
    std::sort(order, order + 3, [&](int x, int y) { return d[x] > d[y]; });
    for (int k = 0; k < 3; ++k) {
        values[k] = d[order[k]];
        for (int i = 0; i < 3; ++i) vectors[i][k] = v[i][order[k]];
    }
}

std::array<double, 3> jacobi_eigenvalues_sym3(const Mat3& a0) {
    std::array<double, 3> ev;
    Mat3 v;
    jacobi_eigensystem_sym3(a0, ev, v);
    return ev;
}

namespace {

double eval_cubic(double x, double e1, double e2, double e3) {
    return ((x - e1) * x + e2) * x - e3;
}

double bisect_root(double lo, double hi, double e1, double e2, double e3) {
    double flo = eval_cubic(lo, e1, e2, e3);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        double fm = eval_cubic(mid, e1, e2, e3);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::array<double, 3> cubic_roots_bisect(double e1, double e2, double e3) {
    double scale = std::max({1.0, std::abs(e1), std::sqrt(std::abs(e2)),
                             std::cbrt(std::abs(e3))});
    double disc = e1 * e1 - 3.0 * e2;
    if (disc <= 0) {
        // Extrema coincide or are complex: (near-)triple root.
        double r = e1 / 3.0;
        return {r, r, r};
    }
    double sq = std::sqrt(disc);
    double xc1 = (e1 - sq) / 3.0, xc2 = (e1 + sq) / 3.0; // xc1 < xc2
    double f1 = eval_cubic(xc1, e1, e2, e3);             // local max value
    double f2 = eval_cubic(xc2, e1, e2, e3);             // local min value

    double lo = xc1 - 1.0 - scale, hi = xc2 + 1.0 + scale;
    while (eval_cubic(lo, e1, e2, e3) > 0) lo -= scale;
    while (eval_cubic(hi, e1, e2, e3) < 0) hi += scale;

    std::array<double, 3> r{};
    if (f1 < 0) {
        // Lower pair merged (or lost to roundoff) at the local max.
        r[0] = bisect_root(xc2, hi, e1, e2, e3);
        r[1] = r[2] = xc1;
    } else if (f2 > 0) {
        // Upper pair merged at the local min.
        r[0] = r[1] = xc2;
        r[2] = bisect_root(lo, xc1, e1, e2, e3);
    } else {
        r[2] = bisect_root(lo, xc1, e1, e2, e3);
        r[1] = bisect_root(xc1, xc2, e1, e2, e3);
        r[0] = bisect_root(xc2, hi, e1, e2, e3);
    }
    std::sort(r.begin(), r.end(), std::greater<double>());
    return r;
}

} // namespace orbita
