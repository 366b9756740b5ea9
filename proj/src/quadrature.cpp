#include "orbita/quadrature.hpp"

#include <cmath>
#include <vector>

#include "orbita/errors.hpp"

namespace orbita {

namespace {

double simpson_step(const Integrand& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0) {
        if (std::abs(delta) > 15.0 * tol)
            throw QuadratureFailure("adaptive Simpson recursion exhausted, est. error " +
                                    std::to_string(std::abs(delta) / 15.0));
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const Integrand& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, 52);
}

double tanh_sinh(const Integrand& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    const double half = 0.5 * (b - a);
    const double tmax = 6.5; // abscissa offsets underflow well before this
    const double pi_half = 1.5707963267948966;

    // f evaluated through the offset from the nearer endpoint so that the
    // double-exponential clustering is not destroyed by cancellation.
    auto eval = [&](double t) -> double {
        double sh = pi_half * std::sinh(t);
        double ch = std::cosh(sh);
        double w = pi_half * std::cosh(t) / (ch * ch);
        if (w < 1e-280) return 0.0;
        // 1 - tanh(|sh|) = 2 e^{-2|sh|} / (1 + e^{-2|sh|})
        double e = std::exp(-2.0 * std::abs(sh));
        double off = half * 2.0 * e / (1.0 + e); // distance from endpoint
        double x = (t >= 0) ? b - off : a + off;
        if (x <= a || x >= b) return 0.0;
        double v = f(x);
        if (!std::isfinite(v)) return 0.0; // endpoint blowup, weight negligible
        return w * v;
    };

    double h = 1.0;
    double sum = eval(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval(t) + eval(-t);
    double integral = half * h * sum;

    double change = std::abs(integral);
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        sum += add;
        double next = half * h * sum;
        change = std::abs(next - integral);
        integral = next;
        if (level >= 3 && (change <= abs_tol || change <= 1e-13 * std::abs(integral)))
            return integral;
    }
    throw QuadratureFailure("tanh-sinh stalled; last refinement changed the result by " +
                            std::to_string(change));
}

double gauss_legendre(const Integrand& f, double a, double b, int order) {
    // Nodes by Newton iteration on Legendre polynomials.
    std::vector<double> x(order), w(order);
    int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
            }
            double dp = order * (xi * p0 - p1) / (xi * xi - 1.0);
            double dx = p0 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < order; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
        }
        double dp = order * (xi * p0 - p1) / (xi * xi - 1.0);
        x[i] = xi;
        x[order - 1 - i] = -xi;
        w[i] = w[order - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
    double c1 = 0.5 * (b - a), c2 = 0.5 * (b + a);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += w[i] * f(c2 - c1 * x[i]);
    return c1 * s;
}

} // namespace orbita
