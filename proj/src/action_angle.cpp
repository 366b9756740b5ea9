#include "orbita/action_angle.hpp"

#include <cmath>

#include "orbita/elliptic.hpp"
#include "orbita/errors.hpp"
#include "orbita/quadrature.hpp"

namespace orbita::aa {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}
} // namespace

double normalize_theta(double theta, double delta) {
    double two = 2.0 * delta;
    double t = std::fmod(theta, two);
    if (t <= -delta) t += two;
    if (t > delta) t -= two;
    return t;
}

int eps_theta(double theta, double delta) {
    double s = std::sin(kPi * theta / delta);
    if (std::abs(s) < 1e-9) return 0; // turning seam up to roundoff
    return s > 0 ? 1 : -1;
}

ActionAnglePoint kappa_forward_raw(const WeightVector& w, const ChartPoint& c) {
    orbit::Kernels kr(w);
    double Q = kr.q_of(c.L, c.p, c.gamma);
    ActionKernel k(w, c.L, Q);
    if (k.saddle())
        throw BoundaryState("kappa_forward: separatrix level set (Q = p2)");
    // gamma = 0 only happens at turning points, where both branch limits
    // agree modulo the period; the lower branch keeps theta in [0, Delta]
    int eg = (c.gamma > 0) ? 1 : -1;
    double iv = k.action_i(c.p);
    ActionAnglePoint a;
    a.L = c.L;
    a.Q = Q;
    a.theta = 0.25 * eg * c.L * iv;
    a.psi = c.phi + 0.5 * eg * k.action_j(c.p);
    return a;
}

ActionAnglePoint kappa_forward(const WeightVector& w, const ChartPoint& c) {
    ActionAnglePoint a = kappa_forward_raw(w, c);
    ActionKernel k(w, c.L, a.Q);
    a.theta = normalize_theta(a.theta, k.half_period(c.L));
    a.psi = wrap_angle(a.psi);
    return a;
}

double p_of_theta(const ActionKernel& k, double L, double theta) {
    return k.action_i_inverse(4.0 * std::abs(theta) / L);
}

ChartPoint kappa_inverse(const WeightVector& w, const ActionAnglePoint& a) {
    ActionKernel k(w, a.L, a.Q);
    double delta = k.half_period(a.L);
    double theta = normalize_theta(a.theta, delta);
    int et = eps_theta(theta, delta);
    double p = p_of_theta(k, a.L, theta);
    orbit::Kernels kr(w);
    ChartPoint c;
    c.L = a.L;
    c.p = p;
    if (et == 0) {
        c.gamma = 0.0;
        c.p = (std::abs(theta) < 0.5 * delta) ? k.x_inner() : k.x_outer();
        c.phi = wrap_angle(a.psi + 0.5 * k.action_j(c.p));
    } else {
        c.gamma = -et * kr.gamma_plus(a.L, a.Q, p);
        c.phi = wrap_angle(a.psi + 0.5 * et * k.action_j(p));
    }
    c.sigma_q = k.sigma();
    return c;
}

ActionAnglePoint evolve(const WeightVector& w, const ActionAnglePoint& a0,
                        const HamiltonianSpec& h, double t) {
    ActionKernel k(w, a0.L, a0.Q);
    double delta = k.half_period(a0.L);
    ActionAnglePoint a = a0;
    a.theta = normalize_theta(a0.theta + 0.25 * h.omega_of_l(w, a0.L) * t, delta);
    a.psi = wrap_angle(a0.psi + (0.25 * a0.Q * h.omega_prime_of_l(w, a0.L) +
                                 h.e0_prime_of_l(a0.L)) *
                                    t);
    return a;
}

double wobbling_frequency(const WeightVector& w, double L, double Q,
                          const HamiltonianSpec& h) {
    ActionKernel k(w, L, Q);
    if (k.saddle() || elliptic::saddle_period(k.b_complement())) return 0.0;
    double kk = elliptic::comp_first_complement(k.b_complement());
    return 0.5 * kPi * std::sqrt(k.c_scale()) * h.omega_of_l(w, L) / (L * kk);
}

double wobbling_frequency(const WeightVector& w, const Band& band, double L,
                          const HamiltonianSpec& h) {
    double c = band.c_factor(L);
    if (c <= 0.0) return 0.0; // vibrationally unstable segment
    return std::sqrt(c) * h.omega_of_l(w, L) / L;
}

std::array<double, 3> bodyframe_momenta_eigen(const WeightVector& w, double L,
                                              double Q, double theta) {
    ActionKernel k(w, L, Q);
    double p = p_of_theta(k, L, theta);
    orbit::Kernels kr(w);
    int et = eps_theta(theta, k.half_period(L));
    double gamma = (et == 0) ? 0.0 : -et * kr.gamma_plus(L, Q, p);
    auto s = orbit::chart_forward_unchecked(w, orbit::ChartPoint{L, p, 0.0, gamma});
    Mat3 qt;
    qt[0][0] = s.Q1;
    qt[1][1] = s.Q2;
    qt[2][2] = s.Q3;
    qt[0][1] = qt[1][0] = s.q3;
    qt[0][2] = qt[2][0] = s.q2;
    qt[1][2] = qt[2][1] = s.q1;
    std::array<double, 3> ev;
    Mat3 vec;
    jacobi_eigensystem_sym3(qt, ev, vec);
    // the rotated-frame angular momentum is (0,0,L); its body-frame
    // components are L times the e3 components of the eigenvectors
    std::array<double, 3> sq;
    for (int a = 0; a < 3; ++a) sq[a] = L * L * vec[2][a] * vec[2][a];
    return sq;
}

std::array<double, 3> bodyframe_momenta(const WeightVector& w, double L, double Q,
                                        double theta) {
    ActionKernel k(w, L, Q);
    double p = p_of_theta(k, L, theta);
    orbit::Kernels kr(w);
    const auto& e = k.roots();
    double sl = w.sl(L);
    std::array<double, 3> sq{};
    double scale = L * L;
    // Q at a weight makes the kernel 0/0 (Q is then itself a root)
    bool degenerate =
        std::abs(kr.g(Q)) < 1e-9 * std::pow(w.scale(), 3);
    for (int alpha = 0; alpha < 3; ++alpha) {
        double pa = e.value(alpha);
        double den = (3.0 * pa - w.s1()) * (3.0 * pa - w.s1()) - sl * sl;
        // the direction-cosine kernel carries one more factor of L^2 so that
        // the three squares add up to L^2
        double v = 0.75 * (p - pa) / (p - Q) * kr.g(Q) / kr.g(pa) *
                   (L * L) * (L * L) / den;
        if (!std::isfinite(v)) degenerate = true;
        if (v < -1e-10 * scale)
            throw NegativeSquare("bodyframe_momenta: squared component " +
                                 std::to_string(v));
        sq[alpha] = std::fmax(v, 0.0);
    }
    if (degenerate) return bodyframe_momenta_eigen(w, L, Q, theta);
    return sq;
}

double bodyframe_cubic_residual(const WeightVector& w, double L, double Q,
                                double theta, int r) {
    auto sq = bodyframe_momenta(w, L, Q, theta);
    ActionKernel k(w, L, Q);
    double p3 = k.roots().p3;
    orbit::Kernels kr(w);
    double sl = w.sl(L);
    double cp2 = 4.0 * sl * sl - (3.0 * p3 - w.s1()) * (3.0 * p3 - w.s1());
    double cp = std::sqrt(std::fmax(cp2, 0.0) / 3.0);
    double lhs = 8.0 * kr.g(p3) + (sq[0] + sq[1]) * (3.0 * p3 - w.s1());
    double rhs = (sq[0] - sq[1]) * cp;
    if (r == 1) return std::fmin(std::abs(lhs - rhs), std::abs(lhs + rhs));
    double l2 = lhs * lhs, r2 = rhs * rhs;
    return std::abs(l2 - r2);
}

double generating_potential(const WeightVector& w, double L, double Q, double p,
                            int eps_gamma, double quad_tol) {
    ActionKernel k(w, L, Q);
    orbit::Kernels kr(w);
    double p2 = k.x_inner();
    auto f = [&](double t) { return kr.gamma_plus(L, Q, t); };
    double val = (p >= p2) ? tanh_sinh(f, p2, p, quad_tol)
                           : -tanh_sinh(f, p, p2, quad_tol);
    return -eps_gamma * val;
}

std::vector<TrajectorySample> trajectory_closed(const WeightVector& w,
                                                const ActionAnglePoint& a0,
                                                const HamiltonianSpec& h,
                                                double t_end, int samples) {
    ActionKernel k(w, a0.L, a0.Q);
    orbit::Kernels kr(w);
    double delta = k.half_period(a0.L);
    double jout = k.j_outer();
    double rate = 0.25 * h.omega_of_l(w, a0.L);
    double psi_rate = 0.25 * a0.Q * h.omega_prime_of_l(w, a0.L) +
                      h.e0_prime_of_l(a0.L);

    std::vector<TrajectorySample> out;
    out.reserve(samples + 1);
    // Seams (outer turning points) sit at theta = delta + 2 k delta; the phi
    // branch shifts by J(outer) at each forward crossing.
    auto seam_index = [delta](double th) {
        return std::floor((th - delta) / (2.0 * delta));
    };
    double seam0 = seam_index(a0.theta);
    for (int i = 0; i <= samples; ++i) {
        double t = t_end * i / samples;
        double theta_raw = a0.theta + rate * t;
        double crossings = seam_index(theta_raw) - seam0;
        double theta = normalize_theta(theta_raw, delta);
        int et = eps_theta(theta, delta);
        double p = p_of_theta(k, a0.L, theta);
        double gamma = (et == 0) ? 0.0 : -et * kr.gamma_plus(a0.L, a0.Q, p);
        double psi = a0.psi + psi_rate * t;
        // at an exact outer seam the crossing is already counted, so the
        // eps = -1 side convention keeps the branch continuous
        double phi_branch = (et == 0) ? -0.5 * k.action_j(p)
                                      : 0.5 * et * k.action_j(p);
        double phi = psi + phi_branch + crossings * jout;
        out.push_back({t, p, gamma, wrap_angle(phi)});
    }
    return out;
}

std::vector<TrajectorySample> trajectory_rk4(const WeightVector& w, double L,
                                             double Q, double p0, double gamma0,
                                             double phi0, const HamiltonianSpec& h,
                                             double t_end, int steps, int samples) {
    orbit::Kernels kr(w);
    double omega = h.omega_of_l(w, L);
    double omega_p = h.omega_prime_of_l(w, L);
    double e0p = h.e0_prime_of_l(L);
    auto deriv = [&](double p, double g, double& dp, double& dg, double& dphi) {
        double c = std::cos(g), s = std::sin(g);
        dp = 2.0 / (L * L) * kr.g(p) * omega * c * s;
        dg = 0.25 * omega * (1.0 + 4.0 / (L * L) * kr.g_prime(p) * c * c);
        dphi = e0p + 0.25 * omega_p * Q - 2.0 * omega / (L * L * L) * kr.g(p) * c * c;
    };
    std::vector<TrajectorySample> out;
    out.reserve(samples + 1);
    double p = p0, g = gamma0, phi = phi0;
    // round the step count up to a multiple of the sample count so that the
    // emitted times coincide exactly with t_end * k / samples
    int stride = std::max(1, (steps + samples - 1) / samples);
    steps = stride * samples;
    double dt = t_end / steps;
    out.push_back({0.0, p, g, phi});
    for (int i = 1; i <= steps; ++i) {
        double k1p, k1g, k1f, k2p, k2g, k2f, k3p, k3g, k3f, k4p, k4g, k4f;
        deriv(p, g, k1p, k1g, k1f);
        deriv(p + 0.5 * dt * k1p, g + 0.5 * dt * k1g, k2p, k2g, k2f);
        deriv(p + 0.5 * dt * k2p, g + 0.5 * dt * k2g, k3p, k3g, k3f);
        deriv(p + dt * k3p, g + dt * k3g, k4p, k4g, k4f);
        p += dt / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
        g += dt / 6.0 * (k1g + 2 * k2g + 2 * k3g + k4g);
        phi += dt / 6.0 * (k1f + 2 * k2f + 2 * k3f + k4f);
        if (i % stride == 0) out.push_back({i * dt, p, g, phi});
    }
    return out;
}

} // namespace orbita::aa
