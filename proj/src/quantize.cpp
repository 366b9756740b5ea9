#include "orbita/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "orbita/bands.hpp"
#include "orbita/elliptic.hpp"
#include "orbita/errors.hpp"
#include "orbita/quadrature.hpp"
#include "orbita/wobble.hpp"

namespace orbita::quantize {

namespace {
constexpr double kPi = 3.14159265358979323846;

long round_long(double x) { return static_cast<long>(std::llround(x)); }
} // namespace

long multiplicity_k_rule(long lambda, long mu, long l) {
    if (lambda < 0 || mu < 0 || l < 0) return 0;
    long kmin = std::min(lambda, mu);
    long kmax = std::max(lambda, mu);
    long d = 0;
    for (long k = kmin; k >= 1; k -= 2)
        if (l >= k && l <= k + kmax) ++d;
    if (kmin % 2 == 0) {
        // K = 0 string: L = max, max-2, ..., 1 or 0
        if (l <= kmax && l % 2 == kmax % 2) ++d;
    }
    return d;
}

BranchingRecord branching(long lambda, long mu, long l) {
    BranchingRecord r;
    r.lambda = lambda;
    r.mu = mu;
    r.l = l;
    r.m1 = static_cast<int>(lambda % 2);
    r.m2 = static_cast<int>(mu % 2);
    r.ml = static_cast<int>(l % 2);
    r.bm1 = r.m1 ^ r.ml;
    r.bm2 = r.m2 ^ r.ml;
    r.t1 = l <= lambda ? 1 : 0;
    r.t2 = l <= mu ? 1 : 0;
    int m1 = r.m1, m2 = r.m2, ml = r.ml;
    int inner = m1 + m2 + ml - 2 * ((m1 + m2) * ml + m1 * m2) + 4 * m1 * m2 * ml;
    r.delta = inner + r.bm1 * r.t1 + r.bm2 * r.t2;
    r.d = multiplicity_k_rule(lambda, mu, l);
    return r;
}

long volume_closed(long lambda, long mu, long l) {
    long kmin = std::min(lambda, mu);
    if (l <= kmin) return l;
    if (l <= std::max(lambda, mu)) return kmin;
    return lambda + mu - l;
}

namespace {

/// Half-period of the theta angle at (L,t); finite and logarithmic near
/// t = p2.
double delta_of(const WeightVector& w, double l, double t) {
    wobble::ActionKernel k(w, l, t);
    return k.half_period(l);
}

/// Volume evaluator with the singular lower panel cached, for root finding
/// at fixed L.
class CachedVolume {
public:
    CachedVolume(const WeightVector& w, double l, double tol)
        : w_(w), l_(l), tol_(tol), range_(orbit::q_range(w, l)) {}

    double max_q() const { return range_.q_max; }
    double min_q() const { return range_.q_min; }

    double operator()(double q) {
        auto f = [&](double t) { return delta_of(w_, l_, t); };
        double split = w_.p2;
        if (q <= split || range_.q_min >= split)
            return 2.0 / kPi * tanh_sinh(f, range_.q_min, q, tol_);
        if (below_ < 0) below_ = tanh_sinh(f, range_.q_min, split, tol_);
        return 2.0 / kPi * (below_ + tanh_sinh(f, split, q, tol_));
    }

private:
    const WeightVector& w_;
    double l_, tol_;
    orbit::QRange range_;
    double below_ = -1;
};

} // namespace

double volume_q(const WeightVector& w, double L, double Q, double abs_tol) {
    if (L < 0 || L > w.l_max() + 1e-12 * w.scale())
        throw LOutOfRange("volume_q: L outside [0, lambda+mu]");
    if (L == 0) return 0.0;
    orbit::QRange r = orbit::q_range(w, L);
    double q = std::clamp(Q, r.q_min, r.q_max);
    if (std::abs(Q - q) > 1e-9 * w.scale())
        throw OutsideProjection("volume_q: Q outside the classical interval");
    auto f = [&](double t) { return delta_of(w, L, t); };
    double acc = 0.0;
    double split = w.p2;
    if (q <= split || r.q_min >= split) {
        acc = tanh_sinh(f, r.q_min, q, abs_tol);
    } else {
        acc = tanh_sinh(f, r.q_min, split, 0.5 * abs_tol) +
              tanh_sinh(f, split, q, 0.5 * abs_tol);
    }
    return 2.0 / kPi * acc;
}

double total_volume(const WeightVector& w) {
    double lam = w.lambda(), mu = w.mu();
    return 0.5 * lam * mu * (lam + mu);
}

double total_volume_quad(const WeightVector& w, double abs_tol) {
    double lam = w.lambda(), mu = w.mu();
    double kmin = std::fmin(lam, mu), kmax = std::fmax(lam, mu);
    auto f = [&](double l) {
        orbit::QRange r = orbit::q_range(w, l);
        return l * volume_q(w, l, r.q_max, abs_tol);
    };
    double a = gauss_legendre(f, 0.0, kmin, 32);
    double b = gauss_legendre(f, kmin, kmax, 32);
    double c = gauss_legendre(f, kmax, lam + mu, 32);
    return a + b + c;
}

double module_dimension(long lambda, long mu) {
    return 0.5 * (1.0 + lambda) * (1.0 + mu) * (2.0 + lambda + mu);
}

double u_shift(long delta, double s) {
    if (s < -1 || s > 1) throw ParameterOutOfRange("u_shift: |s| > 1");
    switch (delta) {
        case 0: return 0.0;
        case 1: return 0.25 * (1.0 + s);
        case 2:
        case 3: return 0.25 * (3.0 + s);
    }
    throw ParameterOutOfRange("u_shift: delta outside {0,1,2,3}");
}

namespace {

double parity_correction(long lambda, long mu, long l, int sign) {
    BranchingRecord b = branching(lambda, mu, l);
    double m1 = b.m1, m2 = b.m2, ml = b.ml, bm1 = b.bm1, bm2 = b.bm2;
    if (sign > 0) return bm2 * (m1 * ml + m2 * (1.0 - ml - m1 * ml));
    return -m2 * bm1 * (m1 - bm2 * (1.0 - ml) + ml - 2.0 * m1 * ml);
}

} // namespace

double u_shift_bar(long lambda, long mu, long l, double s) {
    BranchingRecord b = branching(lambda, mu, l);
    double base = u_shift(b.delta, s);
    double dplus = parity_correction(lambda, mu, l, +1);
    double dminus = parity_correction(lambda, mu, l, -1);
    double blend = 0.5 * (1.0 + s) * dplus + 0.5 * (1.0 - s) * dminus;
    // the shifted index must stay inside the classical window
    // 0 <= k_u - 1 <= V/2, which pins u to [0, delta/2]
    return std::clamp(base - 0.5 * blend, 0.0, 0.5 * b.delta);
}

std::vector<SpectrumRow> bs_spectrum(const WeightVector& w, long l, double s,
                                     double quad_tol) {
    long lambda = round_long(w.lambda());
    long mu = round_long(w.mu());
    if (std::abs(w.lambda() - lambda) > 1e-9 || std::abs(w.mu() - mu) > 1e-9)
        throw ParameterOutOfRange("bs_spectrum: lambda, mu must be integers");
    BranchingRecord b = branching(lambda, mu, l);
    if (b.d == 0) throw NoStates("bs_spectrum: zero multiplicity at this L");

    std::vector<SpectrumRow> rows;
    if (l == 0) {
        // The rule itself does not quantize L = 0; the singlet inherits the
        // degenerate-sequence value.
        SpectrumRow row;
        row.l = 0;
        row.k = 1;
        row.k_u = 1;
        row.q = pi_sequence(w, s, quad_tol).q_pi;
        row.v = 0;
        rows.push_back(row);
        return rows;
    }

    double u = u_shift_bar(lambda, mu, l, s);
    CachedVolume vol(w, static_cast<double>(l), 0.1 * quad_tol);
    orbit::QRange r = orbit::q_range(w, static_cast<double>(l));
    double vmax = vol(r.q_max);
    double pad = 1e-12 * w.scale();
    for (long k = 1; k <= b.d; ++k) {
        double target = 2.0 * (k + u - 1.0);
        if (target < -quad_tol || target > vmax + 1e-6)
            throw RootBracketFailure("bs_spectrum: target volume outside [0, Vmax]");
        double lo = r.q_min + pad, hi = r.q_max - pad;
        double q = 0;
        if (target <= 0) {
            q = r.q_min;
        } else if (target >= vmax) {
            q = r.q_max;
        } else {
            for (int it = 0; it < 200; ++it) {
                q = 0.5 * (lo + hi);
                if (q == lo || q == hi) break;
                double v = vol(q);
                if (v < target)
                    lo = q;
                else
                    hi = q;
                if (hi - lo < 1e-13 * w.scale()) break;
            }
        }
        SpectrumRow row;
        row.l = l;
        row.k = k;
        row.k_u = k + u;
        row.q = q;
        row.v = target;
        rows.push_back(row);
    }
    return rows;
}

namespace {

/// L -> 0 limit of the half-volume level: solve
/// (1/pi) Int_{p3}^{Q} K(B0(t)) / sqrt(C0(t)) dt = 1/2 with the limiting
/// kernels of the period function.  This is the value the quantized diagonal
/// sequence clusters around and the one the L = 0 singlet inherits.
double pi_limit_level(const WeightVector& w, double quad_tol) {
    auto f = [&](double t) {
        double c0, b0c; // C and the complement of B in the L -> 0 limit
        if (t <= w.p2) {
            c0 = (w.p1 - t) * (w.p2 - w.p3);
            b0c = (w.p1 - w.p2) * (t - w.p3) / c0;
        } else {
            c0 = (w.p1 - w.p2) * (t - w.p3);
            b0c = (w.p2 - w.p3) * (w.p1 - t) / c0;
        }
        b0c = std::clamp(1.0 - b0c, 1e-300, 1.0);
        return elliptic::comp_first_complement(b0c) / std::sqrt(c0);
    };
    auto level = [&](double q) {
        double acc = tanh_sinh(f, w.p3, std::fmin(q, w.p2), quad_tol);
        if (q > w.p2) acc += tanh_sinh(f, w.p2, q, quad_tol);
        return acc / kPi;
    };
    double lo = w.p3, hi = w.p1, q = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        q = 0.5 * (lo + hi);
        if (q == lo || q == hi) break;
        if (level(q) < 0.5)
            lo = q;
        else
            hi = q;
        if (hi - lo < 1e-13 * w.scale()) break;
    }
    return q;
}

} // namespace

double pi_closed_form(const WeightVector& w) {
    auto f = [](double p1, double p2, double p3) {
        double d = p1 - p2;
        return (2.0 * std::pow(p1 + p2, 3) +
                3.0 * (p1 - 5.0 * p2) * (5.0 * p1 - p2) * p3 +
                24.0 * (p1 + p2) * p3 * p3 - 16.0 * p3 * p3 * p3) /
               (27.0 * d * d);
    };
    // The displayed form covers lambda >= mu; the conjugate orbit covers the
    // other ordering.
    if (w.lambda() >= w.mu()) return f(w.p1, w.p2, w.p3);
    return f(w.p3, w.p2, w.p1);
}

PiSequence pi_sequence(const WeightVector& w, double s, double quad_tol) {
    long lambda = round_long(w.lambda());
    long mu = round_long(w.mu());
    PiSequence seq;
    seq.q_pi_closed = pi_closed_form(w);
    int sgn = w.lambda() >= w.mu() ? 1 : -1;
    seq.q_pi_band = orbit::q_bar(w, sgn, std::fmax(w.lambda(), w.mu()));

    long kmin = std::min(lambda, mu);
    for (long k = 1;; ++k) {
        long l = (s >= 0) ? 4 * k : 4 * k - 1;
        long idx = (s >= 0) ? k + 1 : k;
        if (l > kmin) break;
        BranchingRecord b = branching(lambda, mu, l);
        if (idx < 1 || idx > b.d) continue;
        double u = u_shift_bar(lambda, mu, l, s >= 0 ? 1.0 : -1.0);
        double target = 2.0 * (idx + u - 1.0);
        CachedVolume vol(w, static_cast<double>(l), 0.1 * quad_tol);
        orbit::QRange r = orbit::q_range(w, static_cast<double>(l));
        double lo = r.q_min, hi = r.q_max, q = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            q = 0.5 * (lo + hi);
            if (q == lo || q == hi) break;
            double v = vol(q);
            if (v < target)
                lo = q;
            else
                hi = q;
            if (hi - lo < 1e-13 * w.scale()) break;
        }
        SpectrumRow row;
        row.l = l;
        row.k = idx;
        row.k_u = idx + u;
        row.q = q;
        row.v = target;
        seq.members.push_back(row);
    }
    seq.q_pi = pi_limit_level(w, quad_tol);
    return seq;
}

SpectrumTable build_spectrum(const WeightVector& w, double s, double quad_tol) {
    long lambda = round_long(w.lambda());
    long mu = round_long(w.mu());
    SpectrumTable t;
    t.s = s;
    t.pi = pi_sequence(w, s, quad_tol);
    for (long l = 0; l <= lambda + mu; ++l) {
        BranchingRecord b = branching(lambda, mu, l);
        if (b.d == 0) continue;
        std::vector<SpectrumRow> rows;
        if (l == 0) {
            SpectrumRow row;
            row.l = 0;
            row.k = 1;
            row.k_u = 1;
            row.q = t.pi.q_pi;
            row.v = 0;
            rows.push_back(row);
        } else {
            rows = bs_spectrum(w, l, s, quad_tol);
        }
        for (const auto& r : rows) t.rows.push_back(r);
    }
    return t;
}

} // namespace orbita::quantize
