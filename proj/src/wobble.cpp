#include "orbita/wobble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbita/elliptic.hpp"
#include "orbita/errors.hpp"

namespace orbita::wobble {

namespace el = orbita::elliptic;

ActionKernel::ActionKernel(const WeightVector& w, double L, double Q)
    : roots_(orbit::eigenvalues(w, L, Q)), q_(Q) {
    double d2 = Q - w.p2;
    sigma_ = d2 >= 0 ? 1 : -1;
    const double P1 = roots_.p1, P2 = roots_.p2, P3 = roots_.p3;
    // Reversed tuple for sigma = +1 so one formula set covers both cases;
    // the libration interval is [ab, bb] up to order and the inner turning
    // point (I = J = 0) is always bb = P2.
    if (sigma_ > 0) {
        ab_ = P3;
        bb_ = P2;
        cb_ = P1;
        mc_ = (P1 - P3) * (Q - P2) / ((P1 - P2) * (Q - P3));
    } else {
        ab_ = P1;
        bb_ = P2;
        cb_ = P3;
        mc_ = (P1 - P3) * (P2 - Q) / ((P2 - P3) * (P1 - Q));
    }
    c_ = (ab_ - q_) * (bb_ - cb_);
    d_ = (ab_ - bb_) / (ab_ - q_);
    if (!(c_ > 0))
        throw OutsideProjection("ActionKernel: degenerate level set (C <= 0)");
    mc_ = std::clamp(mc_, 0.0, 1.0);
    b_ = 1.0 - mc_;
    saddle_ = (mc_ == 0.0);
    // D tends to 1 from inside together with B on the approach to the
    // separatrix; the pole itself (D sin^2 >= 1) is flagged at evaluation.
    if (d_ < -1e-12 || d_ > 1.0 + 1e-9)
        throw CharacteristicPole("ActionKernel: characteristic left [0,1]");
    d_ = std::clamp(d_, 0.0, 1.0 - 1e-16);
}

double ActionKernel::a_map(double x) const {
    return (ab_ - q_) * (x - bb_) / ((ab_ - bb_) * (x - q_));
}

double ActionKernel::a_inverse(double s) const {
    return (bb_ * (ab_ - q_) + q_ * (bb_ - ab_) * s) /
           ((ab_ - q_) + (bb_ - ab_) * s);
}

namespace {
void require_inside(double x, double lo, double hi) {
    double pad = 1e-9 * (hi - lo) + 1e-12;
    if (x < lo - pad || x > hi + pad)
        throw OutsideClassicalRegion("action integral argument outside [" +
                                     std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
}
} // namespace

double ActionKernel::action_i(double x) const {
    require_inside(x, x_lo(), x_hi());
    double a = std::clamp(a_map(x), 0.0, 1.0);
    return -2.0 / std::sqrt(c_) * el::inc_first(std::asin(std::sqrt(a)), b_);
}

double ActionKernel::action_j(double x) const {
    require_inside(x, x_lo(), x_hi());
    double a = std::clamp(a_map(x), 0.0, 1.0);
    return 2.0 * (bb_ - q_) / std::sqrt(c_) *
           el::inc_third(d_, std::asin(std::sqrt(a)), b_);
}

double ActionKernel::action_i_inverse(double y) const {
    double sn = el::jacobi_sn(0.5 * std::sqrt(c_) * y, b_);
    return a_inverse(sn * sn);
}

double ActionKernel::di_dx(double x) const {
    double prod = (x - roots_.p1) * (x - roots_.p2) * (x - roots_.p3);
    double quart = std::abs((q_ - x) * prod);
    return sigma_ / std::sqrt(std::fmax(quart, 1e-300));
}

double ActionKernel::dj_dx(double x) const {
    double prod = (x - roots_.p1) * (x - roots_.p2) * (x - roots_.p3);
    return std::sqrt(std::abs(q_ - x) / std::fmax(std::abs(prod), 1e-300));
}

double ActionKernel::half_period(double L) const {
    if (saddle_) return std::numeric_limits<double>::infinity();
    return 0.5 * L * el::comp_first_complement(mc_) / std::sqrt(c_);
}

double ActionKernel::period_y() const {
    return 2.0 * el::comp_first_complement(mc_) / std::sqrt(c_);
}

double ActionKernel::j_outer() const {
    return 2.0 * (bb_ - q_) / std::sqrt(c_) * el::comp_third(d_, b_);
}

} // namespace orbita::wobble
