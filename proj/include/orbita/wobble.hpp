#pragma once

#include "orbita/bands.hpp"
#include "orbita/weights.hpp"

namespace orbita::wobble {

using orbit::EigenTriple;

/// Elliptic action machinery for one (L,Q) level set: the ordered roots
/// [P1,P2,P3,Q], the Moebius map A onto [0,1], the parameter B, the scale C,
/// the characteristic D, and the integrals I (first kind) and J (third
/// kind) together with the inverse of I.
///
/// sigma = sign(Q - p2) selects which pair of roots brackets the libration:
/// [P3,P2] for sigma = +1, [P2,P1] for sigma = -1; both cases are evaluated
/// through one formula set by reversing the root tuple.
class ActionKernel {
public:
    ActionKernel(const WeightVector& w, double L, double Q);

    int sigma() const { return sigma_; }
    const EigenTriple& roots() const { return roots_; }
    double q() const { return q_; }

    double a_map(double x) const;   // A(x): oscillation interval -> [0,1]
    double a_inverse(double s) const;
    double b_param() const { return b_; }
    double b_complement() const { return mc_; }
    double c_scale() const { return c_; }
    double d_char() const { return d_; }

    bool saddle() const { return saddle_; }

    double x_inner() const { return bb_; }  // turning point with I = J = 0
    double x_outer() const { return ab_; }  // other turning point (A = 1)
    double x_lo() const { return std::fmin(bb_, ab_); }
    double x_hi() const { return std::fmax(bb_, ab_); }

    /// I(x) = -2 C^{-1/2} F(asin sqrt(A(x)) | B); nonpositive.
    double action_i(double x) const;
    /// J(x) = 2 C^{-1/2} Pi(D; asin sqrt(A(x)) | B); sign is -sigma.
    double action_j(double x) const;
    /// Inverse of I on the oscillation interval (even in y).
    double action_i_inverse(double y) const;

    /// |dI/dx| with the sign contract dI/dx = sigma |..|.
    double di_dx(double x) const;
    /// dJ/dx >= 0.
    double dj_dx(double x) const;

    /// Half period of the libration angle: Delta = L K(B) / (2 sqrt(C));
    /// infinite on the separatrix (saddle() == true).
    double half_period(double L) const;
    /// 2 C^{-1/2} K(B): the period of the inverse map in its own argument.
    double period_y() const;
    /// Complete third-kind value J at the outer turning point.
    double j_outer() const;

private:
    EigenTriple roots_;
    double q_;
    int sigma_;
    double ab_, bb_, cb_; // root tuple, reversed for sigma = +1
    double b_, mc_, c_, d_;
    bool saddle_ = false;
};

} // namespace orbita::wobble
