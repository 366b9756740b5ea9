#pragma once

#include <vector>

#include "orbita/weights.hpp"

namespace orbita::quantize {

/// Multiplicity and parity bookkeeping of the u(3) -> so(3) reduction for
/// one (lambda, mu, L) triple.
struct BranchingRecord {
    long lambda = 0, mu = 0, l = 0;
    long d = 0;       // so(3) multiplicity
    long delta = 0;   // quantum defect, in {0,1,2,3}
    int m1 = 0, m2 = 0, ml = 0; // parities of lambda, mu, L
    int bm1 = 0, bm2 = 0;       // M_i = m_i xor m_L
    int t1 = 0, t2 = 0;         // window bits L <= lambda, L <= mu
};

/// Multiplicity by the K-string counting rule (K = min, min-2, ..., 1 or 0;
/// a positive K contributes L in [K, K+max], K = 0 contributes
/// L = max, max-2, ..., 1 or 0).
long multiplicity_k_rule(long lambda, long mu, long l);

/// Parity-formula defect together with the K-rule multiplicity; the two are
/// tied by  d = (V - delta)/2 + 1  whenever d >= 1.
BranchingRecord branching(long lambda, long mu, long l);

/// Closed-form level volume: L, then min(lambda,mu), then lambda+mu-L.
long volume_closed(long lambda, long mu, long l);

/// Phase-space volume below Q at angular momentum L:
/// V(Q) = (2/pi) Int_{Qmin}^{Q} Delta dt, by tanh-sinh quadrature split at
/// the logarithmic line t = p2.  Monotone nondecreasing in Q.
double volume_q(const WeightVector& w, double L, double Q, double abs_tol = 1e-9);

/// Total volume over the orbit: closed form lambda mu (lambda+mu)/2.
double total_volume(const WeightVector& w);
/// The same by the L-weighted quadrature Int L V_L dL (cross-check route).
double total_volume_quad(const WeightVector& w, double abs_tol = 1e-7);

/// Leading-order dimension of the weight-(lambda,mu) module.
double module_dimension(long lambda, long mu);

/// Half-integer shift u_s(delta), |s| <= 1.
double u_shift(long delta, double s);
/// Parity-corrected shift for odd lambda and/or mu; reduces to u_shift when
/// both are even.  Defined at s = +-1; linear interpolation in between.
double u_shift_bar(long lambda, long mu, long l, double s);

struct SpectrumRow {
    long l = 0;
    long k = 0;      // 1-based index within the L block
    double k_u = 0;  // shifted index k + u
    double q = 0;    // quantized wobbling momentum
    double v = 0;    // volume value 2 (k_u - 1) at the root
};

/// Quantized Q values at one L: roots of V(Q) = 2 (k_u - 1), k = 1..d.
/// Throws NoStates when d = 0.  The L = 0 singlet is assigned the
/// degenerate-sequence value (see pi_sequence).
std::vector<SpectrumRow> bs_spectrum(const WeightVector& w, long l, double s,
                                     double quad_tol = 1e-10);

struct PiSequence {
    double q_pi = 0;                 // common Q of the sequence
    double q_pi_closed = 0;          // rational closed form
    double q_pi_band = 0;            // band value Qbar_sign(lambda-mu)(max)
    std::vector<SpectrumRow> members;
};

/// The degenerate diagonal sequence: members at L = 4k (s = +1) or
/// L = 4k - 1 (s = -1) up to min(lambda,mu).
PiSequence pi_sequence(const WeightVector& w, double s, double quad_tol = 1e-10);

/// Rational closed form of the sequence value (argument order swapped for
/// lambda < mu).
double pi_closed_form(const WeightVector& w);

struct SpectrumTable {
    double s = 0;
    std::vector<SpectrumRow> rows; // sorted by (L, k)
    PiSequence pi;
};

/// All rows for L = 0 .. lambda+mu.
SpectrumTable build_spectrum(const WeightVector& w, double s,
                             double quad_tol = 1e-10);

} // namespace orbita::quantize
