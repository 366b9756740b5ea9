#include "orbita/reduced.hpp"

#include <cmath>
#include <vector>

#include "orbita/cartan.hpp"
#include "orbita/errors.hpp"

namespace orbita::algebra {

const char* gen_name(Gen g) {
    static const char* names[kGenCount] = {"L3", "Q1", "Q2", "Q3", "q1", "q2", "q3"};
    return names[static_cast<int>(g)];
}

CMat3 ReducedState::to_matrix() const {
    CMat3 b;
    const cplx ih(0.0, 0.5);
    b[0][0] = Q1;
    b[1][1] = Q2;
    b[2][2] = Q3;
    b[0][1] = q3 + ih * L3;
    b[1][0] = q3 - ih * L3;
    b[0][2] = b[2][0] = q2;
    b[1][2] = b[2][1] = q1;
    return b;
}

ReducedState ReducedState::from_matrix(const CMat3& b) {
    ReducedState s;
    s.Q1 = b[0][0].real();
    s.Q2 = b[1][1].real();
    s.Q3 = b[2][2].real();
    s.q3 = 0.5 * (b[0][1] + b[1][0]).real();
    s.L3 = 2.0 * b[0][1].imag();
    s.q2 = 0.5 * (b[0][2] + b[2][0]).real();
    s.q1 = 0.5 * (b[1][2] + b[2][1]).real();
    return s;
}

double ReducedState::value(Gen g) const {
    switch (g) {
        case Gen::L3: return L3;
        case Gen::Q1: return Q1;
        case Gen::Q2: return Q2;
        case Gen::Q3: return Q3;
        case Gen::q1: return q1;
        case Gen::q2: return q2;
        case Gen::q3: return q3;
    }
    return 0;
}

std::array<double, 3> ReducedState::casimirs() const {
    CMat3 b = to_matrix();
    CMat3 b2 = matmul(b, b);
    return {trace(b).real(), trace(b2).real(), trace(matmul(b2, b)).real()};
}

cplx reduced_matrix_bracket(const CMat3& b, double l3, int a, int bb, int c, int d) {
    if (l3 == 0.0) throw ZeroAngularMomentum("reduced bracket undefined at L3 = 0");
    const cplx mi(0.0, -1.0);
    cplx lin = mi * ((bb == c ? b[a][d] : cplx(0)) - (a == d ? b[c][bb] : cplx(0)));
    cplx corr = 0;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            double g1 = cartan::gamma_kl(a, c, k, l);
            double g2 = cartan::gamma_kl(bb, c, k, l);
            double g3 = cartan::gamma_kl(a, d, k, l);
            double g4 = cartan::gamma_kl(bb, d, k, l);
            if (g1 != 0) corr += g1 * b[k][bb] * b[l][d];
            if (g2 != 0) corr += g2 * b[a][k] * b[l][d];
            if (g3 != 0) corr += g3 * b[k][bb] * b[c][l];
            if (g4 != 0) corr += g4 * b[a][k] * b[c][l];
        }
    return lin + corr / l3;
}

namespace {

struct Term {
    int i, j;
    cplx coef;
};

// Generator decompositions into matrix elements B_ij.
const std::vector<Term>& gen_terms(Gen g) {
    static const std::vector<Term> tl3 = {{0, 1, cplx(0, -1)}, {1, 0, cplx(0, 1)}};
    static const std::vector<Term> tq1 = {{0, 0, 1.0}};
    static const std::vector<Term> tq2 = {{1, 1, 1.0}};
    static const std::vector<Term> tq3 = {{2, 2, 1.0}};
    static const std::vector<Term> ts1 = {{1, 2, 0.5}, {2, 1, 0.5}};
    static const std::vector<Term> ts2 = {{0, 2, 0.5}, {2, 0, 0.5}};
    static const std::vector<Term> ts3 = {{0, 1, 0.5}, {1, 0, 0.5}};
    switch (g) {
        case Gen::L3: return tl3;
        case Gen::Q1: return tq1;
        case Gen::Q2: return tq2;
        case Gen::Q3: return tq3;
        case Gen::q1: return ts1;
        case Gen::q2: return ts2;
        case Gen::q3: return ts3;
    }
    return tq1;
}

} // namespace

double reduced_bracket_oracle(const ReducedState& s, Gen f, Gen g) {
    CMat3 b = s.to_matrix();
    cplx acc = 0;
    for (const Term& tf : gen_terms(f))
        for (const Term& tg : gen_terms(g))
            acc += tf.coef * tg.coef *
                   reduced_matrix_bracket(b, s.L3, tf.i, tf.j, tg.i, tg.j);
    return acc.real();
}

double reduced_bracket_table(const ReducedState& s, double G, Gen f, Gen g) {
    if (s.L3 == 0.0) throw ZeroAngularMomentum("reduced bracket undefined at L3 = 0");
    int fi = static_cast<int>(f), gi = static_cast<int>(g);
    if (fi == gi) return 0.0;
    if (fi > gi) return -reduced_bracket_table(s, G, g, f);

    const double L = s.L3, Q1 = s.Q1, Q2 = s.Q2, Q3 = s.Q3;
    const double q1 = s.q1, q2 = s.q2, q3 = s.q3;
    const double gl = G * L * L / 4.0;

    switch (fi * 8 + gi) { // fi < gi, compact pair key
        // --- {L3, x} rows (stored as -(x,L3) of the derived table) ---
        case 0 * 8 + 1: return 2.0 * q3;          // {L3,Q1} = -{Q1,L3}
        case 0 * 8 + 2: return -2.0 * q3;         // {L3,Q2}
        case 0 * 8 + 3: return 0.0;               // {L3,Q3}
        case 0 * 8 + 4: return -q2;               // {L3,q1}
        case 0 * 8 + 5: return q1;                // {L3,q2}
        case 0 * 8 + 6: return -(Q1 - Q2);        // {L3,q3}
        // --- quadrupole diagonal pairs ---
        case 1 * 8 + 2: return -4.0 * q1 * q2 / L; // {Q1,Q2}
        case 1 * 8 + 3: return 4.0 * q1 * q2 / L;  // {Q1,Q3}
        case 2 * 8 + 3: return -4.0 * q1 * q2 / L; // {Q2,Q3}
        // --- {Q_i, q_j} block ---
        case 1 * 8 + 4: return 2.0 / L * q2 * (Q2 - Q3);          // {Q1,q1}
        case 1 * 8 + 5: return 2.0 / L * q2 * q3;                 // {Q1,q2}
        case 1 * 8 + 6: return 2.0 / L * (gl - q2 * q2);          // {Q1,q3}
        case 2 * 8 + 4: return -2.0 / L * q1 * q3;                // {Q2,q1}
        case 2 * 8 + 5: return 2.0 / L * q1 * (Q3 - Q1);          // {Q2,q2}
        case 2 * 8 + 6: return 2.0 / L * (q1 * q1 - gl);          // {Q2,q3}
        case 3 * 8 + 4: return 2.0 / L * (q1 * q3 + (Q3 - Q2) * q2); // {Q3,q1}
        case 3 * 8 + 5: return -2.0 / L * (q2 * q3 + (Q3 - Q1) * q1); // {Q3,q2}
        case 3 * 8 + 6: return 2.0 / L * (q2 * q2 - q1 * q1);     // {Q3,q3}
        // --- off-diagonal pairs ---
        case 4 * 8 + 5: // {q1,q2}
            return ((Q1 - Q3) * (Q2 - Q3) - q3 * q3 - gl) / L;
        case 4 * 8 + 6: // {q1,q3}
            return (q2 * q3 + q1 * (Q3 - Q2)) / L;
        case 5 * 8 + 6: // {q2,q3}
            return -(q1 * q3 + q2 * (Q3 - Q1)) / L;
    }
    return 0.0;
}

} // namespace orbita::algebra
