#pragma once

#include <array>

#include "orbita/linalg.hpp"
#include "orbita/u3.hpp"

namespace orbita::algebra {

/// Generators of the seven-dimensional reduced algebra.
enum class Gen { L3 = 0, Q1, Q2, Q3, q1, q2, q3 };
constexpr int kGenCount = 7;
const char* gen_name(Gen g);

/// A point of the reduced dual space: the values of the seven generators.
struct ReducedState {
    double L3;
    double Q1, Q2, Q3;
    double q1, q2, q3;

    /// The Hermitian matrix built from the generator values.
    CMat3 to_matrix() const;
    /// From a matrix in the rotated frame (L1 = L2 = 0 assumed).
    static ReducedState from_matrix(const CMat3& b);

    double value(Gen g) const;
    std::array<double, 3> casimirs() const;

    double q_plus() const { return 0.5 * (Q1 + Q2); }
    double q_minus() const { return 0.5 * (Q1 - Q2); }
    double qbar1() const { return (Q1 - Q2) / std::sqrt(2.0); }
    double qbar2() const { return (2.0 * Q3 - Q1 - Q2) / std::sqrt(6.0); }
    double r_squared() const { return q1 * q1 + q2 * q2; }
};

/// Authoritative reduced bracket: bilinear extension of the matrix-element
/// bracket with the 1/L3 structure kernel.  Throws ZeroAngularMomentum when
/// L3 = 0.
double reduced_bracket_oracle(const ReducedState& s, Gen f, Gen g);

/// Closed-form bracket table, derived entry by entry from the same matrix
/// bracket (the tests assert exact agreement with the oracle at G = 1).
/// G interpolates to the semidirect limit; only G = 0 and G = 1 carry the
/// Jacobi identity.
double reduced_bracket_table(const ReducedState& s, double G, Gen f, Gen g);

/// Matrix-element bracket {B_ab, B_cd} (0-based indices).
cplx reduced_matrix_bracket(const CMat3& b, double l3, int a, int bb, int c, int d);

} // namespace orbita::algebra
