#include "orbita/u3.hpp"

#include <cmath>
#include <stdexcept>

#include "orbita/errors.hpp"

namespace orbita::algebra {

namespace {

inline double eps3(int a, int b, int c) {
    return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
}

CMat3 unit_matrix(int a, int b) {
    CMat3 e;
    e[a][b] = 1.0;
    return e;
}

std::array<CMat3, kBasisSize> build_basis() {
    std::array<CMat3, kBasisSize> z;
    const cplx mi(0.0, -1.0);
    for (int a = 0; a < 3; ++a) {
        CMat3 la;
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                double e = eps3(a, b, c);
                if (e != 0) la[b][c] += mi * e;
            }
        z[a] = la;
    }
    const int qpairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 0}};
    for (int k = 0; k < 6; ++k) {
        int a = qpairs[k][0], b = qpairs[k][1];
        CMat3 q = unit_matrix(a, b) + unit_matrix(b, a);
        z[3 + k] = q * cplx(0.5, 0.0);
    }
    return z;
}

const std::array<CMat3, kBasisSize>& basis() {
    static const std::array<CMat3, kBasisSize> b = build_basis();
    return b;
}

const char* kNames[kBasisSize] = {"Lx", "Ly", "Lz", "Qxx", "Qyy",
                                  "Qzz", "Qxy", "Qyz", "Qzx"};

} // namespace

U3Element::U3Element(const CMat3& m) : a(m) {
    if (hermiticity_defect(m) > 1e-12 * (1.0 + std::abs(trace(m))))
        throw Error("U3Element: matrix is not Hermitian");
}

Vec3 U3Element::angular_momentum() const {
    Vec3 l;
    for (int i = 0; i < 3; ++i) {
        cplx s = 0;
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                double e = eps3(i, b, c);
                if (e != 0) s += cplx(0.0, -1.0) * e * a[b][c];
            }
        l[i] = s.real();
    }
    return l;
}

Mat3 U3Element::quadrupole() const {
    Mat3 q;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i][j] = 0.5 * (a[i][j] + a[j][i]).real();
    return q;
}

std::array<double, 3> U3Element::casimirs() const {
    CMat3 a2 = matmul(a, a);
    CMat3 a3 = matmul(a2, a);
    return {trace(a).real(), trace(a2).real(), trace(a3).real()};
}

const CMat3& basis_matrix(int mu) { return basis().at(static_cast<size_t>(mu)); }

bool basis_is_quadrupole(int mu) { return mu >= 3; }

const char* basis_name(int mu) { return kNames[mu]; }

double basis_metric(int mu, int nu) {
    return trace(matmul(basis_matrix(mu), basis_matrix(nu))).real();
}

cplx full_bracket(const U3Element& A, int mu, int nu, double G) {
    CMat3 comm = commutator(basis_matrix(mu), basis_matrix(nu));
    cplx v = cplx(0.0, -1.0) * trace(matmul(A.a, transpose(comm)));
    if (basis_is_quadrupole(mu) && basis_is_quadrupole(nu)) v *= G;
    return v;
}

U3Element u3_from_particles(const std::vector<Vec3>& positions,
                            const std::vector<Vec3>& momenta,
                            const std::vector<double>& masses, double omega) {
    size_t n = positions.size();
    if (n == 0 || momenta.size() != n || masses.size() != n)
        throw std::invalid_argument("u3_from_particles: inconsistent input sizes");
    if (omega <= 0) throw std::invalid_argument("u3_from_particles: omega must be > 0");

    double mass_total = 0;
    Vec3 pos_com{}, mom_total{};
    for (size_t k = 0; k < n; ++k) {
        if (masses[k] <= 0)
            throw std::invalid_argument("u3_from_particles: masses must be > 0");
        mass_total += masses[k];
        pos_com = pos_com + positions[k] * masses[k];
        mom_total = mom_total + momenta[k];
    }
    pos_com = pos_com / mass_total;

    CMat3 a;
    auto accumulate = [&a](const Vec3& p, const Vec3& x, double kap, double sign) {
        // (2 kap)^-1 (p_a + i kap x_a)(p_b - i kap x_b)
        cplx va[3], vb[3];
        for (int i = 0; i < 3; ++i) {
            va[i] = cplx(p[i], kap * x[i]);
            vb[i] = cplx(p[i], -kap * x[i]);
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] += sign * va[i] * vb[j] / (2.0 * kap);
    };
    for (size_t k = 0; k < n; ++k) accumulate(momenta[k], positions[k], omega * masses[k], 1.0);
    // The subtraction uses the total oscillator strength so that the result
    // is exactly the moment matrix of the relative motion.
    accumulate(mom_total, pos_com, omega * mass_total, -1.0);
    return U3Element(a);
}

} // namespace orbita::algebra
