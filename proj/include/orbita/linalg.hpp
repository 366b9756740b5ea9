#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace orbita {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// 3x3 real matrix, row major.
struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }
    double* operator[](int i) { return m[i]; }
    const double* operator[](int i) const { return m[i]; }
};

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline Vec3 matvec(const Mat3& a, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v.x + a[i][1] * v.y + a[i][2] * v.z;
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

inline double det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a[i][j] - b[i][j]));
    return r;
}

/// 3x3 complex matrix, row major.
struct CMat3 {
    cplx m[3][3];

    CMat3() {
        for (auto& row : m)
            for (auto& e : row) e = 0.0;
    }
    cplx* operator[](int i) { return m[i]; }
    const cplx* operator[](int i) const { return m[i]; }

    CMat3 operator+(const CMat3& o) const {
        CMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] + o[i][j];
        return r;
    }
    CMat3 operator-(const CMat3& o) const {
        CMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] - o[i][j];
        return r;
    }
    CMat3 operator*(const cplx& s) const {
        CMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] * s;
        return r;
    }
};

inline CMat3 matmul(const CMat3& a, const CMat3& b) {
    CMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline CMat3 commutator(const CMat3& a, const CMat3& b) {
    return matmul(a, b) - matmul(b, a);
}

inline CMat3 transpose(const CMat3& a) {
    CMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

inline CMat3 adjoint(const CMat3& a) {
    CMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = std::conj(a[j][i]);
    return r;
}

inline cplx trace(const CMat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

inline double hermiticity_defect(const CMat3& a) {
    double r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a[i][j] - std::conj(a[j][i])));
    return r;
}

/// Congruence B = M^T A M with a real matrix M.
inline CMat3 congruence(const Mat3& mt, const CMat3& a) {
    CMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cplx s = 0;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) s += mt[p][i] * a[p][q] * mt[q][j];
            r[i][j] = s;
        }
    return r;
}

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations,
/// returned in descending order.
std::array<double, 3> jacobi_eigenvalues_sym3(const Mat3& a);

/// Eigen decomposition of a symmetric 3x3 matrix: descending eigenvalues and
/// the matrix of column eigenvectors.
void jacobi_eigensystem_sym3(const Mat3& a, std::array<double, 3>& values,
                             Mat3& vectors);

/// Real roots of the monic cubic x^3 - e1 x^2 + e2 x - e3, assuming three
/// real roots (discriminant may be slightly negative from roundoff, in which
/// case the nearly-degenerate pair collapses).  Root isolation uses the
/// critical points of the cubic followed by bisection, so the routine is
/// independent of any trigonometric closed form.  Descending order.
std::array<double, 3> cubic_roots_bisect(double e1, double e2, double e3);

} // namespace orbita
