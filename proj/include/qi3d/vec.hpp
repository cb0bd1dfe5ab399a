#pragma once

#include <array>
#include <cmath>

namespace qi3d {

/// 3-vector with value semantics; used for positions, momenta and gradients.
struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i)       { return (&x)[i]; }
    double  operator[](int i) const { return (&x)[i]; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s)      { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a)      { return a *= s; }
inline Vec3 operator*(Vec3 a, double s)      { return a *= s; }
inline Vec3 operator/(Vec3 a, double s)      { return a *= (1.0 / s); }
inline Vec3 operator-(const Vec3& a)         { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a)  { return std::sqrt(norm2(a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

/// 4-vector for points of the ambient space of S^3.
struct Vec4 {
    double v[4] = {0, 0, 0, 0};
    double& operator[](int i)       { return v[i]; }
    double  operator[](int i) const { return v[i]; }
};

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

/// Dense 3x3 matrix, row-major.
struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    double* operator[](int i)             { return m[i]; }
    const double* operator[](int i) const { return m[i]; }

    static Mat3 identity() {
        Mat3 r;
        r[0][0] = r[1][1] = r[2][2] = 1;
        return r;
    }
    static Mat3 diagonal(double a, double b, double c) {
        Mat3 r;
        r[0][0] = a; r[1][1] = b; r[2][2] = c;
        return r;
    }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) r[i][j] = a[i][j] + b[i][j];
    return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) r[i][j] = a[i][j] - b[i][j];
    return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) r[i][j] = s * a[i][j];
    return r;
}
inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
}
inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            double s = 0;
            for (int k = 0; k < 3; k++) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}
inline Mat3 outer(const Vec3& u, const Vec3& v) {
    Mat3 r;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) r[i][j] = u[i] * v[j];
    return r;
}
/// p . M . p for symmetric M
inline double quad_form(const Mat3& a, const Vec3& p) { return dot(p, a * p); }

inline double frobenius_norm(const Mat3& a) {
    double s = 0;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

/// Eigen-decomposition of a symmetric 3x3 matrix.
/// Eigenvalues sorted descending; eigenvectors orthonormal.
/// `degenerate` is set when two eigenvalues coincide within tol*||A||.
struct SymEigen3 {
    std::array<double, 3> values;
    std::array<Vec3, 3> vectors;
    bool degenerate = false;
};

SymEigen3 sym_eigen3(const Mat3& a, double degeneracy_tol = 1e-12);

}  // namespace qi3d
