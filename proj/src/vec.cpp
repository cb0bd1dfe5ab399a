#include "qi3d/vec.hpp"

#include <algorithm>
#include <cmath>

namespace qi3d {

namespace {

// One cyclic-Jacobi sweep pass; returns accumulated rotations in v.
void jacobi3(const Mat3& a_in, double w[3], Mat3& v) {
    Mat3 a = a_in;
    v = Mat3::identity();
    const double scale = frobenius_norm(a) + 1e-300;
    for (int sweep = 0; sweep < 50; sweep++) {
        double off = std::sqrt(a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
        if (off <= 1e-15 * scale)
            break;
        static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (auto& pr : pairs) {
            int p = pr[0], q = pr[1];
            if (std::abs(a[p][q]) <= 1e-300)
                continue;
            double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
            double t = (theta >= 0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1));
            double c = 1 / std::sqrt(t * t + 1), s = t * c;
            Mat3 r = Mat3::identity();
            r[p][p] = c; r[q][q] = c; r[p][q] = s; r[q][p] = -s;
            // a <- r^T a r ;  v <- v r
            Mat3 rt;
            for (int i = 0; i < 3; i++)
                for (int j = 0; j < 3; j++) rt[i][j] = r[j][i];
            a = rt * (a * r);
            v = v * r;
        }
    }
    for (int i = 0; i < 3; i++) w[i] = a[i][i];
}

}  // namespace

SymEigen3 sym_eigen3(const Mat3& a, double degeneracy_tol) {
    SymEigen3 out;
    const double scale = frobenius_norm(a);

    // Closed-form eigenvalues (trigonometric solution of the characteristic cubic).
    double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    double w[3];
    Mat3 v = Mat3::identity();
    bool need_jacobi = false;

    if (p1 <= 1e-30 * scale * scale) {
        w[0] = a[0][0]; w[1] = a[1][1]; w[2] = a[2][2];
    } else {
        double q = (a[0][0] + a[1][1] + a[2][2]) / 3;
        double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2 * p1;
        double p = std::sqrt(p2 / 6);
        Mat3 b = (1 / p) * (a - Mat3::diagonal(q, q, q));
        double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                      b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                      b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
        double r = std::clamp(detb / 2, -1.0, 1.0);
        double phi = std::acos(r) / 3;
        w[0] = q + 2 * p * std::cos(phi);
        w[2] = q + 2 * p * std::cos(phi + 2 * M_PI / 3);
        w[1] = 3 * q - w[0] - w[2];

        // Eigenvectors by row cross products of (A - w I); near-degenerate
        // eigenvalues make these unreliable, so track the residual.
        for (int k = 0; k < 3; k++) {
            Mat3 m = a - Mat3::diagonal(w[k], w[k], w[k]);
            Vec3 r0{m[0][0], m[0][1], m[0][2]};
            Vec3 r1{m[1][0], m[1][1], m[1][2]};
            Vec3 r2{m[2][0], m[2][1], m[2][2]};
            Vec3 c01 = cross(r0, r1), c02 = cross(r0, r2), c12 = cross(r1, r2);
            Vec3 best = c01;
            if (norm2(c02) > norm2(best)) best = c02;
            if (norm2(c12) > norm2(best)) best = c12;
            if (norm2(best) <= 1e-24 * scale * scale * scale * scale) {
                need_jacobi = true;
                break;
            }
            best = normalized(best);
            if (norm(a * best - w[k] * best) > 1e-10 * std::max(scale, 1e-30)) {
                need_jacobi = true;
                break;
            }
            for (int i = 0; i < 3; i++) v[i][k] = best[i];
        }
    }

    if (need_jacobi || p1 <= 1e-30 * scale * scale)
        jacobi3(a, w, v);

    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int i, int j) { return w[i] > w[j]; });
    for (int k = 0; k < 3; k++) {
        out.values[k] = w[order[k]];
        out.vectors[k] = Vec3{v[0][order[k]], v[1][order[k]], v[2][order[k]]};
    }
    double gap_scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2]), 1e-300});
    out.degenerate = std::abs(out.values[0] - out.values[1]) <= degeneracy_tol * gap_scale ||
                     std::abs(out.values[1] - out.values[2]) <= degeneracy_tol * gap_scale;
    return out;
}

}  // namespace qi3d
