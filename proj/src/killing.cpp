#include "qi3d/killing.hpp"

#include <cmath>

#include "qi3d/errors.hpp"

namespace qi3d {
namespace killing {

Mat3 axial_killing(const Vec3& x, const coords::AxialConfig& cfg) {
    const double zeta = dot(x, cfg.n);
    const double x2 = norm2(x);
    const double a2 = cfg.a * cfg.a;
    Mat3 g = zeta * zeta * Mat3::identity() - zeta * (outer(x, cfg.n) + outer(cfg.n, x)) +
             (x2 - a2) * outer(cfg.n, cfg.n);
    return g;
}

double axial_quadratic_form(const Vec3& x, const Vec3& p, const QuadraticFormParams& prm) {
    const Vec3 L = cross(x, p);
    return L.x * L.x + L.y * L.y + prm.alpha * p.z * p.z + prm.beta * (p.x * L.y - p.y * L.x) +
           prm.gamma * p.z * L.z + prm.c1 * norm2(p) + prm.c2 * dot(p, L);
}

Mat3 ellipsoidal_g1(const Vec3& x, const coords::EllipsoidalConfig& cfg) {
    const double a2 = cfg.a * cfg.a, b2 = cfg.b * cfg.b, c2 = cfg.c * cfg.c;
    // L^2 = p.(x^2 I - x x).p, so the matrix is x^2 I - x x - diag of pair sums
    return norm2(x) * Mat3::identity() - outer(x, x) -
           Mat3::diagonal(b2 + c2, a2 + c2, a2 + b2);
}

Mat3 ellipsoidal_g2(const Vec3& x, const coords::EllipsoidalConfig& cfg) {
    const double a2 = cfg.a * cfg.a, b2 = cfg.b * cfg.b, c2 = cfg.c * cfg.c;
    // matrix of L_i^2 as a quadratic form in p: (L_i^2)_{km} = eps_ijk eps_ilm x_j x_l
    Mat3 g;
    const double xx = x.x * x.x, yy = x.y * x.y, zz = x.z * x.z;
    g[0][0] = -(b2 * zz + c2 * yy) + b2 * c2;
    g[1][1] = -(a2 * zz + c2 * xx) + a2 * c2;
    g[2][2] = -(a2 * yy + b2 * xx) + a2 * b2;
    g[0][1] = g[1][0] = c2 * x.x * x.y;
    g[0][2] = g[2][0] = b2 * x.x * x.z;
    g[1][2] = g[2][1] = a2 * x.y * x.z;
    return g;
}

S3Killing s3_killing(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n, double a) {
    const double chi = cfg.chi, chi2 = chi * chi;
    const double zeta = dot(x, n);
    const double x2 = norm2(x);
    const Vec3 w = 2 * zeta * x - (x2 - chi2) * n;  // 2 chi K-direction at fixed p

    S3Killing out;
    out.g = zeta * zeta * Mat3::identity() - zeta * (outer(x, n) + outer(n, x)) +
            x2 * outer(n, n) - (a * a / (4 * chi2)) * outer(w, w);
    const double d = x2 + chi2;
    out.G = (1.0 / (d * d)) * out.g;
    return out;
}

S3EigenCoeffs s3_eigen_coeffs(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n,
                              double a) {
    const double chi = cfg.chi, chi2 = chi * chi;
    const double alpha2 = a * a / (4 * chi2);
    const double zeta = dot(x, n);
    const double x2 = norm2(x);
    const double d = x2 + chi2, D = d * d;
    const Vec3 gradD = 4 * d * x;

    const double W = (x2 - chi2) * (x2 - chi2) + 4 * chi2 * zeta * zeta;
    const Vec3 gradW = 4 * (x2 - chi2) * x + 8 * chi2 * zeta * n;

    S3EigenCoeffs out;
    out.P = (x2 - alpha2 * W) / D;
    out.Q = alpha2 * zeta * zeta / D;
    out.gradP = (1.0 / D) * (2 * x - alpha2 * gradW - out.P * gradD);
    out.gradQ = (1.0 / D) * (2 * alpha2 * zeta * n - out.Q * gradD);
    return out;
}

S3Mu s3_mu(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n, double a) {
    S3EigenCoeffs c = s3_eigen_coeffs(x, cfg, n, a);
    const double disc2 = 0.25 * c.P * c.P + c.Q;
    if (disc2 < 0)
        throw DegenerateError("s3_mu: negative discriminant");
    const double disc = std::sqrt(disc2);
    const double scale = std::abs(c.P) + std::sqrt(std::abs(c.Q)) + 1e-300;
    if (disc < 1e-14 * scale)
        throw DegenerateError("s3_mu: coincident eigenvalues");

    S3Mu out;
    out.mu_plus = 0.5 * c.P + disc;
    out.mu_minus = 0.5 * c.P - disc;
    const Vec3 gradDisc = (1.0 / (2 * disc)) * (0.5 * c.P * c.gradP + c.gradQ);
    out.grad_mu_plus = 0.5 * c.gradP + gradDisc;
    out.grad_mu_minus = 0.5 * c.gradP - gradDisc;
    return out;
}

SymEigen3 killing_eigen(const Mat3& g) { return sym_eigen3(g, 1e-12); }

}  // namespace killing
}  // namespace qi3d
