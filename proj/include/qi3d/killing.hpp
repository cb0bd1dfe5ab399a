#pragma once

#include "qi3d/coords.hpp"
#include "qi3d/vec.hpp"

namespace qi3d {
namespace killing {

/// Coefficients of the general axially symmetric quadratic kinetic form
/// (axis = z): L1^2 + L2^2 + alpha p3^2 + beta (p1 L2 - p2 L1) + gamma p3 L3,
/// plus Casimir admixtures c1 p^2 and c2 p.L.
struct QuadraticFormParams {
    double alpha = 0, beta = 0, gamma = 0;
    double c1 = 0, c2 = 0;
};

/// Position-dependent tensor of the axial constant of motion:
///   g^{ik} = delta^{ik} (x.n)^2 - (x.n)(x_i n_k + x_k n_i) + (x^2 - a^2) n_i n_k
Mat3 axial_killing(const Vec3& x, const coords::AxialConfig& cfg);

double axial_quadratic_form(const Vec3& x, const Vec3& p, const QuadraticFormParams& params);

/// Tensor of H1 in the ellipsoidal setting:
///   p.g1.p = L^2 - p1^2 (b^2+c^2) - p2^2 (a^2+c^2) - p3^2 (a^2+b^2)
Mat3 ellipsoidal_g1(const Vec3& x, const coords::EllipsoidalConfig& cfg);

/// Tensor of H2:
///   p.g2.p = -(L1^2 a^2 + L2^2 b^2 + L3^2 c^2) + p1^2 b^2 c^2 + p2^2 a^2 c^2 + p3^2 a^2 b^2
Mat3 ellipsoidal_g2(const Vec3& x, const coords::EllipsoidalConfig& cfg);

/// Axial Killing tensor on S^3 in the stereographic chart (axis n, constant a)
/// and its rescaled companion G = g / (x^2 + chi^2)^2.
struct S3Killing {
    Mat3 g;
    Mat3 G;
};

S3Killing s3_killing(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n, double a);

/// Coefficients of the quadratic z^2 - P z - Q = 0 satisfied by the two
/// nontrivial eigenvalues mu_pm of G; the third eigenvalue is mu3 = Q/alpha^2
/// with alpha = a/(2 chi).
struct S3EigenCoeffs {
    double P, Q;
    Vec3 gradP, gradQ;
};

S3EigenCoeffs s3_eigen_coeffs(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n,
                              double a);

/// mu_plus >= mu_minus and their gradients; throws DegenerateError where the
/// two roots collide (x.n = 0 together with P = 0).
struct S3Mu {
    double mu_plus, mu_minus;
    Vec3 grad_mu_plus, grad_mu_minus;
};

S3Mu s3_mu(const Vec3& x, const coords::SphereConfig& cfg, const Vec3& n, double a);

/// Eigen-decomposition wrapper for Killing tensors; values sorted descending,
/// degenerate flag set (not fatal) when two eigenvalues coincide.
SymEigen3 killing_eigen(const Mat3& g);

}  // namespace killing
}  // namespace qi3d
