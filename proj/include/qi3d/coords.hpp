#pragma once

#include <array>

#include "qi3d/errors.hpp"
#include "qi3d/vec.hpp"

namespace qi3d {
namespace coords {

/* ---------------- axial-symmetric setting in E^3 ---------------- */

/// Geometry of an axially symmetric system: unit symmetry axis n,
/// positive constant a of the quadratic invariant, particle mass m.
struct AxialConfig {
    Vec3 n{0, 0, 1};
    double a = 1;
    double m = 1;

    void validate() const;
    /// deterministic orthonormal frame (e1, e2, n); azimuth is measured from e1
    std::array<Vec3, 2> transverse_frame() const;
};

/// Eigenvalue coordinates of the axial Killing tensor plus azimuth.
/// lambda_plus >= 0,  -a^2 <= lambda_minus <= 0.
struct OblateCoords {
    double lambda_plus = 0;
    double lambda_minus = 0;
    double phi = 0;
    bool phi_defined = true;  // false on the symmetry axis
};

OblateCoords oblate_from_cartesian(const Vec3& x, const AxialConfig& cfg);

/// Inverse map; meridian_sign (+1/-1) selects the half-space x.n >= 0 / <= 0.
Vec3 cartesian_from_oblate(const OblateCoords& c, const AxialConfig& cfg, int meridian_sign);

/// Gradients of the scalar coordinate maps at x.
/// Eigenvalue pairing of the axial Killing tensor:
///   g . grad_lambda_minus = lambda_plus * grad_lambda_minus
///   g . grad_lambda_plus  = lambda_minus * grad_lambda_plus
///   g . grad_phi          = (x.n)^2 * grad_phi
struct OblateBasis {
    Vec3 grad_lambda_plus;
    Vec3 grad_lambda_minus;
    Vec3 grad_phi;
};

OblateBasis oblate_basis(const Vec3& x, const AxialConfig& cfg);

/* ---------------- general ellipsoidal coordinates in E^3 ---------------- */

/// Semi-axis parameters a > b > c > 0 of the confocal family, plus mass.
struct EllipsoidalConfig {
    double a = 3, b = 2, c = 1;
    double m = 1;
    void validate() const;
};

/// Labels of the three confocal quadrics through a point:
/// -a^2 < nu < -b^2 < mu < -c^2 < lambda.
struct EllipsoidalCoords {
    double lambda = 0, mu = 0, nu = 0;
};

EllipsoidalCoords ellipsoidal_from_cartesian(const Vec3& x, const EllipsoidalConfig& cfg);

/// (x^2, y^2, z^2); octant signs are the caller's choice.
std::array<double, 3> cartesian_squares_from_ellipsoidal(const EllipsoidalCoords& c,
                                                         const EllipsoidalConfig& cfg);

struct EllipsoidalBasis {
    Vec3 e_lambda, e_mu, e_nu;  // gradients of lambda, mu, nu
};

EllipsoidalBasis ellipsoidal_basis(const Vec3& x, const EllipsoidalConfig& cfg);

/* ---------------- stereographic chart on S^3 ---------------- */

/// chi: stereographic scale (chi=2 projects onto the plane tangent at the
/// south pole); m: mass; k: Kepler coupling.
struct SphereConfig {
    double chi = 2;
    double m = 1;
    double k = 1;
    void validate() const;
};

struct AmbientPoint {
    Vec4 X;
};

AmbientPoint stereographic_embed(const Vec3& x, const SphereConfig& cfg);
Vec3 stereographic_project(const AmbientPoint& p, const SphereConfig& cfg);

}  // namespace coords
}  // namespace qi3d
