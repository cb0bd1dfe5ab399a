#include "qi3d/coords.hpp"

#include <algorithm>
#include <cmath>

namespace qi3d {
namespace coords {

namespace {

// relative tolerance for detecting singular sets (focal circle, axis,
// coordinate planes); scaled by the square of the geometry length scale
const double SINGULAR_EPS = 1e-10;

double sqr(double v) { return v * v; }

}  // namespace

/* ---------------- axial ---------------- */

void AxialConfig::validate() const {
    if (std::abs(norm(n) - 1) > 1e-14)
        throw RangeError("AxialConfig: |n| must be 1");
    if (!(a > 0) || !(m > 0))
        throw RangeError("AxialConfig: a and m must be positive");
}

std::array<Vec3, 2> AxialConfig::transverse_frame() const {
    // start from the coordinate axis least aligned with n
    Vec3 seed{1, 0, 0};
    double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    if (ay <= ax && ay <= az) seed = {0, 1, 0};
    else if (az <= ax && az <= ay) seed = {0, 0, 1};
    Vec3 e1 = normalized(seed - dot(seed, n) * n);
    Vec3 e2 = cross(n, e1);
    return {e1, e2};
}

OblateCoords oblate_from_cartesian(const Vec3& x, const AxialConfig& cfg) {
    const double a2 = cfg.a * cfg.a;
    const double zeta = dot(x, cfg.n);
    const double x2 = norm2(x);
    const double scale2 = std::max(a2, x2);

    if (sqr(zeta) < SINGULAR_EPS * scale2 && std::abs(x2 - a2) < SINGULAR_EPS * scale2)
        throw FocalSetError("oblate_from_cartesian: point on the focal circle");

    // roots of  l^2 - (x^2-a^2) l - a^2 (x.n)^2 = 0 ;
    // the larger-magnitude root is taken from the formula, the other from the
    // product relation  l+ l- = -a^2 (x.n)^2  to avoid cancellation
    const double s = 0.5 * (x2 - a2);
    const double disc = std::sqrt(s * s + a2 * zeta * zeta);
    OblateCoords out;
    if (s >= 0) {
        out.lambda_plus = s + disc;
        out.lambda_minus = out.lambda_plus > 0 ? -a2 * zeta * zeta / out.lambda_plus : 0.0;
    } else {
        out.lambda_minus = s - disc;
        out.lambda_plus = out.lambda_minus < 0 ? -a2 * zeta * zeta / out.lambda_minus : 0.0;
    }
    out.lambda_minus = std::clamp(out.lambda_minus, -a2, 0.0);
    out.lambda_plus = std::max(out.lambda_plus, 0.0);

    const double rho2 = x2 - zeta * zeta;
    if (rho2 < SINGULAR_EPS * scale2) {
        out.phi_defined = false;
        out.phi = 0;
    } else {
        auto frame = cfg.transverse_frame();
        out.phi = std::atan2(dot(x, frame[1]), dot(x, frame[0]));
        if (out.phi < 0) out.phi += 2 * M_PI;
    }
    return out;
}

Vec3 cartesian_from_oblate(const OblateCoords& c, const AxialConfig& cfg, int meridian_sign) {
    const double a2 = cfg.a * cfg.a;
    if (c.lambda_minus < -a2 * (1 + 1e-12) || c.lambda_minus > a2 * 1e-12)
        throw RangeError("cartesian_from_oblate: lambda_minus outside [-a^2, 0]");
    if (c.lambda_plus < -a2 * 1e-12)
        throw RangeError("cartesian_from_oblate: lambda_plus negative");

    // lambda+ = a^2 sinh^2(alpha), lambda- = -a^2 sin^2(beta) gives
    //   |x.n| = a sinh(alpha) |sin(beta)|,  rho = a cosh(alpha) cos(beta)
    const double lp = std::max(c.lambda_plus, 0.0);
    const double lm = std::clamp(c.lambda_minus, -a2, 0.0);
    const double zeta = double(meridian_sign >= 0 ? 1 : -1) * std::sqrt(-lp * lm) / cfg.a;
    const double rho = std::sqrt((lp + a2) * (lm + a2)) / cfg.a;

    auto frame = cfg.transverse_frame();
    const double phi = c.phi_defined ? c.phi : 0.0;
    return rho * (std::cos(phi) * frame[0] + std::sin(phi) * frame[1]) + zeta * cfg.n;
}

OblateBasis oblate_basis(const Vec3& x, const AxialConfig& cfg) {
    const double a2 = cfg.a * cfg.a;
    const double zeta = dot(x, cfg.n);
    const double x2 = norm2(x);
    const double scale2 = std::max(a2, x2);

    const double s = 0.5 * (x2 - a2);
    const double disc = std::sqrt(s * s + a2 * zeta * zeta);
    if (disc < SINGULAR_EPS * scale2)
        throw FocalSetError("oblate_basis: point on the focal circle");
    const double rho2 = x2 - zeta * zeta;
    if (rho2 < SINGULAR_EPS * scale2)
        throw AxisError("oblate_basis: point on the symmetry axis");

    // grad lambda_pm = x pm (2 s x + 2 a^2 (x.n) n) / (2 disc)
    Vec3 d = (1.0 / disc) * (s * x + a2 * zeta * cfg.n);
    OblateBasis b;
    b.grad_lambda_plus = x + d;
    b.grad_lambda_minus = x - d;
    b.grad_phi = (1.0 / rho2) * cross(cfg.n, x);
    return b;
}

/* ---------------- ellipsoidal ---------------- */

void EllipsoidalConfig::validate() const {
    if (!(a > b && b > c && c > 0))
        throw RangeError("EllipsoidalConfig: requires a > b > c > 0");
    if (!(m > 0))
        throw RangeError("EllipsoidalConfig: m must be positive");
}

namespace {

// P(xi) = x^2 (b^2+xi)(c^2+xi) + y^2 (a^2+xi)(c^2+xi) + z^2 (a^2+xi)(b^2+xi)
//         - (a^2+xi)(b^2+xi)(c^2+xi)
// Same roots as the confocal-quadric condition, but polynomial, so it is
// safe to evaluate at the pole points -a^2, -b^2, -c^2.
double confocal_poly(double xi, const Vec3& x, const EllipsoidalConfig& cfg) {
    const double fa = cfg.a * cfg.a + xi, fb = cfg.b * cfg.b + xi, fc = cfg.c * cfg.c + xi;
    return x.x * x.x * fb * fc + x.y * x.y * fa * fc + x.z * x.z * fa * fb - fa * fb * fc;
}

double confocal_poly_deriv(double xi, const Vec3& x, const EllipsoidalConfig& cfg) {
    const double fa = cfg.a * cfg.a + xi, fb = cfg.b * cfg.b + xi, fc = cfg.c * cfg.c + xi;
    return x.x * x.x * (fb + fc) + x.y * x.y * (fa + fc) + x.z * x.z * (fa + fb) -
           (fa * fb + fa * fc + fb * fc);
}

// Bracketed bisection followed by Newton polishing; the bracket
// [lo, hi] must have opposite signs of P at the ends.
double confocal_root(double lo, double hi, const Vec3& x, const EllipsoidalConfig& cfg) {
    double flo = confocal_poly(lo, x, cfg);
    double a = lo, b = hi;
    for (int it = 0; it < 80; it++) {
        double mid = 0.5 * (a + b);
        double fm = confocal_poly(mid, x, cfg);
        if ((flo <= 0) == (fm <= 0)) {
            a = mid;
            flo = fm;
        } else {
            b = mid;
        }
        if (b - a < 1e-15 * (std::abs(a) + std::abs(b) + 1))
            break;
    }
    double r = 0.5 * (a + b);
    for (int it = 0; it < 4; it++) {
        double f = confocal_poly(r, x, cfg);
        double df = confocal_poly_deriv(r, x, cfg);
        if (df == 0) break;
        double step = f / df;
        double rn = r - step;
        if (rn < lo || rn > hi) break;  // keep the guaranteed bracket
        r = rn;
        if (std::abs(step) < 1e-15 * (std::abs(r) + 1)) break;
    }
    return r;
}

}  // namespace

EllipsoidalCoords ellipsoidal_from_cartesian(const Vec3& x, const EllipsoidalConfig& cfg) {
    const double a2 = cfg.a * cfg.a, b2 = cfg.b * cfg.b, c2 = cfg.c * cfg.c;
    const double scale2 = a2;
    if (sqr(x.x) < SINGULAR_EPS * scale2 || sqr(x.y) < SINGULAR_EPS * scale2 ||
        sqr(x.z) < SINGULAR_EPS * scale2)
        throw CoordinatePlaneError("ellipsoidal_from_cartesian: point on a coordinate plane");

    EllipsoidalCoords out;
    // sign pattern of the cubic: P(-a^2) > 0, P(-b^2) < 0, P(-c^2) > 0, P(inf) < 0
    out.nu = confocal_root(-a2, -b2, x, cfg);
    out.mu = confocal_root(-b2, -c2, x, cfg);
    const double upper = norm2(x) - c2 + 1;  // P(r^2 - c^2) <= 0 already
    out.lambda = confocal_root(-c2, std::max(upper, -c2 + 1.0), x, cfg);
    return out;
}

std::array<double, 3> cartesian_squares_from_ellipsoidal(const EllipsoidalCoords& c,
                                                         const EllipsoidalConfig& cfg) {
    const double a2 = cfg.a * cfg.a, b2 = cfg.b * cfg.b, c2 = cfg.c * cfg.c;
    const double tol = 1e-12 * a2;
    if (!(c.nu > -a2 - tol && c.nu < -b2 + tol && c.mu > -b2 - tol && c.mu < -c2 + tol &&
          c.lambda > -c2 - tol))
        throw RangeError("cartesian_squares_from_ellipsoidal: interval ordering violated");

    double x2 = (c.lambda + a2) * (c.mu + a2) * (c.nu + a2) / ((b2 - a2) * (c2 - a2));
    double y2 = (c.lambda + b2) * (c.mu + b2) * (c.nu + b2) / ((c2 - b2) * (a2 - b2));
    double z2 = (c.lambda + c2) * (c.mu + c2) * (c.nu + c2) / ((a2 - c2) * (b2 - c2));
    return {std::max(x2, 0.0), std::max(y2, 0.0), std::max(z2, 0.0)};
}

EllipsoidalBasis ellipsoidalBasisImpl(const Vec3& x, const EllipsoidalConfig& cfg,
                                      const EllipsoidalCoords& c) {
    // implicit differentiation of  sum_i x_i^2/(s_i^2 + xi) = 1:
    //   d xi / d x_i = 2 x_i / (s_i^2 + xi) / sum_j x_j^2/(s_j^2 + xi)^2
    auto grad = [&](double xi) {
        const double fa = cfg.a * cfg.a + xi, fb = cfg.b * cfg.b + xi, fc = cfg.c * cfg.c + xi;
        const double denom =
            x.x * x.x / (fa * fa) + x.y * x.y / (fb * fb) + x.z * x.z / (fc * fc);
        return Vec3{2 * x.x / (fa * denom), 2 * x.y / (fb * denom), 2 * x.z / (fc * denom)};
    };
    return {grad(c.lambda), grad(c.mu), grad(c.nu)};
}

EllipsoidalBasis ellipsoidal_basis(const Vec3& x, const EllipsoidalConfig& cfg) {
    EllipsoidalCoords c = ellipsoidal_from_cartesian(x, cfg);  // throws off-plane errors
    return ellipsoidalBasisImpl(x, cfg, c);
}

/* ---------------- stereographic ---------------- */

void SphereConfig::validate() const {
    if (chi == 0)
        throw RangeError("SphereConfig: chi must be nonzero");
    if (!(m > 0) || !(k > 0))
        throw RangeError("SphereConfig: m and k must be positive");
}

AmbientPoint stereographic_embed(const Vec3& x, const SphereConfig& cfg) {
    const double chi2 = cfg.chi * cfg.chi;
    const double d = norm2(x) + chi2;
    AmbientPoint p;
    p.X[0] = 2 * cfg.chi * x.x / d;
    p.X[1] = 2 * cfg.chi * x.y / d;
    p.X[2] = 2 * cfg.chi * x.z / d;
    p.X[3] = (norm2(x) - chi2) / d;
    return p;
}

Vec3 stereographic_project(const AmbientPoint& p, const SphereConfig& cfg) {
    const double denom = 1 - p.X[3];
    if (denom < 1e-12)
        throw NorthPoleError("stereographic_project: north pole has no image");
    return {cfg.chi * p.X[0] / denom, cfg.chi * p.X[1] / denom, cfg.chi * p.X[2] / denom};
}

}  // namespace coords
}  // namespace qi3d
