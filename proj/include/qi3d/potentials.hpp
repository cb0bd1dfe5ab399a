#pragma once

#include <array>

#include "qi3d/coords.hpp"
#include "qi3d/profile.hpp"
#include "qi3d/vec.hpp"

namespace qi3d {
namespace potentials {

/// Potential pair of an axially symmetric integrable system:
/// U enters H, Phi enters H1.
struct PotentialPair {
    double U = 0, Phi = 0;
};

/// Values plus partial derivatives with respect to the two eigenvalue
/// coordinates; the Phi partials follow the defining gradient relation
///   dPhi/dl+ = l- dU/dl+,  dPhi/dl- = l+ dU/dl-.
struct PotentialPairPartials {
    double U = 0, Phi = 0;
    double dU_dplus = 0, dU_dminus = 0;
    double dPhi_dplus = 0, dPhi_dminus = 0;
};

/// U = (f(l+) - g(l-)) / (l+ - l-),
/// Phi = (l- f(l+) - l+ g(l-)) / (l+ - l-).
PotentialPair axial_potentials(const coords::OblateCoords& c, const Profile& f,
                               const Profile& g);

PotentialPairPartials axial_potential_partials(double lambda_plus, double lambda_minus,
                                               const Profile& f, const Profile& g);

/// Same fraction structure on S^3 with the eigenvalues mu_pm of G.
PotentialPair s3_axial_potentials(double mu_plus, double mu_minus, const Profile& f,
                                  const Profile& g);

PotentialPairPartials s3_axial_potential_partials(double mu_plus, double mu_minus,
                                                  const Profile& f, const Profile& g);

/// The ellipsoidal potential triple (U, U1, U2) built from profiles
/// l(lambda), m(mu), n(nu) via the symmetric-fraction formulas.
struct EllipsoidalPotentials {
    double U = 0, U1 = 0, U2 = 0;
};

/// Partials with respect to (lambda, mu, nu) for force assembly.
struct EllipsoidalPotentialPartials {
    EllipsoidalPotentials values;
    std::array<double, 3> dU, dU1, dU2;  // index order: lambda, mu, nu
};

EllipsoidalPotentials ellipsoidal_potentials(const coords::EllipsoidalCoords& c,
                                             const Profile& l, const Profile& m,
                                             const Profile& n);

EllipsoidalPotentialPartials ellipsoidal_potential_partials(const coords::EllipsoidalCoords& c,
                                                            const Profile& l, const Profile& m,
                                                            const Profile& n);

/// Kepler potential on S^3 with center at the south pole:
///   V(x) = k (x^2 - chi^2) / (2 chi |x|)  =  -k / tan(r).
double kepler_s3_potential(const Vec3& x, const coords::SphereConfig& cfg);
Vec3 kepler_s3_potential_gradient(const Vec3& x, const coords::SphereConfig& cfg);

}  // namespace potentials
}  // namespace qi3d
