#include "qi3d/potentials.hpp"

#include <cmath>

#include "qi3d/errors.hpp"

namespace qi3d {
namespace potentials {

namespace {

// below this (relative) separation of the eigenvalue pair, the fractions are
// evaluated by midpoint expansion instead of the raw quotient
const double EXPAND_EPS = 1e-8;
const double HARD_EPS = 1e-14;

PotentialPairPartials fraction_pair(double sp, double sm, const Profile& f, const Profile& g) {
    const double scale = std::abs(sp) + std::abs(sm) + 1;
    const double delta = sp - sm;
    if (std::abs(delta) < HARD_EPS * scale)
        throw CoincidenceError("potential fractions: coincident eigenvalue coordinates");

    PotentialPairPartials out;
    double f_plus, g_minus;
    if (std::abs(delta) < EXPAND_EPS * scale) {
        // removable-singularity regime: expand around the midpoint so that
        // matching profiles cancel exactly
        const double mid = 0.5 * (sp + sm);
        const double fm = f.value(mid), gm = g.value(mid);
        const double dfm = f.derivative(mid), dgm = g.derivative(mid);
        out.U = (fm - gm) / delta + 0.5 * (dfm + dgm);
        f_plus = fm + 0.5 * delta * dfm;
        g_minus = gm - 0.5 * delta * dgm;
        out.dU_dplus = (dfm - out.U) / delta;
        out.dU_dminus = (out.U - dgm) / delta;
    } else {
        f_plus = f.value(sp);
        g_minus = g.value(sm);
        out.U = (f_plus - g_minus) / delta;
        out.dU_dplus = (f.derivative(sp) - out.U) / delta;
        out.dU_dminus = (out.U - g.derivative(sm)) / delta;
    }
    // Phi - s+ U = -f(s+) holds exactly; the second identity Phi - s- U = -g(s-)
    // then follows from the definition of U
    out.Phi = sp * out.U - f_plus;
    out.dPhi_dplus = sm * out.dU_dplus;
    out.dPhi_dminus = sp * out.dU_dminus;
    (void)g_minus;
    return out;
}

}  // namespace

PotentialPairPartials axial_potential_partials(double lambda_plus, double lambda_minus,
                                               const Profile& f, const Profile& g) {
    return fraction_pair(lambda_plus, lambda_minus, f, g);
}

PotentialPair axial_potentials(const coords::OblateCoords& c, const Profile& f,
                               const Profile& g) {
    PotentialPairPartials p = fraction_pair(c.lambda_plus, c.lambda_minus, f, g);
    return {p.U, p.Phi};
}

PotentialPair s3_axial_potentials(double mu_plus, double mu_minus, const Profile& f,
                                  const Profile& g) {
    PotentialPairPartials p = fraction_pair(mu_plus, mu_minus, f, g);
    return {p.U, p.Phi};
}

PotentialPairPartials s3_axial_potential_partials(double mu_plus, double mu_minus,
                                                  const Profile& f, const Profile& g) {
    return fraction_pair(mu_plus, mu_minus, f, g);
}

EllipsoidalPotentialPartials ellipsoidal_potential_partials(const coords::EllipsoidalCoords& c,
                                                            const Profile& l, const Profile& m,
                                                            const Profile& n) {
    const double s[3] = {c.lambda, c.mu, c.nu};
    const Profile* prof[3] = {&l, &m, &n};
    const double scale = std::abs(s[0]) + std::abs(s[1]) + std::abs(s[2]) + 1;
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++)
            if (std::abs(s[i] - s[j]) < 1e-12 * scale)
                throw CoincidenceError("ellipsoidal_potentials: coincident coordinates");

    EllipsoidalPotentialPartials out{};
    double hv[3], hd[3];
    for (int i = 0; i < 3; i++) {
        hv[i] = prof[i]->value(s[i]);
        hd[i] = prof[i]->derivative(s[i]);
    }
    // U = sum_i h_i(s_i) / prod_{j != i} (s_i - s_j)
    // dU/ds_k collects the k-th term's quotient rule plus the (s_i - s_k)
    // factors of the other terms
    for (int i = 0; i < 3; i++) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double dj = s[i] - s[j], dk = s[i] - s[k];
        const double denom = dj * dk;
        const double term = hv[i] / denom;
        const double w1 = s[j] + s[k];
        const double w2 = s[j] * s[k];
        out.values.U += term;
        out.values.U1 += w1 * term;
        out.values.U2 += w2 * term;
        out.dU[i] += (hd[i] - term * (dj + dk)) / denom;
        out.dU[j] += term / dj;
        out.dU[k] += term / dk;
    }
    // the weighted sums differentiate to the eigenvalue-scaled gradients;
    // this is the gradient relation dU_1 = g_1 dU, dU_2 = g_2 dU
    const double w1[3] = {s[1] + s[2], s[0] + s[2], s[0] + s[1]};
    const double w2[3] = {s[1] * s[2], s[0] * s[2], s[0] * s[1]};
    for (int i = 0; i < 3; i++) {
        out.dU1[i] = w1[i] * out.dU[i];
        out.dU2[i] = w2[i] * out.dU[i];
    }
    return out;
}

EllipsoidalPotentials ellipsoidal_potentials(const coords::EllipsoidalCoords& c,
                                             const Profile& l, const Profile& m,
                                             const Profile& n) {
    return ellipsoidal_potential_partials(c, l, m, n).values;
}

double kepler_s3_potential(const Vec3& x, const coords::SphereConfig& cfg) {
    const double r = norm(x);
    if (r < 1e-14 * std::abs(cfg.chi))
        throw CenterError("kepler_s3_potential: potential center");
    return cfg.k * (norm2(x) - cfg.chi * cfg.chi) / (2 * cfg.chi * r);
}

Vec3 kepler_s3_potential_gradient(const Vec3& x, const coords::SphereConfig& cfg) {
    const double r = norm(x);
    if (r < 1e-14 * std::abs(cfg.chi))
        throw CenterError("kepler_s3_potential_gradient: potential center");
    const double chi2 = cfg.chi * cfg.chi;
    return (cfg.k * (norm2(x) + chi2) / (2 * cfg.chi * r * r * r)) * x;
}

}  // namespace potentials
}  // namespace qi3d
