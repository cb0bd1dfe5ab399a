#include "qi3d/dynamics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_odeiv2.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "qi3d/errors.hpp"
#include "qi3d/potentials.hpp"

namespace qi3d {
namespace dynamics {

Gradient Observable::gradient(const PhasePoint& z) const {
    if (grad_)
        return grad_(z);
    if (!value_)
        throw GradientError("Observable '" + name_ + "': no value function");
    const double eps3 = std::cbrt(std::numeric_limits<double>::epsilon());
    Gradient g;
    for (int i = 0; i < 3; i++) {
        PhasePoint zp = z, zm = z;
        double h = eps3 * (1 + std::abs(z.x[i]));
        zp.x[i] += h;
        zm.x[i] -= h;
        g.dx[i] = (value_(zp) - value_(zm)) / (2 * h);
        zp = zm = z;
        h = eps3 * (1 + std::abs(z.p[i]));
        zp.p[i] += h;
        zm.p[i] -= h;
        g.dp[i] = (value_(zp) - value_(zm)) / (2 * h);
    }
    for (int i = 0; i < 3; i++)
        if (!std::isfinite(g.dx[i]) || !std::isfinite(g.dp[i]))
            throw GradientError("Observable '" + name_ + "': non-finite finite-difference gradient");
    return g;
}

double poisson_bracket(const Observable& a, const Observable& b, const PhasePoint& z) {
    Gradient ga = a.gradient(z), gb = b.gradient(z);
    return dot(ga.dp, gb.dx) - dot(ga.dx, gb.dp);
}

std::string InvolutionReport::summary() const {
    std::ostringstream os;
    os << (all_pass ? "PASS" : "FAIL") << " (tol " << tol << ")\n";
    for (std::size_t i = 0; i < names.size(); i++)
        for (std::size_t j = i + 1; j < names.size(); j++)
            os << "  {" << names[i] << "," << names[j] << "} max " << max_abs[i][j]
               << (max_abs[i][j] <= tol ? "" : "  <-- FAIL") << "\n";
    return os.str();
}

InvolutionReport involution_report(const std::vector<Observable>& obs,
                                   const std::vector<PhasePoint>& sample, double tol,
                                   ExecMode mode) {
    const std::size_t n = obs.size(), npts = sample.size();
    InvolutionReport rep;
    rep.tol = tol;
    for (const auto& o : obs) rep.names.push_back(o.name());
    rep.max_abs.assign(n, std::vector<double>(n, 0.0));

    // per-point values gathered first, reduced serially, so that the serial
    // and parallel paths produce identical results
    std::vector<std::vector<double>> vals(npts);
    auto work = [&](std::size_t k) {
        std::vector<double> row;
        row.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = i + 1; j < n; j++)
                row.push_back(std::abs(poisson_bracket(obs[i], obs[j], sample[k])));
        vals[k] = std::move(row);
    };
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
        for (long k = 0; k < static_cast<long>(npts); k++) work(k);
    } else {
        for (std::size_t k = 0; k < npts; k++) work(k);
    }
    for (std::size_t k = 0; k < npts; k++) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = i + 1; j < n; j++) {
                rep.max_abs[i][j] = std::max(rep.max_abs[i][j], vals[k][idx]);
                rep.max_abs[j][i] = rep.max_abs[i][j];
                idx++;
            }
    }
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = i + 1; j < n; j++)
            if (!(rep.max_abs[i][j] <= tol))
                rep.all_pass = false;
    return rep;
}

/* ---------------- trajectory integration ---------------- */

double Trajectory::relative_drift(std::size_t obs_index) const {
    double ref = conserved_log.empty() ? 0.0 : conserved_log.front()[obs_index];
    double denom = std::max(1.0, std::abs(ref));
    double worst = 0;
    for (const auto& row : conserved_log)
        worst = std::max(worst, std::abs(row[obs_index] - ref));
    return worst / denom;
}

double Trajectory::max_relative_drift() const {
    double worst = 0;
    for (std::size_t i = 0; i < observable_names.size(); i++)
        worst = std::max(worst, relative_drift(i));
    return worst;
}

void Trajectory::write_csv(std::ostream& os) const {
    os << "t,x1,x2,x3,p1,p2,p3";
    for (const auto& n : observable_names) os << "," << n;
    os << "\r\n";
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    for (std::size_t k = 0; k < times.size(); k++) {
        put(times[k]);
        for (int i = 0; i < 3; i++) { os << ","; put(states[k].x[i]); }
        for (int i = 0; i < 3; i++) { os << ","; put(states[k].p[i]); }
        for (std::size_t j = 0; j < observable_names.size(); j++) {
            os << ",";
            put(conserved_log[k][j]);
        }
        os << "\r\n";
    }
}

namespace {

struct OdeCtx {
    const Observable* h;
};

int hamilton_rhs(double /*t*/, const double y[], double dydt[], void* params) {
    const Observable& h = *static_cast<OdeCtx*>(params)->h;
    PhasePoint z{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
    Gradient g;
    try {
        g = h.gradient(z);
    } catch (const Error&) {
        return GSL_EBADFUNC;
    }
    dydt[0] = g.dp.x;
    dydt[1] = g.dp.y;
    dydt[2] = g.dp.z;
    dydt[3] = -g.dx.x;
    dydt[4] = -g.dx.y;
    dydt[5] = -g.dx.z;
    for (int i = 0; i < 6; i++)
        if (!std::isfinite(dydt[i])) return GSL_EBADFUNC;
    return GSL_SUCCESS;
}

}  // namespace

Trajectory integrate(const Observable& hamiltonian, const PhasePoint& z0, double t0, double t1,
                     const IntegrateOptions& opts, const std::vector<Observable>& monitors) {
    OdeCtx ctx{&hamiltonian};
    gsl_odeiv2_system sys{hamilton_rhs, nullptr, 6, &ctx};
    gsl_odeiv2_driver* drv = gsl_odeiv2_driver_alloc_y_new(
        &sys, gsl_odeiv2_step_rk8pd, opts.initial_step, opts.abs_tol, opts.rel_tol);

    Trajectory traj;
    for (const auto& m : monitors) traj.observable_names.push_back(m.name());

    double y[6] = {z0.x.x, z0.x.y, z0.x.z, z0.p.x, z0.p.y, z0.p.z};
    double t = t0;
    const int n = std::max(opts.n_samples, 1);
    traj.times.reserve(n + 1);
    for (int k = 0; k <= n; k++) {
        double target = t0 + (t1 - t0) * k / n;
        if (k > 0) {
            int status = gsl_odeiv2_driver_apply(drv, &t, target, y);
            if (status != GSL_SUCCESS) {
                gsl_odeiv2_driver_free(drv);
                throw StepFailure("integrate: step failed at t=" + std::to_string(t) +
                                  " (gsl status " + std::to_string(status) + ")");
            }
        }
        PhasePoint z{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
        traj.times.push_back(target);
        traj.states.push_back(z);
        std::vector<double> row;
        row.reserve(monitors.size());
        for (const auto& m : monitors) row.push_back(m(z));
        traj.conserved_log.push_back(std::move(row));
    }
    gsl_odeiv2_driver_free(drv);
    return traj;
}

/* ---------------- Hamilton-Jacobi separation ---------------- */

std::pair<double, double> hj_momentum_squares(const coords::OblateCoords& c,
                                              const SeparationConstants& consts,
                                              const Profile& f, const Profile& g,
                                              const coords::AxialConfig& cfg) {
    const double a2 = cfg.a * cfg.a;
    const double lp = c.lambda_plus, lm = c.lambda_minus;
    if (std::abs(lp) < 1e-14 * a2 || std::abs(lp + a2) < 1e-14 * a2 ||
        std::abs(lm) < 1e-14 * a2 || std::abs(lm + a2) < 1e-14 * a2)
        throw EndpointError("hj_momentum_squares: eigenvalue coordinate at a turning surface");

    potentials::PotentialPair pot = potentials::axial_potentials(c, f, g);
    const double m = cfg.m, E = consts.E, E1 = consts.E1, l2 = consts.ell * consts.ell;

    double dplus2 = (2 * m * (lp * (E - pot.U) - (E1 - pot.Phi)) - lp * l2 / (lp + a2)) /
                    (4 * lp * (lp + a2));
    double dminus2 = (2 * m * (lm * (E - pot.U) - (E1 - pot.Phi)) - lm * l2 / (lm + a2)) /
                     (4 * lm * (lm + a2));
    return {dplus2, dminus2};
}

SeparationResiduals separated_eom_residuals(const Trajectory& traj,
                                            const SeparationConstants& consts,
                                            const Profile& f, const Profile& g,
                                            const coords::AxialConfig& cfg,
                                            double turning_buffer) {
    const std::size_t n = traj.times.size();
    if (n < 5)
        throw TurningPointError("separated_eom_residuals: trajectory too short");
    const double a2 = cfg.a * cfg.a;
    const double m = cfg.m;

    // eigenvalue coordinates, azimuth (unwrapped) and momentum components
    std::vector<double> lp(n), lm(n), phi(n), pplus(n), pminus(n);
    for (std::size_t k = 0; k < n; k++) {
        coords::OblateCoords c = coords::oblate_from_cartesian(traj.states[k].x, cfg);
        coords::OblateBasis b = coords::oblate_basis(traj.states[k].x, cfg);
        lp[k] = c.lambda_plus;
        lm[k] = c.lambda_minus;
        phi[k] = c.phi;
        pplus[k] = dot(traj.states[k].p, b.grad_lambda_plus) / norm2(b.grad_lambda_plus);
        pminus[k] = dot(traj.states[k].p, b.grad_lambda_minus) / norm2(b.grad_lambda_minus);
    }
    for (std::size_t k = 1; k < n; k++) {  // unwrap azimuth
        while (phi[k] - phi[k - 1] > M_PI) phi[k] -= 2 * M_PI;
        while (phi[k] - phi[k - 1] < -M_PI) phi[k] += 2 * M_PI;
    }

    double pp_scale = 0, pm_scale = 0, lp_scale = 0;
    for (std::size_t k = 0; k < n; k++) {
        pp_scale = std::max(pp_scale, pplus[k] * pplus[k]);
        pm_scale = std::max(pm_scale, pminus[k] * pminus[k]);
        lp_scale = std::max(lp_scale, std::abs(lp[k]));
    }

    const double dt = traj.times[1] - traj.times[0];
    auto deriv5 = [&](const std::vector<double>& v, std::size_t k) {
        return (-v[k + 2] + 8 * v[k + 1] - 8 * v[k - 1] + v[k - 2]) / (12 * dt);
    };

    SeparationResiduals out;
    for (std::size_t k = 2; k + 2 < n; k++) {
        const bool turning = pplus[k] * pplus[k] < turning_buffer * pp_scale ||
                             pminus[k] * pminus[k] < turning_buffer * pm_scale ||
                             std::abs(lm[k]) < turning_buffer * a2 ||
                             std::abs(lm[k] + a2) < turning_buffer * a2 ||
                             std::abs(lp[k]) < turning_buffer * lp_scale;
        if (turning) {
            out.skipped++;
            continue;
        }
        const double dlp = deriv5(lp, k), dlm = deriv5(lm, k), dphi = deriv5(phi, k);

        const double tp1 = dlp / (lp[k] * pplus[k]);
        const double tm1 = dlm / (lm[k] * pminus[k]);
        const double r1 = std::abs(tp1 + tm1 - 4 / m) / (4 / m);

        const double tp2 = dlp / (lp[k] * (lp[k] + a2) * pplus[k]);
        const double tm2 = dlm / (lm[k] * (lm[k] + a2) * pminus[k]);
        const double r2 = std::abs(tp2 + tm2) / std::max(std::abs(tp2) + std::abs(tm2), 1e-300);

        const double tp3 = dlp / (lp[k] * (lp[k] + a2) * (lp[k] + a2) * pplus[k]);
        const double tm3 = dlm / (lm[k] * (lm[k] + a2) * (lm[k] + a2) * pminus[k]);
        const double lhs3 = -consts.ell * a2 / 4 * (tp3 + tm3);
        const double r3 = std::abs(lhs3 - dphi) / std::max({std::abs(dphi), std::abs(lhs3), 1e-12});

        out.times.push_back(traj.times[k]);
        out.residual.push_back({r1, r2, r3});
        for (int i = 0; i < 3; i++)
            out.max_residual[i] = std::max(out.max_residual[i], out.residual.back()[i]);
    }
    if (out.times.empty())
        throw TurningPointError(
            "separated_eom_residuals: every sample inside a turning-point neighbourhood");
    return out;
}

}  // namespace dynamics
}  // namespace qi3d
