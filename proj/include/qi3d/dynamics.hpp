#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qi3d/coords.hpp"
#include "qi3d/profile.hpp"
#include "qi3d/vec.hpp"

namespace qi3d {

/// serial reference vs OpenMP execution of batch kernels
enum class ExecMode { Serial, Parallel };

namespace dynamics {

/// A point (x, p) of 6D phase space.
struct PhasePoint {
    Vec3 x, p;
};

/// Phase-space gradient of a scalar observable.
struct Gradient {
    Vec3 dx, dp;
};

/// Scalar phase-space function with optional analytic gradient; when no
/// gradient is supplied it is computed by central differences with step
/// h = eps^(1/3) (1 + |coordinate|).
class Observable {
public:
    Observable() = default;
    Observable(std::string name, std::function<double(const PhasePoint&)> value,
               std::function<Gradient(const PhasePoint&)> grad = nullptr)
        : name_(std::move(name)), value_(std::move(value)), grad_(std::move(grad)) {}

    const std::string& name() const { return name_; }
    bool has_analytic_gradient() const { return static_cast<bool>(grad_); }

    double operator()(const PhasePoint& z) const { return value_(z); }
    Gradient gradient(const PhasePoint& z) const;

    /// copy with the analytic gradient stripped (forces the FD route)
    Observable without_gradient() const { return Observable(name_ + "_fd", value_); }

private:
    std::string name_;
    std::function<double(const PhasePoint&)> value_;
    std::function<Gradient(const PhasePoint&)> grad_;
};

/// {A,B} = dA/dp . dB/dx - dA/dx . dB/dp  (sign convention of the source
/// material; canonical test: {p_i, x_j} = delta_ij).
double poisson_bracket(const Observable& a, const Observable& b, const PhasePoint& z);

/// Matrix of max |{O_i, O_j}| over a sample of phase points, with a pass/fail
/// verdict per pair against `tol`.
struct InvolutionReport {
    std::vector<std::string> names;
    std::vector<std::vector<double>> max_abs;  // upper triangle filled, symmetric
    double tol = 0;
    bool all_pass = true;

    std::string summary() const;
};

InvolutionReport involution_report(const std::vector<Observable>& obs,
                                   const std::vector<PhasePoint>& sample, double tol,
                                   ExecMode mode = ExecMode::Parallel);

/// Time series of states with per-sample values of monitored observables.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> states;
    std::vector<std::string> observable_names;
    std::vector<std::vector<double>> conserved_log;  // [sample][observable]

    /// max_t |O(t) - O(0)| / max(1, |O(0)|)
    double relative_drift(std::size_t obs_index) const;
    double max_relative_drift() const;

    /// CSV columns: t, x1..x3, p1..p3, one column per observable (RFC 4180)
    void write_csv(std::ostream& os) const;
};

struct IntegrateOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    int n_samples = 2000;       // uniformly spaced output samples
    double initial_step = 1e-6;
};

/// Adaptive 8th-order Runge-Kutta integration of Hamilton's equations
///   dx/dt = dH/dp,  dp/dt = -dH/dx
/// sampling the registered observables along the way.  Throws StepFailure
/// when the controller cannot advance (e.g. near singular sets).
Trajectory integrate(const Observable& hamiltonian, const PhasePoint& z0, double t0, double t1,
                     const IntegrateOptions& opts,
                     const std::vector<Observable>& monitors = {});

/// Values of the commuting triple fixed by the initial conditions.
struct SeparationConstants {
    double E = 0;   // value of H
    double E1 = 0;  // value of H1
    double ell = 0; // value of L
};

/// The separated squares of the Hamilton-Jacobi partial derivatives:
///   (d+F)^2 = [2m(l+ (E-U) - (E1-Phi)) - l+ ell^2/(l+ + a^2)] / (4 l+ (l+ + a^2))
/// and the same expression with l- throughout.  U and Phi are evaluated at
/// the full coordinate pair; the identities of the potential family make the
/// first result independent of l- and the second independent of l+.
std::pair<double, double> hj_momentum_squares(const coords::OblateCoords& c,
                                              const SeparationConstants& consts,
                                              const Profile& f, const Profile& g,
                                              const coords::AxialConfig& cfg);

/// Residuals of the three separated equations of motion along a trajectory;
/// samples near turning points (vanishing momentum components or eigenvalue
/// coordinates at the ends of their ranges) are skipped.
struct SeparationResiduals {
    std::vector<double> times;                    // retained samples
    std::vector<std::array<double, 3>> residual;  // relative, per relation
    std::array<double, 3> max_residual{0, 0, 0};
    std::size_t skipped = 0;
};

SeparationResiduals separated_eom_residuals(const Trajectory& traj,
                                            const SeparationConstants& consts,
                                            const Profile& f, const Profile& g,
                                            const coords::AxialConfig& cfg,
                                            double turning_buffer = 1e-6);

}  // namespace dynamics
}  // namespace qi3d
