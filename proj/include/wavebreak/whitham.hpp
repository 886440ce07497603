#ifndef WAVEBREAK_WHITHAM_HPP
#define WAVEBREAK_WHITHAM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "wavebreak/kernel.hpp"
#include "wavebreak/profile.hpp"
#include "wavebreak/spectral.hpp"
#include "wavebreak/threshold.hpp"

namespace wavebreak::pde {

struct SolverOptions {
    int n = 8192;            // grid points; >= 16 and a power of two
    double L = 160.0;        // period
    double cfl = 0.3;        // dt = cfl dx / max|u|, recomputed each step when fixed_dt == 0
    double fixed_dt = 0.0;   // > 0: constant step, CFL ignored
    double horizon = 10.0;
    double sample_dt = 0.0;  // > 0: record the time series at uniform spacing
    double m1_break_threshold = -200.0;
    double tail_guard = 1e-2;  // resolution-loss threshold on the live-band tail fraction
};

struct SeriesSample {
    double t;
    double m1, m2;
    double u_min, u_max;
    double tail_fraction;
};

enum class RunOutcome { Breaking, HorizonReached };

struct BreakingReport {
    double m1_0, m2_0;
    ThresholdVerdict verdict;          // classify(m1_0, m2_0)
    RunOutcome outcome;
    std::optional<double> t_break_observed;
    std::optional<bool> bound_satisfied;  // t_break <= time_bound * 1.05
    std::vector<SeriesSample> series;
};

// Pseudo-spectral solver for u_t + u u_x + K * u_x = 0 on the periodic
// domain. Quadratic term in conservative form (u^2/2)_x with 2/3-rule
// dealiasing; classical RK4 in time. One instance per execution context.
class WhithamSolver {
  public:
    WhithamSolver(const Kernel& kernel, const SolverOptions& opts);

    int n() const { return opts_.n; }
    double dx() const { return ws_.dx(); }
    double time() const { return t_; }
    const std::vector<double>& state() const { return u_; }
    const std::vector<double>& symbol_table() const { return symbol_; }

    void set_state(const std::vector<double>& u, double t = 0.0);
    void load_profile(const ProfileSpec& profile);

    // Convolution term K * u_x of the current grid function `u`.
    std::vector<double> convolution_term(const std::vector<double>& u);

    // One RK4 step. Throws NumericalError on non-finite values.
    void step(double dt);
    // CFL step size for the current state.
    double cfl_dt() const;

    // (inf u_x, sup u_x) with 3-point parabolic refinement at the extrema.
    PhasePoint extrema_of_slope() const;

    // Energy fraction of the top third of the retained (dealiased) band.
    double tail_fraction() const;

    // Integrates until breaking is detected, the horizon is reached, or
    // resolution is lost (NumericalError advising a larger n). Breaking is
    // declared when m1 <= m1_break_threshold and the linear extrapolation of
    // 1/|m1| hits zero within the horizon.
    BreakingReport run();

  private:
    std::vector<double> rhs(const std::vector<double>& u);

    Kernel kernel_;
    SolverOptions opts_;
    SpectralWorkspace ws_;
    std::vector<double> symbol_;
    std::vector<double> u_;
    double t_ = 0.0;
};

// Single-call convenience: load, run, classify.
BreakingReport run_breaking_experiment(const ProfileSpec& profile, const Kernel& kernel,
                                       const SolverOptions& opts);

// t_break_observed <= verdict.time_bound * 1.05. Requires an in-Omega report
// with an observed breaking time (UsageError otherwise).
bool validate_bound(const BreakingReport& report);

}  // namespace wavebreak::pde

#endif
