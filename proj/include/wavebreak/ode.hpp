#ifndef WAVEBREAK_ODE_HPP
#define WAVEBREAK_ODE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wavebreak/threshold.hpp"

namespace wavebreak::ode {

// Equality-system vector field F = -x^2 + y - x, H = -y^2 + y - x.
std::array<double, 2> rhs_equality(PhasePoint p);

enum class Outcome {
    BlowUp,             // m1 crossed the blow-up threshold
    ConvergedToOrigin,  // ||p|| entered the origin ball while shrinking
    DomainExit,         // inequality system left y >= 0 or z > 4/e
    HorizonReached,
};

enum class RecordMode { All, Final };

struct IntegrationOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double horizon = 1e5;
    double sample_dt = 0.0;  // > 0: record at uniform spacing; 0: every accepted step
    RecordMode record = RecordMode::All;
    double blowup_threshold = -1e6;  // declare BlowUp when m1 <= this
    double origin_radius = 1e-4;
    double max_step = 1e3;
};

// Integrator tolerances used for the grid sweeps (looser than the defaults).
IntegrationOptions sweep_options();

struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> points;
    Outcome outcome;
    // Blow-up instant extrapolated from the last three samples of 1/|m1|;
    // set only when outcome == BlowUp.
    std::optional<double> t_blowup;
};

// Integrates the equality system from a second-quadrant start until an
// outcome triggers. Throws NumericalError (with the partial trajectory
// discarded) on step-size underflow.
Trajectory integrate_equality(PhasePoint p0, const IntegrationOptions& opts = {});

// Nonnegative slack pair (a(t), b(t)) subtracted from the vector field.
struct Slack {
    std::function<double(double)> a;
    std::function<double(double)> b;
    // Times where the slack is not smooth; integration restarts there.
    std::vector<double> breakpoints;
};

Slack zero_slack();
Slack constant_slack(double a, double b);
// Piecewise-constant values drawn uniformly from [0, max_value], `pieces`
// equal pieces covering [0, span].
Slack piecewise_random_slack(std::uint64_t seed, int pieces, double span, double max_value);
// max(0, amp sin(omega t + phase)) on each channel.
Slack sinusoid_slack(double amp_a, double amp_b, double omega, double phase);

// Integrates x' = F - a(t), y' = H - b(t). DomainExit when y < 0 or
// z = y - x <= 4/e.
Trajectory integrate_inequality(PhasePoint p0, const Slack& slack,
                                const IntegrationOptions& opts = {});

enum class EquilibriumClass { HyperbolicSaddle, Degenerate, Other };

struct EquilibriumReport {
    PhasePoint location;
    std::array<double, 4> jacobian;  // row-major [[fx, fy], [hx, hy]]
    std::array<std::complex<double>, 2> eigenvalues;
    EquilibriumClass classification;
};

// The two equilibria of the equality system: the saddle (-2,2), then (0,0).
std::array<EquilibriumReport, 2> analyze_equilibria();

struct ManifoldTrace {
    // Both stable-manifold branches traced backward in time from the saddle,
    // ordered away from (-2,2). The lower branch ends at the y = 0 crossing.
    std::vector<PhasePoint> upper;
    std::vector<PhasePoint> lower;
};

// Unit-speed backward trace of the stable manifold, points recorded every
// `step` of arc length up to `arc_length` per branch.
ManifoldTrace trace_stable_manifold(double arc_length, double step);

struct GridCell {
    double g;
    Outcome outcome;
    bool failed;  // integration failure; excluded from statistics
};

struct ClassificationMap {
    std::vector<double> xs, ys;
    std::vector<GridCell> cells;  // row-major, index = iy * nx + ix
    int nx = 0, ny = 0;
    // Agreement of outcome with sign(g) over cells with |g| > band.
    double band = 0.05;
    int checked = 0;   // cells with |g| > band
    int agreed = 0;
    int in_band = 0;
    const GridCell& at(int ix, int iy) const { return cells[static_cast<size_t>(iy) * nx + ix]; }
};

// Integrates every node of an nx x ny grid over [x0,x1] x [y0,y1] and
// compares outcomes against sign(G). Cells run in parallel on `threads`
// workers (0 = hardware concurrency); results are deterministic.
ClassificationMap classify_grid(double x0, double x1, double y0, double y1, int nx, int ny,
                                const IntegrationOptions& opts = sweep_options(),
                                int threads = 0);

}  // namespace wavebreak::ode

#endif
