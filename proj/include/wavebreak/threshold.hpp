#ifndef WAVEBREAK_THRESHOLD_HPP
#define WAVEBREAK_THRESHOLD_HPP

#include <limits>

namespace wavebreak {

// Point in slope-extremum coordinates: m1 = inf u_x, m2 = sup u_x.
struct PhasePoint {
    double m1;
    double m2;
};

struct ThresholdVerdict {
    double g_value;
    bool in_omega;        // g_value < 0 with m1 < 0 <= m2
    bool seliger_holds;   // m1 + m2 <= -2
    double time_bound;    // -2/g_value when in_omega, +inf otherwise
};

namespace threshold {

inline constexpr double kRootTolerance = 1e-10;      // root residuals
inline constexpr double kAlgebraicTolerance = 1e-12;  // closed-form identities

// W(z) = z^2 - 4 z ln(z/4) - 4 z. Requires z > 0; nonnegative, zero only at z = 4.
double eval_w(double z);

// S(z) = sgn(4 - z) sqrt(W(z)) with sgn(0) = 0. Requires z > 0.
double eval_s(double z);

// G(p) = m1 + m2 + S(m2 - m1). Requires m2 > m1.
double eval_g(PhasePoint p);

// Deviation of p from the saddle-level curve of the first integral:
// m1 m2 - (m1 - m2)(ln(m2 - m1) + 1 - ln 4). Zero on both manifold branches.
// Not conserved along trajectories; see first_integral_level.
double first_integral_residual(PhasePoint p);

// Per-trajectory constant of the first integral:
// m1 m2 / (m1 - m2) - ln(m2 - m1). Conserved along the equality flow.
double first_integral_level(PhasePoint p);

// Verdict for a second-quadrant point (m1 <= 0 <= m2, m2 > m1).
ThresholdVerdict classify(PhasePoint p);

// Breaking-time bound -2 / (k0 G(m1/k0, m2/k0)) for kernels with K(0) = k0;
// +inf when the rescaled point is outside the breaking region. Requires k0 > 0.
double breaking_time_bound(PhasePoint p, double k0);

// Unique y >= 0 with G(x, y) = 0 for x <= -4/e, to |G| < kRootTolerance.
double separatrix_y(double x);

}  // namespace threshold
}  // namespace wavebreak

#endif
