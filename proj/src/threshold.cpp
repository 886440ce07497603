#include "wavebreak/threshold.hpp"

#include <cmath>
#include <string>

#include "wavebreak/errors.hpp"

namespace wavebreak::threshold {

namespace {

constexpr double kXIntercept = -1.4715177646857693;  // -4/e

void require_ordered(PhasePoint p, const char* what) {
    if (!(p.m2 - p.m1 > 0.0))
        throw DomainError(std::string(what) + " requires m2 > m1, got (" + std::to_string(p.m1) +
                          ", " + std::to_string(p.m2) + ")");
}

}  // namespace

double eval_w(double z) {
    if (!(z > 0.0)) throw DomainError("W(z) requires z > 0, got " + std::to_string(z));
    // Literally z^2 - 4 z ln(z/4) - 4 z = z ((z - 4) - 4 log1p((z - 4)/4)).
    // The second form stays accurate near the double root at z = 4, where the
    // direct one cancels catastrophically.
    const double h = z - 4.0;
    const double inner = h - 4.0 * std::log1p(h / 4.0);
    return z * (inner > 0.0 ? inner : 0.0);
}

double eval_s(double z) {
    const double root = std::sqrt(eval_w(z));
    if (z < 4.0) return root;
    if (z > 4.0) return -root;
    return 0.0;  // sgn(0) convention
}

double eval_g(PhasePoint p) {
    require_ordered(p, "G");
    return p.m1 + p.m2 + eval_s(p.m2 - p.m1);
}

double first_integral_residual(PhasePoint p) {
    require_ordered(p, "first integral");
    const double z = p.m2 - p.m1;
    return p.m1 * p.m2 + z * (std::log(z) + 1.0 - std::log(4.0));
}

double first_integral_level(PhasePoint p) {
    require_ordered(p, "first integral");
    return p.m1 * p.m2 / (p.m1 - p.m2) - std::log(p.m2 - p.m1);
}

ThresholdVerdict classify(PhasePoint p) {
    if (!(p.m1 <= 0.0 && p.m2 >= 0.0))
        throw DomainError("classify requires a second-quadrant point (m1 <= 0 <= m2), got (" +
                          std::to_string(p.m1) + ", " + std::to_string(p.m2) + ")");
    ThresholdVerdict v;
    v.g_value = eval_g(p);
    v.in_omega = v.g_value < 0.0;
    v.seliger_holds = p.m1 + p.m2 <= -2.0;
    v.time_bound = v.in_omega ? -2.0 / v.g_value : std::numeric_limits<double>::infinity();
    return v;
}

double breaking_time_bound(PhasePoint p, double k0) {
    if (!(k0 > 0.0)) throw UsageError("kernel mass k0 must be positive");
    const double g = eval_g({p.m1 / k0, p.m2 / k0});
    if (!(g < 0.0)) return std::numeric_limits<double>::infinity();
    return -2.0 / (k0 * g);
}

double separatrix_y(double x) {
    if (!(x <= kXIntercept))
        throw DomainError("separatrix_y requires x <= -4/e, got " + std::to_string(x));
    // The curve is the unique zero of the increasing function y -> G(x, y) on
    // y >= lo; lo sits at or below the curve (on the classical half-plane the
    // region containment gives G <= 0 there).
    double lo = std::max(0.0, -x - 4.0);
    if (eval_g({x, lo}) >= 0.0) return lo;
    double hi = std::max(1.0, 2.0 * lo);
    while (eval_g({x, hi}) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!(hi < 1e300)) throw NumericalError("separatrix_y: bracket expansion failed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (eval_g({x, mid}) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace wavebreak::threshold
