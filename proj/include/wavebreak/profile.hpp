#ifndef WAVEBREAK_PROFILE_HPP
#define WAVEBREAK_PROFILE_HPP

#include <vector>

namespace wavebreak::pde {

struct Bump {
    double amplitude;  // value of u0' at the bump center
    double center;
    double width;      // Gaussian width; must be > 0
};

// Initial data u0 specified through its derivative
// u0'(x) = sum_i c_i exp(-((x - x_i)/w_i)^2), so inf/sup of u0' are the bump
// amplitudes when the bumps are well separated.
//
// On the periodic domain u0 exists only if the bump integrals cancel; when
// sum c_i w_i != 0 a wide compensating bump of width `balance_width` is added
// automatically at the midpoint of the largest gap between bump centers. That
// shifts sup u0' to |sum c_i w_i| / balance_width for otherwise nonpositive
// profiles, so breaking verdicts are always taken at the measured extrema.
struct ProfileSpec {
    std::vector<Bump> bumps;
    double balance_width = 8.0;

    // Throws ConfigError on empty bumps, nonpositive widths, bump pairs
    // closer than 5 (w_i + w_j), or bump tails above 1e-12 at +-L/2.
    void validate(double L) const;

    // Samples of u0 (zero mean) on the n-point uniform grid over [-L/2, L/2).
    std::vector<double> realize(int n, double L) const;

    // Bumps actually realized, including the balance bump when one is needed.
    std::vector<Bump> effective_bumps(double L) const;
};

}  // namespace wavebreak::pde

#endif
