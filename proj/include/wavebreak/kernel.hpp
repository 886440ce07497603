#ifndef WAVEBREAK_KERNEL_HPP
#define WAVEBREAK_KERNEL_HPP

#include <vector>

namespace wavebreak::pde {

enum class KernelType { Gaussian, SechSquared };

// Smooth, even, integrable convolution kernel normalized to K(0) = 1.
//   Gaussian:    K(x) = exp(-x^2 / (2 sigma^2)),  symbol sigma sqrt(2 pi) exp(-sigma^2 k^2 / 2)
//   SechSquared: K(x) = sech^2(x / lambda),       symbol 2 lambda z / sinh(z), z = pi lambda k / 2
struct Kernel {
    KernelType type = KernelType::Gaussian;
    double param = 1.0;  // sigma or lambda; must be > 0

    double value(double x) const;
    double symbol(double kappa) const;

    // Smallest period with K(L/2) < kernel tail tolerance (1e-12).
    double min_period() const;

    // Throws ConfigError naming min_period() when the tail condition fails.
    void validate_for_period(double L) const;

    // symbol(2 pi k / L) for k = 0..n/2, after validating the tail.
    std::vector<double> build_table(int n, double L) const;
};

}  // namespace wavebreak::pde

#endif
