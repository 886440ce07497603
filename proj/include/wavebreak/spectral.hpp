#ifndef WAVEBREAK_SPECTRAL_HPP
#define WAVEBREAK_SPECTRAL_HPP

#include <complex>
#include <vector>

#include <fftw3.h>

namespace wavebreak::pde {

// Real-to-complex transform pair on an n-point periodic grid of period L.
// Plans and buffers are owned per instance; an instance is not thread-safe
// but distinct instances are independent.
class SpectralWorkspace {
  public:
    SpectralWorkspace(int n, double L);
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    int n() const { return n_; }
    int modes() const { return n_ / 2 + 1; }
    double period() const { return length_; }
    double dx() const { return length_ / n_; }
    // Wavenumber of mode k: 2 pi k / L.
    double kappa(int k) const;

    // Unnormalized forward transform of `in` into `spectrum`.
    void forward(const double* in, std::complex<double>* spectrum);
    // Inverse transform including the 1/n normalization. Destroys `spectrum`.
    void inverse(std::complex<double>* spectrum, double* out);

    // out = d/dx in, computed spectrally.
    void derivative(const double* in, double* out);
    // out = antiderivative of `in` with the mean of the result set to zero.
    // The k = 0 mode of `in` is dropped (must be zero for a periodic result).
    void antiderivative(const double* in, double* out);

  private:
    const int n_;
    const double length_;
    double* grid_;
    fftw_complex* spec_;
    fftw_plan fwd_;
    fftw_plan inv_;
};

}  // namespace wavebreak::pde

#endif
