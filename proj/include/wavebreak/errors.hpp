#ifndef WAVEBREAK_ERRORS_HPP
#define WAVEBREAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavebreak {

// Invalid argument at the library boundary (wrong quadrant, bad handle use).
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation (e.g. m2 <= m1).
class DomainError : public UsageError {
  public:
    explicit DomainError(const std::string& msg) : UsageError(msg) {}
};

// Inconsistent or unsatisfiable configuration (schema violations, kernel
// tail too fat for the requested period, malformed scenario files).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Computation could not be completed to tolerance (step-size underflow,
// resolution loss in the spectral solver).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wavebreak

#endif
