#pragma once

#include <stdexcept>
#include <string>

namespace netgames {

/// Invalid parameter or configuration value. The message names the offending field.
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed or inconsistent input data (CSV shape, symmetry violations, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (singular solve, non-convergence treated as fatal, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The equilibrium assumption rho(beta*G) < 1 does not hold.
/// Carries the spectral radius that was actually computed.
class EquilibriumError : public NumericalError {
public:
    EquilibriumError(const std::string& msg, double rho)
        : NumericalError(msg), rho_(rho) {}
    double rho() const { return rho_; }

private:
    double rho_;
};

}  // namespace netgames
