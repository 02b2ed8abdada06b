#pragma once

#include <stdexcept>
#include <string>

namespace nodoid {

/// Argument outside the mathematical domain of an operation (bad mass, modulus, index...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to produce a trustworthy result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root bracketing failed: no sign change across the search interval.
class BracketError : public NumericalError {
public:
    BracketError(const std::string& what, double f_lo, double f_hi)
        : NumericalError(what), f_lo_(f_lo), f_hi_(f_hi) {}

    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double f_lo_;
    double f_hi_;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nodoid
