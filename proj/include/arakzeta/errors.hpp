#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace arakzeta {

// Every library failure derives from Error; kind() is the stable tag the CLI
// prints in its machine-readable error line.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

// Malformed input: bad file, bad field parameters, bad CLI value.
class InputError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "input"; }
};

// Data violates a stated invariant; check() names it.
class InvariantError : public Error {
public:
    InvariantError(std::string check, const std::string& detail)
        : Error("invariant '" + check + "' violated: " + detail), check_(std::move(check)) {}
    const char* kind() const noexcept override { return "invariant"; }
    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

// Non-SPD matrix, quadrature or truncation that failed to converge.
class NumericError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "numeric"; }
};

// Requested computation lies outside what this build supports.
class CapabilityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "capability"; }
};

// Argument outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

// Evaluation too close to a pole. residue() is the residue there when known.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> pole,
              std::complex<double> residue = {0.0, 0.0})
        : Error(what), pole_(pole), residue_(residue) {}
    const char* kind() const noexcept override { return "pole"; }
    std::complex<double> pole() const noexcept { return pole_; }
    std::complex<double> residue() const noexcept { return residue_; }

private:
    std::complex<double> pole_;
    std::complex<double> residue_;
};

}  // namespace arakzeta
