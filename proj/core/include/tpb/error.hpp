#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpb {

/// Malformed or out-of-domain symbol text. Carries the byte offset of the
/// offending token when it comes from the parser.
class SymbolError : public std::runtime_error {
public:
    SymbolError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition on a mathematical input was violated (|x| >= 1, bad degree, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation landed exactly on a singular point of a symbol.
class PoleHit : public std::domain_error {
public:
    explicit PoleHit(std::complex<double> location)
        : std::domain_error("evaluation at a pole"), location_(location) {}

    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

/// Invalid analysis configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tpb
