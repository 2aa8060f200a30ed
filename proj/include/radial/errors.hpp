#pragma once

#include <stdexcept>
#include <string>

namespace radial {

/// Raised when a branch inverse or envelope is evaluated outside its domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The trajectory crossed the overflow guard before t = 1.
struct BlowUpError : std::runtime_error {
    BlowUpError(const std::string& what, int sign, double t)
        : std::runtime_error(what), sign(sign), t(t) {}
    int sign;  // sign of u at the guard crossing
    double t;
};

struct StepFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse or validation failure in a run configuration.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& what, std::string field, int line = 0)
        : std::runtime_error(what), field(std::move(field)), line(line) {}
    std::string field;
    int line;
};

}  // namespace radial
