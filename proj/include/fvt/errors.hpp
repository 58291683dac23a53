#pragma once

#include <stdexcept>
#include <string>

namespace fvt {

/// Bad sizes, counts, or hyperparameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Qubit/parameter/label index out of range.
struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

/// Mismatched dimensions between two values.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Value outside its mathematical domain (e.g. fidelity outside [0,1]).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Malformed input file (IDX magic, truncation, count mismatch).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite loss or parameters during training; carries epoch/batch context.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// calibrate_initial_fidelity exhausted its seed range.
struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fvt
