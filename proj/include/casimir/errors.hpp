#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorKind {
    config,     // bad user input: parameters, scenario files, mismatched metadata
    numerical,  // quadrature truncation, solver non-convergence, spectral radius >= 1
    io,         // file read/write failures
    internal,   // invariant violations that indicate a bug, e.g. non-SPD assembly
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error config_error(std::string msg) { return Error(ErrorKind::config, std::move(msg)); }
inline Error numerical_error(std::string msg) { return Error(ErrorKind::numerical, std::move(msg)); }
inline Error io_error(std::string msg) { return Error(ErrorKind::io, std::move(msg)); }
inline Error internal_error(std::string msg) { return Error(ErrorKind::internal, std::move(msg)); }

}  // namespace casimir
