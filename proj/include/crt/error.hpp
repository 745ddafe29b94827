#pragma once

#include <stdexcept>
#include <string>

namespace crt {

// Invalid domain inputs (bad parameter values, impossible designs). CLI exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration / usage. CLI exit 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical engine failure (non-convergence, degenerate data). Carries any
// iteration trace in the message.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// Target unreachable for any sample size; reports the power asymptote.
class InfeasibleError : public DomainError {
public:
    InfeasibleError(const std::string& msg, double asymptote)
        : DomainError(msg), asymptote_(asymptote) {}
    double asymptote() const { return asymptote_; }

private:
    double asymptote_;
};

}  // namespace crt
