#pragma once

#include <stdexcept>
#include <string>

namespace itguide {

/// Raised when a guidance or kinematic guard fires. The simulation engine
/// converts these into a GuardTripped outcome.
class GuardError : public std::runtime_error {
public:
    enum class Kind { DegenerateGeometry, DenominatorSingular };

    GuardError(Kind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Malformed configuration text (bad line, unparseable number, unknown key).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration that parses but violates a parameter constraint.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace itguide
