#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgtunnel {

enum class ErrorKind {
    // geometry / mode validation
    DimensionOrder,
    NonNesting,
    NonPositive,
    InvalidTEIndex,
    InvalidTMIndex,
    // modes
    AtCutoff,
    OutOfCrossSection,
    // coupling
    IncidentEvanescent,
    // scattering
    SingularDenominator,
    SingularSystem,
    IncidentCutOff,
    ConstraintViolated,
    PolarizationMismatch,
    // front end
    InvalidArgument,
    ConfigInvalid,
    InvariantViolation,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace wgtunnel
