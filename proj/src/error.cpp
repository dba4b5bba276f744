#include "wgtunnel/error.hpp"

namespace wgtunnel {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionOrder: return "DimensionOrder";
        case ErrorKind::NonNesting: return "NonNesting";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::InvalidTEIndex: return "InvalidTEIndex";
        case ErrorKind::InvalidTMIndex: return "InvalidTMIndex";
        case ErrorKind::AtCutoff: return "AtCutoff";
        case ErrorKind::OutOfCrossSection: return "OutOfCrossSection";
        case ErrorKind::IncidentEvanescent: return "IncidentEvanescent";
        case ErrorKind::SingularDenominator: return "SingularDenominator";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::IncidentCutOff: return "IncidentCutOff";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::PolarizationMismatch: return "PolarizationMismatch";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace wgtunnel
