#include "prolate/error.hpp"

namespace prolate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorCode::EvennessViolation: return "EvennessViolation";
    case ErrorCode::SeedsDependent: return "SeedsDependent";
    case ErrorCode::NonRationalCoefficients: return "NonRationalCoefficients";
    case ErrorCode::FactorizationFails: return "FactorizationFails";
    case ErrorCode::DualFactorizationFails: return "DualFactorizationFails";
    case ErrorCode::UnverifiedData: return "UnverifiedData";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::PoleOnContour: return "PoleOnContour";
    case ErrorCode::NotSymmetricGenerator: return "NotSymmetricGenerator";
    case ErrorCode::NoNonconstantSolution: return "NoNonconstantSolution";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidContour: return "InvalidContour";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::TruncationTail: return "TruncationTail";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace prolate
