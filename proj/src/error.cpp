#include "expasym/error.hpp"

namespace expasym {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::ZeroMoment: return "ZeroMoment";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::NotPureExponentialIndex: return "NotPureExponentialIndex";
    case ErrorKind::DerivativeCapExceeded: return "DerivativeCapExceeded";
    case ErrorKind::DerivativeOrderExceedsDegree: return "DerivativeOrderExceedsDegree";
    case ErrorKind::GrowthBoundViolated: return "GrowthBoundViolated";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::PhiVanishes: return "PhiVanishes";
    case ErrorKind::AllResidualsZero: return "AllResidualsZero";
    case ErrorKind::GridNotDyadic: return "GridNotDyadic";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NoEvaluator: return "NoEvaluator";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace expasym
