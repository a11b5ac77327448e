#include "gz/errors.hpp"

namespace gz {

const char* error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NON_SYMMETRIC";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::UnsupportedPair: return "UNSUPPORTED_PAIR";
    case ErrorCode::NotInterlacing: return "NOT_INTERLACING";
    case ErrorCode::NegativeRadicand: return "NEGATIVE_RADICAND";
    case ErrorCode::NotRegular: return "NOT_REGULAR";
    case ErrorCode::UnsupportedGroup: return "UNSUPPORTED_GROUP";
    case ErrorCode::DegenerateLevel: return "DEGENERATE_LEVEL";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::Unbounded: return "UNBOUNDED";
    case ErrorCode::DimTooLarge: return "DIM_TOO_LARGE";
    case ErrorCode::InvalidTriangulation: return "INVALID_TRIANGULATION";
    case ErrorCode::EmptyModuli: return "EMPTY_MODULI";
    case ErrorCode::DegenerateDiagonal: return "DEGENERATE_DIAGONAL";
    case ErrorCode::BadInput: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

}  // namespace gz
