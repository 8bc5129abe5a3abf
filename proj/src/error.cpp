#include "nsgreedy/error.hpp"

namespace nsgreedy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonPositiveElement: return "NonPositiveElement";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TooFewGenerators: return "TooFewGenerators";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace nsgreedy
