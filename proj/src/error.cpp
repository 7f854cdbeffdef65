#include "motzkin/error.hpp"

namespace motzkin {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BadParams: return "BadParams";
    case Errc::NegativeHeight: return "NegativeHeight";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::BadDropIndex: return "BadDropIndex";
    case Errc::DepthViolation: return "DepthViolation";
    case Errc::NotSemialigned: return "NotSemialigned";
    case Errc::EmptyPath: return "EmptyPath";
    case Errc::EmptyLength: return "EmptyLength";
    case Errc::ParseError: return "ParseError";
    case Errc::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case Errc::NonUnitConstant: return "NonUnitConstant";
    case Errc::ZeroConstantA: return "ZeroConstantA";
    case Errc::UnboundedResult: return "UnboundedResult";
    case Errc::InsufficientOrder: return "InsufficientOrder";
    case Errc::BadA: return "BadA";
    case Errc::NotProper: return "NotProper";
    case Errc::NegativeColorCount: return "NegativeColorCount";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotRiordan: return "NotRiordan";
    case Errc::InvalidScheme: return "InvalidScheme";
    case Errc::SchemeMismatch: return "SchemeMismatch";
    case Errc::ColorOutOfCodebook: return "ColorOutOfCodebook";
    case Errc::UndecodableBlock: return "UndecodableBlock";
    case Errc::NotParityZero: return "NotParityZero";
    case Errc::WrongParity: return "WrongParity";
    case Errc::BadDecomposition: return "BadDecomposition";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::TooShort: return "TooShort";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace motzkin
