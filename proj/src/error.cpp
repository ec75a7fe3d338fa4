#include "charq/error.hpp"

namespace charq {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::BadParameter: return "BadParameter";
    case Errc::Unsupported: return "Unsupported";
    case Errc::WrongKind: return "WrongKind";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::LevelTooLarge: return "LevelTooLarge";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Parse: return "Parse";
    case Errc::Overflow: return "Overflow";
  }
  return "Error";
}

}  // namespace charq
