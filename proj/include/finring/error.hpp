#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finring {

enum class Errc {
  IllFormedTable,
  NotCommutative,
  NotAssociative,
  NoIdentity,
  NotAnIdeal,
  NotASubring,
  ScanBoundExceeded,
  NotLocal,
  NotAUnit,
  NotASubfieldDegree,
  BadParameters,
  CharacteristicNotP,
  NotUnramified,
  ZeroElement,
  MixedCharacteristic,
  NotStable,
  NotHyperplane,
  IoError,
  VerificationFailed,
  Overflow,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::IllFormedTable: return "IllFormedTable";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotASubring: return "NotASubring";
    case Errc::ScanBoundExceeded: return "ScanBoundExceeded";
    case Errc::NotLocal: return "NotLocal";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotASubfieldDegree: return "NotASubfieldDegree";
    case Errc::BadParameters: return "BadParameters";
    case Errc::CharacteristicNotP: return "CharacteristicNotP";
    case Errc::NotUnramified: return "NotUnramified";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::MixedCharacteristic: return "MixedCharacteristic";
    case Errc::NotStable: return "NotStable";
    case Errc::NotHyperplane: return "NotHyperplane";
    case Errc::IoError: return "IoError";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace finring
