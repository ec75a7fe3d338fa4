#pragma once
#include <stdexcept>
#include <string>

namespace charq {

enum class Errc {
  NotAUnit,
  WrongCharacteristic,
  ZeroElement,
  BadParameter,
  Unsupported,
  WrongKind,
  CapExceeded,
  SearchFailed,
  LevelTooLarge,
  Inconclusive,
  Parse,
  Overflow,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown by closures that hit their element cap; carries the count reached.
class CapExceeded : public Error {
 public:
  CapExceeded(unsigned long long partial, unsigned long long cap)
      : Error(Errc::CapExceeded, "closure passed " + std::to_string(cap) + " elements"),
        partial_(partial) {}
  unsigned long long partial() const noexcept { return partial_; }

 private:
  unsigned long long partial_;
};

}  // namespace charq
