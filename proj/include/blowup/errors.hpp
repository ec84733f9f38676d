#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

enum class Errc {
  EmptyPart,
  NotInC,
  TooLargeForExhaustive,
  PreconditionFailed,
  EtaPreconditionFailed,
  DensityTooLow,
  NotEnoughCliques,
  NoExtensions,
  Degenerate,
  RetriesExhausted,
  ReductionFailed,
  RegularityNotCertified,
  BadParams,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyPart: return "EmptyPart";
    case Errc::NotInC: return "NotInC";
    case Errc::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::EtaPreconditionFailed: return "EtaPreconditionFailed";
    case Errc::DensityTooLow: return "DensityTooLow";
    case Errc::NotEnoughCliques: return "NotEnoughCliques";
    case Errc::NoExtensions: return "NoExtensions";
    case Errc::Degenerate: return "Degenerate";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::ReductionFailed: return "ReductionFailed";
    case Errc::RegularityNotCertified: return "RegularityNotCertified";
    case Errc::BadParams: return "BadParams";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace blowup
