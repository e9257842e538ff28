#ifndef FITRES_ERRORS_HPP
#define FITRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fitres {

enum class Err {
  InvalidScalar,
  FieldMismatch,
  ArityMismatch,
  NonHomogeneous,
  NotArtinian,
  CapTooLow,
  NameClash,
  NotMinimal,
  DepthTooLow,
  HypothesisViolated,
  TrackingLost,
  SpliceBroken,
  LiftBroken,
  NotAComplex,
  BadEmbedding,
  InvalidUnit,
  CharTwo,
  ParseError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidScalar: return "InvalidScalar";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::NonHomogeneous: return "NonHomogeneous";
    case Err::NotArtinian: return "NotArtinian";
    case Err::CapTooLow: return "CapTooLow";
    case Err::NameClash: return "NameClash";
    case Err::NotMinimal: return "NotMinimal";
    case Err::DepthTooLow: return "DepthTooLow";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::TrackingLost: return "TrackingLost";
    case Err::SpliceBroken: return "SpliceBroken";
    case Err::LiftBroken: return "LiftBroken";
    case Err::NotAComplex: return "NotAComplex";
    case Err::BadEmbedding: return "BadEmbedding";
    case Err::InvalidUnit: return "InvalidUnit";
    case Err::CharTwo: return "CharTwo";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class EngineError : public std::runtime_error {
 public:
  EngineError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw EngineError(code, what); }

} // namespace fitres

#endif
