#pragma once

#include <stdexcept>
#include <string>

namespace jetample {

// Failure classes surfaced to callers. Every throw site picks the most
// specific code; the CLI maps any Error to exit code 1.
enum class Errc {
  Parse,
  DimensionMismatch,
  Signature,          // lattice fails the (1, rank-1) requirement
  NotPseudoeffective,
  IndefiniteSupport,  // Zariski support submatrix not negative definite
  IndefiniteGraph,    // resolution graph not negative definite
  NotConnected,
  NotMinimal,
  NotRationalSingularity,
  InfiniteColength,
  ExceededCap,        // truncation / enumeration budget exhausted without certificate
  DepthExceeded,
  NonRationalCenter,  // blow-up tree leaves the rational numbers
  NoPositiveCurves,
  MissingBlowupModel,
  NonCartierAdjoint,
  NonCartierOnNonGorenstein,
  NotNef,
  EmptyModel,         // operation needs a nonempty declared curve list
  Domain,             // generic precondition violation
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "Parse";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Signature: return "Signature";
    case Errc::NotPseudoeffective: return "NotPseudoeffective";
    case Errc::IndefiniteSupport: return "IndefiniteSupport";
    case Errc::IndefiniteGraph: return "IndefiniteGraph";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::NotRationalSingularity: return "NotRationalSingularity";
    case Errc::InfiniteColength: return "InfiniteColength";
    case Errc::ExceededCap: return "ExceededCap";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::NonRationalCenter: return "NonRationalCenter";
    case Errc::NoPositiveCurves: return "NoPositiveCurves";
    case Errc::MissingBlowupModel: return "MissingBlowupModel";
    case Errc::NonCartierAdjoint: return "NonCartierAdjoint";
    case Errc::NonCartierOnNonGorenstein: return "NonCartierOnNonGorenstein";
    case Errc::NotNef: return "NotNef";
    case Errc::EmptyModel: return "EmptyModel";
    case Errc::Domain: return "Domain";
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

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace jetample
