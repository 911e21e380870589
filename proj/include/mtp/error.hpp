#pragma once

#include <stdexcept>
#include <string>

namespace mtp {

enum class ErrorKind {
  InvalidInput,
  NotALattice,
  NotDistributive,
  NotFrameMorphism,
  NotBoundedLatticeHom,
  InvalidMTAlgebra,
  NotMTMorphism,
  NotContinuous,
  NotT0,
  NotSlicing,
  NotSubalgebra,
  NotD,
  TargetNotTD,
  SourceNotTD,
  NotLocallyClosedMap,
  NotProximityMorphism,
  SourceTargetMismatch,
  TooLarge,
  InternalInconsistency,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Outcome of a law check. Failures carry a human-readable witness.
struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace mtp
