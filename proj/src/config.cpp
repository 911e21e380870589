#include "mtp/config.hpp"

#include <cstdlib>
#include <string>

#include "mtp/error.hpp"

namespace mtp {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (...) {
      throw Error(ErrorKind::InvalidInput, std::string("bad value for ") + name);
    }
  }
  return fallback;
}

Guards& mutable_guards() {
  static Guards g = [] {
    Guards d;
    d.max_elements = env_or("MTP_MAX_ELEMENTS", d.max_elements);
    d.max_candidates = env_or("MTP_MAX_CANDIDATES", d.max_candidates);
    return d;
  }();
  return g;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotFrameMorphism: return "NotFrameMorphism";
    case ErrorKind::NotBoundedLatticeHom: return "NotBoundedLatticeHom";
    case ErrorKind::InvalidMTAlgebra: return "InvalidMTAlgebra";
    case ErrorKind::NotMTMorphism: return "NotMTMorphism";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::NotSlicing: return "NotSlicing";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotD: return "NotD";
    case ErrorKind::TargetNotTD: return "TargetNotTD";
    case ErrorKind::SourceNotTD: return "SourceNotTD";
    case ErrorKind::NotLocallyClosedMap: return "NotLocallyClosedMap";
    case ErrorKind::NotProximityMorphism: return "NotProximityMorphism";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

const Guards& guards() { return mutable_guards(); }

void set_guards(const Guards& g) { mutable_guards() = g; }

void check_carrier_size(std::size_t count, const char* what) {
  if (count > guards().max_elements) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " has " + std::to_string(count) +
                                         " elements, guard is " +
                                         std::to_string(guards().max_elements));
  }
}

}  // namespace mtp
