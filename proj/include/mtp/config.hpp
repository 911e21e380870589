#pragma once

#include <cstddef>

namespace mtp {

/// Global size guards. Defaults may be overridden through the environment:
/// MTP_MAX_ELEMENTS and MTP_MAX_CANDIDATES.
struct Guards {
  std::size_t max_elements = std::size_t{1} << 16;
  std::size_t max_candidates = std::size_t{1} << 12;
};

const Guards& guards();
void set_guards(const Guards& g);

/// Throws TooLarge when `count` exceeds the element guard.
void check_carrier_size(std::size_t count, const char* what);

}  // namespace mtp
