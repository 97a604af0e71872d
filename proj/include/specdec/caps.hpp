#pragma once

#include <cstddef>

namespace specdec {

// Upper bounds on group/ring orders for the exhaustive routines. Every
// routine that can blow up checks the relevant field and throws
// kOrderCapExceeded rather than running unbounded.
struct Caps {
  std::size_t group_order = 512;       // construction and validation
  std::size_t normal_enumeration = 128;
  std::size_t zero_divisor_scan = 512;
  std::size_t stable_enumeration = 32;
  std::size_t isomorphism = 512;
  std::size_t decomposition_oracle = 64;
  std::size_t ring_modular = 64;
  std::size_t ring_tables = 24;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace specdec
