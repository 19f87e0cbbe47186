#pragma once

#include <random>

#include "boxcover/tower.hpp"

namespace fixture {

// X0..X2 explicit, X3 implicit.
inline const boxcover::Tower& tower() {
  static const boxcover::Tower t = boxcover::build_tower(3);
  return t;
}

inline const boxcover::MultiGraph& x1() { return tower().level(1).graph(); }
inline const boxcover::MultiGraph& x2() { return tower().level(2).graph(); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace fixture
