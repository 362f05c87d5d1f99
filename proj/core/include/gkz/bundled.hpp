#pragma once

#include "gkz/triangulation.hpp"

namespace gkz {

// The small configurations every check runs on, with their named
// triangulation heights and flip pairs.
struct BundledConfig {
  std::string name;
  PointConfiguration config;
  // name -> height vector
  std::vector<std::pair<std::string, QVec>> heights;
  // flip name -> (plus triangulation, minus triangulation)
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> flips;
};

BundledConfig bundled_a1();
BundledConfig bundled_a2();
BundledConfig bundled_conifold();
BundledConfig bundled_simplex(size_t d);

Triangulation bundled_triangulation(const BundledConfig& b, const std::string& name);

}  // namespace gkz
