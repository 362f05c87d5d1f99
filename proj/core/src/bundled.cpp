#include "gkz/bundled.hpp"

namespace gkz {

namespace {
QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}
}  // namespace

BundledConfig bundled_a1() {
  BundledConfig b;
  b.name = "a1";
  b.config = validate_configuration({ivec({1, 0}), ivec({1, 1}), ivec({1, 2})}, ivec({1, 0}));
  b.heights = {{"fine", q({0, -1, 0})}, {"coarse", q({0, 1, 0})}};
  b.flips = {{"resolution", {"fine", "coarse"}}};
  return b;
}

BundledConfig bundled_a2() {
  BundledConfig b;
  b.name = "a2";
  b.config = validate_configuration(
      {ivec({1, 0}), ivec({1, 1}), ivec({1, 2}), ivec({1, 3})}, ivec({1, 0}));
  b.heights = {{"fine", q({0, -1, -1, 0})},
               {"coarse", q({0, 1, 1, 0})},
               {"mid", q({0, -1, 1, 0})}};
  // interior flip on the circuit through v2, v3, v4
  b.flips = {{"interior", {"fine", "mid"}}};
  return b;
}

BundledConfig bundled_conifold() {
  BundledConfig b;
  b.name = "conifold";
  b.config = validate_configuration({ivec({1, 0, 0}), ivec({1, 1, 0}), ivec({1, 0, 1}),
                                     ivec({1, 1, 1})},
                                    ivec({1, 0, 0}));
  b.heights = {{"plus", q({0, 1, 1, 0})}, {"minus", q({1, 0, 0, 1})}};
  b.flips = {{"flop", {"plus", "minus"}}};
  return b;
}

BundledConfig bundled_simplex(size_t d) {
  BundledConfig b;
  b.name = "simplex" + std::to_string(d);
  std::vector<IVec> pts;
  for (size_t j = 0; j < d; ++j) {
    IVec p(d, Int(0));
    p[0] = 1;
    if (j > 0) p[j] = 1;
    pts.push_back(p);
  }
  IVec h(d, Int(0));
  h[0] = 1;
  b.config = validate_configuration(pts, h);
  b.heights = {{"only", QVec(d, Rat(0))}};
  return b;
}

Triangulation bundled_triangulation(const BundledConfig& b, const std::string& name) {
  for (auto& [nm, omega] : b.heights)
    if (nm == name) return regular_triangulation_lex(b.config, omega);
  throw gkz_error("UnknownTriangulation", name);
}

}  // namespace gkz
