#include <doctest.h>

#include "gkz/bundled.hpp"
#include "gkz/triangulation.hpp"

using namespace gkz;

static QVec heights(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

TEST_CASE("configuration validation") {
  auto a1 = bundled_a1();
  CHECK(a1.config.n() == 3);
  CHECK(a1.config.d() == 2);
  REQUIRE(a1.config.relation_basis.size() == 1);
  CHECK(a1.config.relation_basis[0] == ivec({1, -2, 1}));

  auto con = bundled_conifold();
  REQUIRE(con.config.relation_basis.size() == 1);
  CHECK(con.config.relation_basis[0] == ivec({1, -1, -1, 1}));

  SUBCASE("duplicate point rejected") {
    CHECK_THROWS_WITH_AS(
        validate_configuration({ivec({1, 0}), ivec({1, 0})}, ivec({1, 0})),
        doctest::Contains("DuplicatePoint"), gkz_error);
  }
  SUBCASE("non-graded configuration rejected") {
    CHECK_THROWS_WITH_AS(
        validate_configuration({ivec({1, 0}), ivec({2, 1})}, ivec({1, 0})),
        doctest::Contains("NotGraded"), gkz_error);
  }
  SUBCASE("sublattice configuration rejected") {
    CHECK_THROWS_WITH_AS(
        validate_configuration({ivec({1, 0}), ivec({1, 2})}, ivec({1, 0})),
        doctest::Contains("NotGenerating"), gkz_error);
  }
}

TEST_CASE("regular triangulations of the bundled configs") {
  auto a1 = bundled_a1();
  SUBCASE("a1 fine") {
    auto T = bundled_triangulation(a1, "fine");
    CHECK(T.cells == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(T.is_ray(0));
    CHECK(T.is_ray(1));
    CHECK(T.is_ray(2));
  }
  SUBCASE("a1 coarse") {
    auto T = bundled_triangulation(a1, "coarse");
    CHECK(T.cells == std::vector<std::vector<int>>{{0, 2}});
    CHECK(T.is_ray(0));
    CHECK_FALSE(T.is_ray(1));
  }
  SUBCASE("a2 heights") {
    auto a2 = bundled_a2();
    CHECK(bundled_triangulation(a2, "fine").cells ==
          std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(bundled_triangulation(a2, "coarse").cells ==
          std::vector<std::vector<int>>{{0, 3}});
    CHECK(bundled_triangulation(a2, "mid").cells ==
          std::vector<std::vector<int>>{{0, 1}, {1, 3}});
  }
  SUBCASE("conifold: the two small resolutions") {
    auto con = bundled_conifold();
    CHECK(bundled_triangulation(con, "plus").cells ==
          std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
    CHECK(bundled_triangulation(con, "minus").cells ==
          std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
  }
  SUBCASE("tie-broken zero height still triangulates") {
    // plain zero heights are degenerate for the conifold square...
    auto con = bundled_conifold();
    CHECK_THROWS_WITH_AS(regular_triangulation(con.config, QVec(4, Rat(0))),
                         doctest::Contains("DegenerateHeight"), gkz_error);
    // ...but the symbolic perturbation resolves the tie deterministically
    auto T = regular_triangulation_lex(con.config, QVec(4, Rat(0)));
    CHECK(T.cells.size() == 2);
    Int vol = 0;
    for (auto& cell : T.cells) {
      std::vector<IVec> vs;
      for (int j : cell) vs.push_back(con.config.points[j]);
      vol += lattice_index(vs);
    }
    CHECK(vol == normalized_volume(con.config));
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(bundled_a1().config) == 2);
  CHECK(normalized_volume(bundled_a2().config) == 3);
  CHECK(normalized_volume(bundled_conifold().config) == 2);
  CHECK(normalized_volume(bundled_simplex(3).config) == 1);
  CHECK(normalized_volume(bundled_simplex(4).config) == 1);
}

TEST_CASE("box elements") {
  auto a1 = bundled_a1();
  SUBCASE("coarse fan has one twisted sector") {
    auto F = bundled_triangulation(a1, "coarse").fan();
    auto box = box_elements(F);
    REQUIRE(box.size() == 2);
    CHECK(box[0].v == ivec({0, 0}));
    CHECK(box[0].sigma.empty());
    CHECK(box[1].v == ivec({1, 1}));
    CHECK(box[1].sigma == std::vector<int>{0, 2});
    CHECK(box[1].q == QVec{Rat(1, 2), Rat(0), Rat(1, 2)});
  }
  SUBCASE("fine fan is untwisted") {
    auto box = box_elements(bundled_triangulation(a1, "fine").fan());
    REQUIRE(box.size() == 1);
    CHECK(box[0].v == ivec({0, 0}));
  }
  SUBCASE("a2 coarse has two twisted sectors") {
    auto a2 = bundled_a2();
    auto box = box_elements(bundled_triangulation(a2, "coarse").fan());
    REQUIRE(box.size() == 3);
    CHECK(box[0].v == ivec({0, 0}));
    CHECK(box[1].v == ivec({1, 1}));
    CHECK(box[1].q == QVec{Rat(2, 3), Rat(0), Rat(0), Rat(1, 3)});
    CHECK(box[2].v == ivec({1, 2}));
    CHECK(box[2].q == QVec{Rat(1, 3), Rat(0), Rat(0), Rat(2, 3)});
  }
  SUBCASE("a2 mid has one twisted sector on the index-2 cell") {
    auto a2 = bundled_a2();
    auto box = box_elements(bundled_triangulation(a2, "mid").fan());
    REQUIRE(box.size() == 2);
    CHECK(box[1].v == ivec({1, 2}));
    CHECK(box[1].q == QVec{Rat(0), Rat(1, 2), Rat(0), Rat(1, 2)});
  }
  SUBCASE("both conifold resolutions are smooth") {
    auto con = bundled_conifold();
    CHECK(box_elements(bundled_triangulation(con, "plus").fan()).size() == 1);
    CHECK(box_elements(bundled_triangulation(con, "minus").fan()).size() == 1);
  }
}

TEST_CASE("circuits of adjacent triangulations") {
  SUBCASE("a1 resolution") {
    auto a1 = bundled_a1();
    auto Tp = bundled_triangulation(a1, "fine");
    auto Tm = bundled_triangulation(a1, "coarse");
    auto c = find_circuit(Tp, Tm);
    CHECK(c.h == ivec({1, -2, 1}));
    CHECK(c.I_plus == std::vector<int>{0, 2});
    CHECK(c.I_minus == std::vector<int>{1});
  }
  SUBCASE("conifold flop") {
    auto con = bundled_conifold();
    auto Tp = bundled_triangulation(con, "plus");
    auto Tm = bundled_triangulation(con, "minus");
    auto c = find_circuit(Tp, Tm);
    // the plus cells omit points 2 and 3, so those carry the positive signs
    CHECK(c.h == ivec({-1, 1, 1, -1}));
    CHECK(c.I_plus == std::vector<int>{1, 2});
    CHECK(c.I_minus == std::vector<int>{0, 3});
  }
  SUBCASE("a2 interior flip") {
    auto a2 = bundled_a2();
    auto c = find_circuit(bundled_triangulation(a2, "fine"),
                          bundled_triangulation(a2, "mid"));
    CHECK(c.h == ivec({0, 1, -2, 1}));
    CHECK(c.I_plus == std::vector<int>{1, 3});
    CHECK(c.I_minus == std::vector<int>{2});
  }
  SUBCASE("non-adjacent pair rejected") {
    auto a2 = bundled_a2();
    CHECK_THROWS_WITH_AS(find_circuit(bundled_triangulation(a2, "fine"),
                                      bundled_triangulation(a2, "coarse")),
                         doctest::Contains("NotAdjacent"), gkz_error);
  }
}

TEST_CASE("essential cones") {
  SUBCASE("a1: every cell is essential") {
    auto a1 = bundled_a1();
    auto Tp = bundled_triangulation(a1, "fine");
    auto Tm = bundled_triangulation(a1, "coarse");
    auto c = find_circuit(Tp, Tm);
    auto ep = essential_cones(Tp, c, true);
    CHECK(ep.cones == Tp.cells);
    for (auto& F : ep.separating) CHECK(F.empty());
    auto em = essential_cones(Tm, c, false);
    CHECK(em.cones == Tm.cells);
  }
  SUBCASE("conifold: every cell is essential") {
    auto con = bundled_conifold();
    auto Tp = bundled_triangulation(con, "plus");
    auto Tm = bundled_triangulation(con, "minus");
    auto c = find_circuit(Tp, Tm);
    CHECK(essential_cones(Tp, c, true).cones == Tp.cells);
    CHECK(essential_cones(Tm, c, false).cones == Tm.cells);
  }
  SUBCASE("a2: the cell away from the circuit is not essential") {
    auto a2 = bundled_a2();
    auto Tp = bundled_triangulation(a2, "fine");
    auto Tm = bundled_triangulation(a2, "mid");
    auto c = find_circuit(Tp, Tm);
    auto ep = essential_cones(Tp, c, true);
    CHECK(ep.cones == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    auto em = essential_cones(Tm, c, false);
    CHECK(em.cones == std::vector<std::vector<int>>{{1, 3}});
  }
}

TEST_CASE("hat fan") {
  SUBCASE("a1") {
    auto a1 = bundled_a1();
    auto Tp = bundled_triangulation(a1, "fine");
    auto Tm = bundled_triangulation(a1, "coarse");
    auto c = find_circuit(Tp, Tm);
    auto hf = hat_fan(Tp, Tm, c);
    // v-hat = v1 + v3 = 2*v2, a non-primitive generator
    CHECK(hf.v_hat == ivec({2, 2}));
    REQUIRE(hf.fan.vectors.size() == 4);
    CHECK(hf.fan.vectors[3] == hf.v_hat);
    CHECK(hf.fan.cones == std::vector<std::vector<int>>{{0, 3}, {2, 3}});
  }
  SUBCASE("conifold") {
    auto con = bundled_conifold();
    auto Tp = bundled_triangulation(con, "plus");
    auto Tm = bundled_triangulation(con, "minus");
    auto c = find_circuit(Tp, Tm);
    auto hf = hat_fan(Tp, Tm, c);
    CHECK(hf.v_hat == ivec({2, 1, 1}));
    // star subdivision of the cone over the square by the central ray
    CHECK(hf.fan.cones == std::vector<std::vector<int>>{
                              {0, 1, 4}, {0, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  }
  SUBCASE("a2: unessential cell survives") {
    auto a2 = bundled_a2();
    auto Tp = bundled_triangulation(a2, "fine");
    auto Tm = bundled_triangulation(a2, "mid");
    auto c = find_circuit(Tp, Tm);
    auto hf = hat_fan(Tp, Tm, c);
    CHECK(hf.v_hat == ivec({2, 4}));
    CHECK(hf.fan.cones == std::vector<std::vector<int>>{{0, 1}, {1, 4}, {3, 4}});
  }
}

TEST_CASE("quotient fan") {
  auto a1 = bundled_a1();
  SUBCASE("quotient by the trivial cone is the fan itself") {
    auto F = bundled_triangulation(a1, "coarse").fan();
    auto Q = quotient_fan(F, {});
    CHECK(Q.dim == F.dim);
    CHECK(Q.cones == F.cones);
  }
  SUBCASE("quotient by a maximal cone is a point") {
    auto F = bundled_triangulation(a1, "coarse").fan();
    auto Q = quotient_fan(F, {0, 2});
    CHECK(Q.dim == 0);
  }
  SUBCASE("conifold quotient by a ray is a one dimensional fan") {
    auto F = bundled_triangulation(bundled_conifold(), "plus").fan();
    auto Q = quotient_fan(F, {0});
    CHECK(Q.dim == 2);
    // rays are the images of the points compatible with {0}
    for (auto& cone : Q.cones) CHECK(cone.size() == 2);
  }
}
