#include <doctest.h>

#include <cmath>

#include "gkz/bundled.hpp"
#include "gkz/secondary.hpp"

using namespace gkz;

TEST_CASE("series cones of the a1 triangulations") {
  auto a1 = bundled_a1();
  SUBCASE("fine: the total cone is the positive circuit ray") {
    auto T = bundled_triangulation(a1, "fine");
    auto S = build_series_cones(T);
    REQUIRE(S.nL == 1);
    CHECK_FALSE(S.degenerate);
    // relation basis is +-(1,-2,1); C_Sigma embeds to the h ray
    REQUIRE(S.total.size() >= 1);
    for (auto& g : S.total) {
      QVec amb = embed_from_L(*T.config, g);
      // ambient generator proportional to (1,-2,1) with positive first entry
      CHECK(amb[0] > 0);
      CHECK(amb[1] == -2 * amb[0]);
      CHECK(amb[2] == amb[0]);
    }
  }
  SUBCASE("coarse: the opposite ray") {
    auto T = bundled_triangulation(a1, "coarse");
    auto S = build_series_cones(T);
    for (auto& g : S.total) {
      QVec amb = embed_from_L(*T.config, g);
      CHECK(amb[0] < 0);
    }
  }
  SUBCASE("simplex configuration is degenerate") {
    auto s = bundled_simplex(3);
    auto T = bundled_triangulation(s, "only");
    CHECK(build_series_cones(T).degenerate);
  }
}

TEST_CASE("deep points clear the margin inequalities") {
  auto a1 = bundled_a1();
  auto T = bundled_triangulation(a1, "fine");
  auto S = build_series_cones(T);
  QVec c = choose_deep_point(S.total_dual, 1, S.total, *T.config);
  double log4n = std::log(12.0);
  for (auto& g : S.total) {
    QVec amb = embed_from_L(*T.config, g);
    double norm = 0;
    for (auto& x : amb) norm += std::abs(to_double(x));
    double rhs = (1.0 + log4n) * std::log(std::max(1.0, norm));
    CHECK(to_double(dotq(c, g)) >= rhs - 1e-12);
  }
}

TEST_CASE("domain membership is exact") {
  auto a1 = bundled_a1();
  auto T = bundled_triangulation(a1, "fine");
  auto S = build_series_cones(T);
  auto U = build_domain(*T.config, S.total, 1);

  auto mk = [&](const Rat& depth, const Rat& arg) {
    ZPoint z;
    // -log|z| = lift(offset) + depth * h
    z.mlog = lift_to_ambient(*T.config, U.offset);
    IVec h = ivec({1, -2, 1});
    for (size_t j = 0; j < 3; ++j) z.mlog[j] += depth * Rat(h[j]);
    z.arg_pi.assign(3, arg);
    return z;
  };
  SUBCASE("deep along h is inside") { CHECK(domain_contains(U, mk(1, rat(-1, 4)))); }
  SUBCASE("far on the wrong side is outside") {
    CHECK_FALSE(domain_contains(U, mk(-1, rat(-1, 4))));
  }
  SUBCASE("the exact boundary is refused") {
    CHECK_THROWS_WITH_AS(domain_contains(U, mk(0, rat(-1, 4))),
                         doctest::Contains("boundary"), gkz_error);
  }
  SUBCASE("args must be strictly inside the window") {
    ZPoint z = mk(1, Rat(0));
    CHECK_FALSE(domain_contains(U, z));
    z.arg_pi.assign(3, Rat(-1));
    CHECK_FALSE(domain_contains(U, z));
  }
  SUBCASE("double entry point") {
    ZPoint deep = mk(1, rat(-1, 4));
    CHECK(domain_contains(U, deep.values()));
  }
}

TEST_CASE("zpoint round trip") {
  std::vector<cplx> z = {std::polar(0.25, -0.7), std::polar(3.0, 2.0)};
  ZPoint p = zpoint_of(z);
  auto back = p.values();
  for (size_t j = 0; j < 2; ++j) CHECK(std::abs(back[j] - z[j]) < 1e-9);
  auto lz = p.log_values();
  CHECK(std::abs(std::exp(lz[0]) - z[0]) < 1e-9);
}

TEST_CASE("continuation paths") {
  auto a1 = bundled_a1();
  auto Tp = bundled_triangulation(a1, "fine");
  auto Tm = bundled_triangulation(a1, "coarse");
  auto c = find_circuit(Tp, Tm);

  SUBCASE("a1 flip: endpoints and the three conditions") {
    auto P = build_path(Tp, Tm, c);
    CHECK(P.A >= 1);  // may be raised to the smallest feasible bridge
    // A1: the moduli differ by exactly A h
    for (size_t j = 0; j < 3; ++j)
      CHECK(P.z_plus.mlog[j] - P.z_minus.mlog[j] == P.A * Rat(c.h[j]));
    // endpoints sit in their own convergence domains
    auto Up = build_domain(*Tp.config, build_series_cones(Tp).total, 1);
    auto Um = build_domain(*Tm.config, build_series_cones(Tm).total, 1);
    CHECK(domain_contains(Up, P.z_plus));
    CHECK(domain_contains(Um, P.z_minus));
    CHECK_FALSE(domain_contains(Um, P.z_plus));
    // A3: arg y strictly inside (-2 pi, 0), args inside (-pi, 0)
    CHECK(P.arg_y_pi > -2);
    CHECK(P.arg_y_pi < 0);
    for (auto& a : P.arg_pi) {
      CHECK(a > -1);
      CHECK(a < 0);
    }
    // arg y recomputed from the definition
    Rat Y = 0;
    for (int j : c.I_minus) Y += Rat(c.h[j]);
    for (size_t j = 0; j < 3; ++j) Y += Rat(c.h[j]) * P.arg_pi[j];
    CHECK(Y == P.arg_y_pi);
  }
  SUBCASE("conifold flip") {
    auto con = bundled_conifold();
    auto Cp = bundled_triangulation(con, "plus");
    auto Cm = bundled_triangulation(con, "minus");
    auto cc = find_circuit(Cp, Cm);
    auto P = build_path(Cp, Cm, cc);
    auto Up = build_domain(*Cp.config, build_series_cones(Cp).total, 1);
    auto Um = build_domain(*Cm.config, build_series_cones(Cm).total, 1);
    CHECK(domain_contains(Up, P.z_plus));
    CHECK(domain_contains(Um, P.z_minus));
    CHECK(P.arg_y_pi > -2);
    CHECK(P.arg_y_pi < 0);
  }
  SUBCASE("a2 interior flip") {
    auto a2 = bundled_a2();
    auto Tp2 = bundled_triangulation(a2, "fine");
    auto Tm2 = bundled_triangulation(a2, "mid");
    auto c2 = find_circuit(Tp2, Tm2);
    auto P = build_path(Tp2, Tm2, c2);
    auto Up = build_domain(*Tp2.config, build_series_cones(Tp2).total, 1);
    auto Um = build_domain(*Tm2.config, build_series_cones(Tm2).total, 1);
    CHECK(domain_contains(Up, P.z_plus));
    CHECK(domain_contains(Um, P.z_minus));
  }
  SUBCASE("A must be positive") {
    CHECK_THROWS_WITH_AS(build_path(Tp, Tm, c, 0), doctest::Contains("A > 0"), gkz_error);
  }
}
